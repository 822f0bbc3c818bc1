#include "cedga/spun.hpp"
#include "cedga/error.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

namespace cedga {

Rational default_spin_eps(const DGA& a) {
    if (a.gens.empty())
        return Rational(1, 100);
    Rational m = a.gens.front().length;
    for (const auto& g : a.gens)
        m = std::min(m, g.length);
    return m / 100;
}

NCPoly apply_derivation(const DGA& a, const std::vector<NCPoly>& phi, const std::vector<NCPoly>& on_generators,
                        const NCPoly& x) {
    NCPoly out(a.p);
    const PrimeField& F = out.field();
    for (const auto& [key, c] : x.terms()) {
        NCPoly prefix = NCPoly::constant(a.p, c, key.mu, key.lambda);
        int prefix_degree = 0;
        const Word& w = key.word;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i] >= on_generators.size() || w[i] >= phi.size())
                throw Error(ErrorCode::UndeclaredGenerator, "derivation undefined on generator id " + std::to_string(w[i]));
            NCPoly suffix = NCPoly::monomial(a.p, Word(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end()));
            NCPoly term = prefix * on_generators[w[i]] * suffix;
            if (prefix_degree % 2 != 0)
                term = term.scaled({F.minus_one(), 0, 0});
            out += term;
            prefix = prefix * phi[w[i]];
            prefix_degree += a.gens[w[i]].degree;
        }
    }
    return out;
}

DGAMorphism homotopy_endomorphism(const DGA& a, const std::vector<NCPoly>& K) {
    if (K.size() != a.size())
        throw Error(ErrorCode::InvalidLoop, "homotopy must be given on every generator");
    for (GenId g = 0; g < a.size(); ++g)
        for (const auto& [key, c] : K[g].terms())
            if (a.term_degree(key) != a.gens[g].degree + 1)
                throw Error(ErrorCode::InvalidLoop, "homotopy image of '" + a.gens[g].name + "' has the wrong degree");
    std::vector<GenId> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](GenId x, GenId y) { return a.gens[x].length < a.gens[y].length; });
    std::vector<NCPoly> phi(a.size(), NCPoly(a.p));
    std::vector<bool> done(a.size(), false);
    for (GenId x : order) {
        for (const Word& w : a.d[x].words())
            for (GenId y : w)
                if (!done[y])
                    throw Error(ErrorCode::InvalidLoop, "differential of '" + a.gens[x].name +
                                                            "' is not filtered by length; cannot build the endomorphism");
        phi[x] = a.gen(x) + apply_differential(a, K[x]) + apply_derivation(a, phi, K, a.d[x]);
        done[x] = true;
    }
    DGAMorphism f{&a, &a, std::move(phi)};
    return f;
}

SpunDGA twist_spun_dga(const DGA& a, const DGAMorphism& phi, int lambda_twist, std::optional<Rational> eps) {
    if (!phi.source || !phi.target || !(*phi.source == a) || !(*phi.target == a))
        throw Error(ErrorCode::InvalidLoop, "loop endomorphism must have the knot DGA as source and target");
    if (auto bad = check_morphism(phi); !bad.empty())
        throw Error(ErrorCode::InvalidLoop, "loop endomorphism fails at generator '" + a.gens[bad.front()].name + "'");
    SpunDGA s;
    s.source = a;
    s.phi = phi.images;
    s.lambda_twist = lambda_twist;
    s.eps = eps.value_or(default_spin_eps(a));
    if (s.eps <= 0)
        throw Error(ErrorCode::NotInRegime, "hat length offset must be positive");

    const std::size_t n = a.size();
    DGA& D = s.dga;
    D.p = a.p;
    D.name = a.name + "-spun";
    D.mu_degree = a.mu_degree;
    D.lambda_degree = a.lambda_degree;
    for (const auto& g : a.gens)
        D.add_generator(g);
    for (const auto& g : a.gens)
        D.add_generator({g.name + "^", g.degree + 1, g.length + s.eps});
    for (GenId x = 0; x < n; ++x)
        D.d[x] = a.d[x];

    std::vector<NCPoly> hats;
    for (GenId x = 0; x < n; ++x)
        hats.push_back(D.gen(s.hat(x)));
    std::vector<NCPoly> images(n, NCPoly(a.p));
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            auto x = static_cast<GenId>(i);
            NCPoly twist = (s.phi[x] - a.gen(x)).scaled({1, 0, lambda_twist});
            images[x] = twist - apply_derivation(D, s.phi, hats, a.d[x]);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    for (GenId x = 0; x < n; ++x)
        D.d[s.hat(x)] = std::move(images[x]);

    if (auto bad = check_d_squared(D); !bad.empty())
        throw Error(ErrorCode::InternalConsistency, "spun differential squares to a nonzero element at '" +
                                                        D.gens[bad.front()].name + "'");
    return s;
}

bool verify_inclusion(const SpunDGA& s) {
    const std::size_t n = s.n();
    if (s.dga.size() < n || s.dga.p != s.source.p)
        return false;
    for (GenId x = 0; x < n; ++x) {
        if (!(s.dga.gens[x] == s.source.gens[x]))
            return false;
        for (const auto& [key, c] : s.dga.d[x].terms()) {
            if (key.lambda != 0)
                return false;
            for (GenId g : key.word)
                if (g >= n)
                    return false;
        }
        if (!(s.dga.d[x] == s.source.d[x]))
            return false;
    }
    return true;
}

} // namespace cedga
