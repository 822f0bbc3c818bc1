#include "cedga/augment.hpp"
#include "cedga/error.hpp"

#include <algorithm>

namespace cedga {

namespace {

struct Term {
    Fp c;
    std::vector<std::uint32_t> vars;
};

/// Differentials evaluated at (mu0, lambda0), with words over the free variables.
struct Constraints {
    const PrimeField F;
    std::vector<std::uint32_t> free_gens;
    std::vector<std::vector<Term>> equations;
    std::uint64_t total = 1;

    Constraints(const DGA& a, std::uint32_t p, Fp mu0, Fp lambda0, bool graded, std::uint64_t bound) : F(p) {
        if (a.p != p)
            throw Error(ErrorCode::RingMismatch, "DGA '" + a.name + "' is over F_" + std::to_string(a.p) +
                                                     ", augmentations requested over F_" + std::to_string(p));
        std::vector<int> var_of(a.size(), -1);
        for (GenId g = 0; g < a.size(); ++g) {
            if (graded && a.gens[g].degree != 0)
                continue;
            var_of[g] = static_cast<int>(free_gens.size());
            free_gens.push_back(g);
        }
        for (std::size_t i = 0; i < free_gens.size(); ++i) {
            if (total > bound / p)
                throw Error(ErrorCode::ResourceLimit, "augmentation search space " + std::to_string(p) + "^" +
                                                          std::to_string(free_gens.size()) + " exceeds the bound " +
                                                          std::to_string(bound));
            total *= p;
        }
        if (total > bound)
            throw Error(ErrorCode::ResourceLimit, "augmentation search space exceeds the bound " + std::to_string(bound));
        for (GenId g = 0; g < a.size(); ++g) {
            NCPoly ev = eval_coefficients(a.d[g], mu0, lambda0);
            std::vector<Term> eq;
            for (const auto& [key, c] : ev.terms()) {
                Term t{c, {}};
                bool alive = true;
                for (GenId x : key.word) {
                    if (var_of[x] < 0) {
                        alive = false;
                        break;
                    }
                    t.vars.push_back(static_cast<std::uint32_t>(var_of[x]));
                }
                if (alive)
                    eq.push_back(std::move(t));
            }
            if (!eq.empty())
                equations.push_back(std::move(eq));
        }
    }

    void decode(std::uint64_t idx, std::vector<Fp>& x) const {
        const std::uint32_t p = F.characteristic();
        for (std::size_t i = free_gens.size(); i-- > 0;) {
            x[i] = static_cast<Fp>(idx % p);
            idx /= p;
        }
    }

    bool satisfied(const std::vector<Fp>& x) const {
        for (const auto& eq : equations) {
            Fp s = 0;
            for (const Term& t : eq) {
                Fp v = t.c;
                for (std::uint32_t i : t.vars) {
                    v = F.mul(v, x[i]);
                    if (v == 0)
                        break;
                }
                s = F.add(s, v);
            }
            if (s != 0)
                return false;
        }
        return true;
    }

    Augmentation make(const DGA& a, std::uint64_t idx, Fp mu0, Fp lambda0, bool graded) const {
        std::vector<Fp> x(free_gens.size());
        decode(idx, x);
        Augmentation e{F.characteristic(), mu0, lambda0, std::vector<Fp>(a.size(), 0), graded};
        for (std::size_t i = 0; i < free_gens.size(); ++i)
            e.values[free_gens[i]] = x[i];
        return e;
    }
};

void check_point(std::uint32_t p, Fp mu0, Fp lambda0) {
    if (mu0 % p == 0 || lambda0 % p == 0)
        throw Error(ErrorCode::InvalidPoint, "mu and lambda must be sent to nonzero elements");
}

} // namespace

std::vector<Augmentation> find_augmentations(const DGA& a, std::uint32_t p, Fp mu0, Fp lambda0, bool graded,
                                             std::uint64_t bound) {
    check_point(p, mu0, lambda0);
    mu0 %= p;
    lambda0 %= p;
    const Constraints C(a, p, mu0, lambda0, graded, bound);
    const auto total = static_cast<std::int64_t>(C.total);
    std::vector<std::uint64_t> hits;
#pragma omp parallel
    {
        std::vector<std::uint64_t> local;
        std::vector<Fp> x(C.free_gens.size());
#pragma omp for schedule(static) nowait
        for (std::int64_t idx = 0; idx < total; ++idx) {
            C.decode(static_cast<std::uint64_t>(idx), x);
            if (C.satisfied(x))
                local.push_back(static_cast<std::uint64_t>(idx));
        }
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
    std::vector<Augmentation> out;
    out.reserve(hits.size());
    for (std::uint64_t idx : hits)
        out.push_back(C.make(a, idx, mu0, lambda0, graded));
    return out;
}

std::vector<Augmentation> find_augmentations_serial(const DGA& a, std::uint32_t p, Fp mu0, Fp lambda0, bool graded,
                                                    std::uint64_t bound) {
    check_point(p, mu0, lambda0);
    mu0 %= p;
    lambda0 %= p;
    const Constraints C(a, p, mu0, lambda0, graded, bound);
    std::vector<Augmentation> out;
    std::vector<Fp> x(C.free_gens.size());
    for (std::uint64_t idx = 0; idx < C.total; ++idx) {
        C.decode(idx, x);
        if (C.satisfied(x))
            out.push_back(C.make(a, idx, mu0, lambda0, graded));
    }
    return out;
}

bool has_augmentation(const DGA& a, Fp mu0, Fp lambda0, bool graded, std::uint64_t bound) {
    check_point(a.p, mu0, lambda0);
    const Constraints C(a, a.p, mu0 % a.p, lambda0 % a.p, graded, bound);
    std::vector<Fp> x(C.free_gens.size());
    for (std::uint64_t idx = 0; idx < C.total; ++idx) {
        C.decode(idx, x);
        if (C.satisfied(x))
            return true;
    }
    return false;
}

Fp evaluate(const DGA& a, const Augmentation& e, const NCPoly& x) {
    if (e.values.size() != a.size() || e.p != a.p)
        throw Error(ErrorCode::AugmentationMismatch, "augmentation does not match DGA '" + a.name + "'");
    const PrimeField F(a.p);
    Fp s = 0;
    const NCPoly ev = eval_coefficients(x, e.mu0, e.lambda0);
    for (const auto& [key, c] : ev.terms()) {
        Fp v = c;
        for (GenId g : key.word)
            v = F.mul(v, e.values[g]);
        s = F.add(s, v);
    }
    return s;
}

bool is_augmentation(const DGA& a, const Augmentation& e) {
    if (e.values.size() != a.size() || e.p != a.p)
        return false;
    for (GenId g = 0; g < a.size(); ++g) {
        if (e.values[g] >= a.p)
            return false;
        if (e.graded && a.gens[g].degree != 0 && e.values[g] != 0)
            return false;
        if (evaluate(a, e, a.d[g]) != 0)
            return false;
    }
    return true;
}

std::uint64_t graded_candidates_by_degree(const DGA& a, std::uint32_t p) {
    std::uint64_t n = 1;
    for (const auto& g : a.gens)
        if (g.degree == 0)
            n *= p;
    return n;
}

std::uint64_t graded_candidates_by_degree(const ChordInventory& inv, std::uint32_t p) {
    std::uint64_t n = 1;
    for (const auto& c : inv.chords)
        if (c.degree == 0)
            n *= p;
    return n;
}

Augmentation restrict_augmentation(const Augmentation& e, std::size_t n) {
    Augmentation r = e;
    r.values.resize(std::min(n, e.values.size()));
    return r;
}

} // namespace cedga
