#include "cedga/dga.hpp"
#include "cedga/error.hpp"

#include <sstream>

namespace cedga {

std::optional<GenId> DGA::find(const std::string& gen_name) const {
    for (GenId i = 0; i < gens.size(); ++i)
        if (gens[i].name == gen_name)
            return i;
    return std::nullopt;
}

GenId DGA::index(const std::string& gen_name) const {
    if (auto g = find(gen_name))
        return *g;
    throw Error(ErrorCode::UndeclaredGenerator, "undeclared generator '" + gen_name + "'");
}

GenId DGA::add_generator(ChordGen g) {
    if (find(g.name))
        throw Error(ErrorCode::Format, "duplicate generator '" + g.name + "'");
    if (g.length <= 0)
        throw Error(ErrorCode::NonPositiveLength, "generator '" + g.name + "' has non-positive length");
    gens.push_back(std::move(g));
    d.emplace_back(p);
    return static_cast<GenId>(gens.size() - 1);
}

int DGA::word_degree(const Word& w) const {
    int deg = 0;
    for (GenId g : w) {
        if (g >= gens.size())
            throw Error(ErrorCode::UndeclaredGenerator, "generator id " + std::to_string(g) + " out of range");
        deg += gens[g].degree;
    }
    return deg;
}

int DGA::term_degree(const TermKey& t) const {
    return word_degree(t.word) + t.mu * mu_degree + t.lambda * lambda_degree;
}

Rational DGA::word_length(const Word& w) const {
    Rational len{0};
    for (GenId g : w)
        len += gens.at(g).length;
    return len;
}

std::string DGA::word_name(const Word& w) const {
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += gens.at(w[i]).name;
    }
    return s;
}

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b) { return a * b; }

NCPoly extend_leibniz(const DGA& dga, const Word& w) {
    NCPoly out(dga.p);
    const PrimeField& F = out.field();
    int prefix_degree = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        GenId g = w[i];
        if (g >= dga.gens.size() || g >= dga.d.size())
            throw Error(ErrorCode::UndeclaredGenerator, "generator id " + std::to_string(g) + " has no differential");
        const NCPoly& dg = dga.d[g];
        if (dg.characteristic() != dga.p)
            throw Error(ErrorCode::RingMismatch, "differential of '" + dga.gens[g].name + "' has wrong characteristic");
        Fp sign = (prefix_degree % 2 != 0) ? F.minus_one() : 1;
        for (const auto& [key, c] : dg.terms()) {
            Word nw;
            nw.reserve(w.size() - 1 + key.word.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
            nw.insert(nw.end(), key.word.begin(), key.word.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
            out.add_term(std::move(nw), F.mul(sign, c), key.mu, key.lambda);
        }
        prefix_degree += dga.gens[g].degree;
    }
    return out;
}

NCPoly apply_differential(const DGA& dga, const NCPoly& x) {
    if (x.characteristic() != dga.p)
        throw Error(ErrorCode::RingMismatch, "element and DGA have different characteristic");
    NCPoly out(dga.p);
    for (const auto& [key, c] : x.terms()) {
        if (key.word.empty())
            continue;
        out += extend_leibniz(dga, key.word).scaled({c, key.mu, key.lambda});
    }
    return out;
}

std::vector<GenId> check_d_squared(const DGA& dga) {
    std::vector<GenId> bad;
    for (GenId g = 0; g < dga.gens.size(); ++g)
        if (!apply_differential(dga, dga.d[g]).is_zero())
            bad.push_back(g);
    return bad;
}

std::vector<LawViolation> check_degree_law(const DGA& dga) {
    std::vector<LawViolation> bad;
    for (GenId g = 0; g < dga.gens.size(); ++g)
        for (const auto& [key, c] : dga.d[g].terms())
            if (dga.term_degree(key) != dga.gens[g].degree - 1)
                bad.push_back({g, key.word});
    return bad;
}

std::vector<LawViolation> check_action_law(const DGA& dga) {
    std::vector<LawViolation> bad;
    for (GenId g = 0; g < dga.gens.size(); ++g)
        for (const Word& w : dga.d[g].words())
            if (!(dga.word_length(w) < dga.gens[g].length))
                bad.push_back({g, w});
    return bad;
}

DGAMorphism identity_morphism(const DGA& dga) {
    DGAMorphism f{&dga, &dga, {}};
    for (GenId g = 0; g < dga.gens.size(); ++g)
        f.images.push_back(dga.gen(g));
    return f;
}

NCPoly apply_morphism(const DGAMorphism& f, const NCPoly& x) {
    const std::uint32_t p = f.target->p;
    if (x.characteristic() != p)
        throw Error(ErrorCode::RingMismatch, "element and morphism target have different characteristic");
    NCPoly out(p);
    for (const auto& [key, c] : x.terms()) {
        NCPoly term = NCPoly::constant(p, c, key.mu, key.lambda);
        for (GenId g : key.word) {
            if (g >= f.images.size())
                throw Error(ErrorCode::UndeclaredGenerator, "morphism has no image for generator id " + std::to_string(g));
            term = term * f.images[g];
            if (term.is_zero())
                break;
        }
        out += term;
    }
    return out;
}

DGAMorphism compose(const DGAMorphism& g, const DGAMorphism& f) {
    DGAMorphism h{f.source, g.target, {}};
    for (const NCPoly& img : f.images)
        h.images.push_back(apply_morphism(g, img));
    return h;
}

std::vector<GenId> check_morphism(const DGAMorphism& f) {
    if (!f.source || !f.target)
        throw Error(ErrorCode::InvalidLoop, "morphism without source or target");
    if (f.source->p != f.target->p)
        throw Error(ErrorCode::RingMismatch, "morphism between different characteristics");
    std::vector<GenId> bad;
    const DGA& src = *f.source;
    const DGA& tgt = *f.target;
    if (f.images.size() != src.gens.size()) {
        for (GenId g = static_cast<GenId>(f.images.size()); g < src.gens.size(); ++g)
            bad.push_back(g);
        return bad;
    }
    for (GenId g = 0; g < src.gens.size(); ++g) {
        bool ok = true;
        for (const auto& [key, c] : f.images[g].terms())
            if (tgt.term_degree(key) != src.gens[g].degree)
                ok = false;
        if (ok)
            ok = apply_morphism(f, src.d[g]) == apply_differential(tgt, f.images[g]);
        if (!ok)
            bad.push_back(g);
    }
    return bad;
}

NCPoly eval_coefficients(const NCPoly& x, Fp mu0, Fp lambda0) {
    const PrimeField& F = x.field();
    mu0 %= F.characteristic();
    lambda0 %= F.characteristic();
    if (mu0 == 0 || lambda0 == 0)
        throw Error(ErrorCode::InvalidPoint, "mu and lambda must be evaluated at nonzero field elements");
    NCPoly out(F.characteristic());
    for (const auto& [key, c] : x.terms())
        out.add_term(Word(key.word), F.mul(c, F.mul(F.pow(mu0, key.mu), F.pow(lambda0, key.lambda))), 0, 0);
    return out;
}

std::string to_string(const DGA& dga, const NCPoly& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    const PrimeField& F = x.field();
    for (const auto& [key, c] : x.terms()) {
        std::int64_t v = F.lift(c);
        if (!first)
            os << (v < 0 ? " - " : " + ");
        else if (v < 0)
            os << "-";
        first = false;
        std::int64_t a = v < 0 ? -v : v;
        std::string coef;
        if (key.mu != 0)
            coef += key.mu == 1 ? "mu" : "mu^" + std::to_string(key.mu);
        if (key.lambda != 0) {
            if (!coef.empty())
                coef += " ";
            coef += key.lambda == 1 ? "lambda" : "lambda^" + std::to_string(key.lambda);
        }
        std::string word = key.word.empty() ? "" : dga.word_name(key.word);
        std::string body = coef;
        if (!word.empty())
            body += (body.empty() ? "" : " ") + word;
        if (a != 1 || body.empty())
            os << a << (body.empty() ? "" : " ");
        os << body;
    }
    return os.str();
}

} // namespace cedga
