#pragma once

#include "cedga/field.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace cedga {

using GenId = std::uint32_t;
/// A word in the generators; the empty word is the unit.
using Word = std::vector<GenId>;

/// c * mu^mu * lambda^lambda with c a nonzero element of F_p.
struct CoefMonomial {
    Fp c = 1;
    std::int32_t mu = 0;
    std::int32_t lambda = 0;

    friend bool operator==(const CoefMonomial&, const CoefMonomial&) = default;
};

/// Shortlex order: the unit first, then shorter words, then lexicographic.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const noexcept {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

struct TermKey {
    Word word;
    std::int32_t mu = 0;
    std::int32_t lambda = 0;
};

struct TermKeyLess {
    bool operator()(const TermKey& a, const TermKey& b) const noexcept {
        if (a.word != b.word)
            return WordLess{}(a.word, b.word);
        if (a.mu != b.mu)
            return a.mu < b.mu;
        return a.lambda < b.lambda;
    }
};

/// Element of the free algebra over F_p[mu^±1, lambda^±1].
///
/// Stored fully reduced: one entry per (word, mu-exponent, lambda-exponent)
/// with a nonzero coefficient, in canonical order, so structural equality is
/// algebraic equality.
class NCPoly {
public:
    using Terms = std::map<TermKey, Fp, TermKeyLess>;

    explicit NCPoly(std::uint32_t p = 2) : field_(p) {}

    static NCPoly unit(std::uint32_t p) { return constant(p, 1); }
    static NCPoly constant(std::uint32_t p, std::int64_t c, std::int32_t mu = 0,
                           std::int32_t lambda = 0);
    static NCPoly monomial(std::uint32_t p, Word w, std::int64_t c = 1, std::int32_t mu = 0,
                           std::int32_t lambda = 0);
    static NCPoly generator(std::uint32_t p, GenId g) { return monomial(p, Word{g}); }

    std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
    const PrimeField& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Adds c * mu^i lambda^j * w, cancelling to zero where needed.
    void add_term(const Word& w, const CoefMonomial& m);
    void add_term(Word&& w, Fp c, std::int32_t mu, std::int32_t lambda);

    /// The coefficient of w, as a list of monomials in mu and lambda.
    std::vector<CoefMonomial> coefficient(const Word& w) const;
    /// Distinct words carrying a nonzero coefficient, in canonical order.
    std::vector<Word> words() const;

    NCPoly& operator+=(const NCPoly& o);
    NCPoly& operator-=(const NCPoly& o);
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }
    NCPoly scaled(const CoefMonomial& m) const;
    NCPoly operator-() const;

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.characteristic() == b.characteristic() && a.terms_ == b.terms_;
    }

private:
    void require_same_ring(const NCPoly& o) const;

    PrimeField field_;
    Terms terms_;
};

inline bool operator==(const TermKey& a, const TermKey& b) {
    return a.word == b.word && a.mu == b.mu && a.lambda == b.lambda;
}

/// Rebuilds p in canonical form (idempotent).
NCPoly normalize(const NCPoly& p);

} // namespace cedga
