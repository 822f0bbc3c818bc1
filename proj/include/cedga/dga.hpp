#pragma once

#include "cedga/ncpoly.hpp"
#include "cedga/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cedga {

/// A Reeb chord generator.
struct ChordGen {
    std::string name;
    int degree = 0;
    Rational length{1};

    friend bool operator==(const ChordGen&, const ChordGen&) = default;
};

struct DGA {
    std::uint32_t p = 2;
    std::string name;
    std::vector<ChordGen> gens;
    /// d[g] is the differential of generator g.
    std::vector<NCPoly> d;
    /// Degrees carried by mu and lambda (zero for vanishing Maslov class).
    int mu_degree = 0;
    int lambda_degree = 0;

    std::size_t size() const noexcept { return gens.size(); }
    std::optional<GenId> find(const std::string& gen_name) const;
    /// Like find, but throws UndeclaredGenerator.
    GenId index(const std::string& gen_name) const;
    GenId add_generator(ChordGen g);
    NCPoly gen(GenId g) const { return NCPoly::generator(p, g); }
    NCPoly zero() const { return NCPoly(p); }
    NCPoly one() const { return NCPoly::unit(p); }

    int word_degree(const Word& w) const;
    int term_degree(const TermKey& t) const;
    Rational word_length(const Word& w) const;
    std::string word_name(const Word& w) const;

    friend bool operator==(const DGA&, const DGA&) = default;
};

NCPoly nc_multiply(const NCPoly& a, const NCPoly& b);

/// Graded Leibniz extension of the generator differentials to a word.
NCPoly extend_leibniz(const DGA& dga, const Word& w);
/// Linear extension of extend_leibniz.
NCPoly apply_differential(const DGA& dga, const NCPoly& x);

/// Generators g with d(d(g)) != 0.
std::vector<GenId> check_d_squared(const DGA& dga);

struct LawViolation {
    GenId gen = 0;
    Word word;
};

/// Terms of d(g) whose degree is not |g| - 1.
std::vector<LawViolation> check_degree_law(const DGA& dga);
/// Words of d(g) whose total length is not strictly below the length of g.
std::vector<LawViolation> check_action_law(const DGA& dga);

struct DGAMorphism {
    const DGA* source = nullptr;
    const DGA* target = nullptr;
    std::vector<NCPoly> images;
};

DGAMorphism identity_morphism(const DGA& dga);
/// Extends f multiplicatively; coefficients pass through unchanged.
NCPoly apply_morphism(const DGAMorphism& f, const NCPoly& x);
DGAMorphism compose(const DGAMorphism& g, const DGAMorphism& f);
/// Generators where f fails to commute with the differentials or to preserve degree.
std::vector<GenId> check_morphism(const DGAMorphism& f);

/// Substitutes mu -> mu0 and lambda -> lambda0.
NCPoly eval_coefficients(const NCPoly& x, Fp mu0, Fp lambda0);

std::string to_string(const DGA& dga, const NCPoly& x);

} // namespace cedga
