#pragma once

#include "cedga/augment.hpp"
#include "cedga/dga.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cedga {

/// Commutative Laurent polynomial in mu, lambda with integer coefficients.
struct LocusPolynomial {
    std::map<std::pair<int, int>, long long> terms;

    /// Parses "1[0,0] + 1[0,1] - 2[1,1]": coefficient[mu-exponent,lambda-exponent].
    static LocusPolynomial parse(const std::string& text);
    std::string to_string() const;
    bool is_zero() const { return terms.empty(); }
    Fp evaluate(const PrimeField& F, Fp mu0, Fp lambda0) const;

    friend LocusPolynomial operator*(const LocusPolynomial& a, const LocusPolynomial& b);
    friend bool operator==(const LocusPolynomial&, const LocusPolynomial&) = default;
};

using TorusPoint = std::pair<Fp, Fp>;

struct TorusPointSet {
    std::uint32_t q = 5;
    std::vector<TorusPoint> points;
    std::string provenance;

    friend bool operator==(const TorusPointSet&, const TorusPointSet&) = default;
};

TorusPointSet polynomial_locus(const LocusPolynomial& f, std::uint32_t q);
TorusPointSet polynomial_locus_serial(const LocusPolynomial& f, std::uint32_t q);

/// Points (mu0, lambda0) admitting a graded augmentation. The DGA must be over F_q.
TorusPointSet augmentation_points(const DGA& a, std::uint32_t q, bool graded = true,
                                  std::uint64_t bound = kDefaultSearchBound);
TorusPointSet augmentation_points_serial(const DGA& a, std::uint32_t q, bool graded = true,
                                         std::uint64_t bound = kDefaultSearchBound);

enum class Containment { Contained, NotContained, Empty };

const char* to_string(Containment c);

struct ContainmentResult {
    Containment verdict = Containment::Empty;
    std::optional<TorusPoint> witness;
};

/// Whether every point has mu0 = -1.
ContainmentResult line_containment(const TorusPointSet& s);

TorusPointSet intersect_line(const TorusPointSet& s);

/// (mu, lambda) -> (mu^a lambda^b, mu^c lambda^d) for the integer matrix [[a, b], [c, d]].
using BasisChange = std::array<int, 4>;

TorusPointSet change_basis(const TorusPointSet& s, const BasisChange& m);

struct BasisScan {
    std::size_t matrices_tried = 0;
    std::optional<BasisChange> containing;
};

/// Looks for a unimodular change of basis with entries in [-bound, bound]
/// moving the set into the line. Not exhaustive beyond the bound.
BasisScan scan_basis_changes(const TorusPointSet& s, int bound);

} // namespace cedga
