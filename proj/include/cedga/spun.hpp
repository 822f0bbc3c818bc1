#pragma once

#include "cedga/dga.hpp"

#include <optional>

namespace cedga {

/// Generators 0..n-1 are the source generators x, generator n+i is the hat of x_i.
struct SpunDGA {
    DGA dga;
    DGA source;
    std::vector<NCPoly> phi;
    int lambda_twist = 0;
    Rational eps{0};

    std::size_t n() const noexcept { return source.size(); }
    GenId hat(GenId x) const noexcept { return static_cast<GenId>(x + source.size()); }
};

Rational default_spin_eps(const DGA& a);

/// D(x) = d(x) and D(x^) = lambda^k (phi(x) - x) - S(d(x)), where S is the
/// degree +1 (phi, id)-derivation with S(x) = x^. Throws InvalidLoop when phi
/// is not a DGA endomorphism and InternalConsistency if D^2 != 0.
SpunDGA twist_spun_dga(const DGA& a, const DGAMorphism& phi, int lambda_twist = 0,
                       std::optional<Rational> eps = std::nullopt);

bool verify_inclusion(const SpunDGA& s);

/// The endomorphism id + dK + Kd, with K extended as a (phi, id)-derivation.
/// K[g] must have degree |g| + 1.
DGAMorphism homotopy_endomorphism(const DGA& a, const std::vector<NCPoly>& K);

/// Applies a degree +1 (phi, id)-derivation given on generators.
NCPoly apply_derivation(const DGA& a, const std::vector<NCPoly>& phi, const std::vector<NCPoly>& on_generators,
                        const NCPoly& x);

} // namespace cedga
