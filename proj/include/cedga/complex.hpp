#pragma once

#include "cedga/augment.hpp"
#include "cedga/dga.hpp"
#include "cedga/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace cedga {

/// Degree -> dimension, zero entries omitted.
using BettiVector = std::map<int, std::size_t>;

struct GradedComplex {
    std::uint32_t p = 2;
    std::map<int, std::vector<std::string>> basis;
    /// d[k] maps degree k to degree k-1 (rows = dim C_{k-1}, cols = dim C_k).
    std::map<int, Matrix> d;

    std::size_t dim(int k) const;
    /// The differential out of degree k; zero if not stored.
    Matrix differential(int k) const;
    int min_degree() const;
    int max_degree() const;
    /// Throws InternalConsistency if a stored matrix has the wrong shape or d^2 != 0.
    void check() const;
};

struct ChainMap {
    const GradedComplex* source = nullptr;
    const GradedComplex* target = nullptr;
    /// maps[k] sends source degree k to target degree k.
    std::map<int, Matrix> maps;

    Matrix at(int k) const;
};

BettiVector betti(const GradedComplex& c);
BettiVector dimensions(const GradedComplex& c);

/// Throws NotChainMap naming the first degree where d psi != psi d.
void check_chain_map(const ChainMap& psi);

/// Cone_k = T_k + S_{k-1} with differential [[d_T, psi], [0, -d_S]].
GradedComplex mapping_cone(const ChainMap& psi);

/// Bilinearised complex; eps1 augments letters before the kept one, eps2 after.
GradedComplex linearise(const DGA& a, const Augmentation& eps1, const Augmentation& eps2);
inline GradedComplex linearise(const DGA& a, const Augmentation& eps) { return linearise(a, eps, eps); }

/// Complex with zero differential on the given dimensions.
GradedComplex from_betti(std::uint32_t p, const BettiVector& dims, const std::string& prefix = "h");

} // namespace cedga
