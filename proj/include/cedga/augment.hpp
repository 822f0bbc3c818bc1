#pragma once

#include "cedga/dga.hpp"
#include "cedga/products.hpp"

#include <cstdint>
#include <vector>

namespace cedga {

inline constexpr std::uint64_t kDefaultSearchBound = std::uint64_t{1} << 22;

struct Augmentation {
    std::uint32_t p = 2;
    Fp mu0 = 1;
    Fp lambda0 = 1;
    std::vector<Fp> values;
    bool graded = true;

    friend bool operator==(const Augmentation&, const Augmentation&) = default;
    friend auto operator<=>(const Augmentation& a, const Augmentation& b) { return a.values <=> b.values; }
};

/// The value mu is sent to for graded augmentations in odd characteristic.
inline Fp leverson_mu(std::uint32_t p) { return p - 1; }

/// Exhaustive scan; graded searches only vary degree-0 generators. Results are
/// in lexicographic order of the value vectors. Throws ResourceLimit above bound.
std::vector<Augmentation> find_augmentations(const DGA& a, std::uint32_t p, Fp mu0, Fp lambda0, bool graded = true,
                                             std::uint64_t bound = kDefaultSearchBound);
/// Same contract, single-threaded reference.
std::vector<Augmentation> find_augmentations_serial(const DGA& a, std::uint32_t p, Fp mu0, Fp lambda0,
                                                    bool graded = true, std::uint64_t bound = kDefaultSearchBound);
/// Whether at least one augmentation exists (stops at the first hit).
bool has_augmentation(const DGA& a, Fp mu0, Fp lambda0, bool graded = true, std::uint64_t bound = kDefaultSearchBound);

bool is_augmentation(const DGA& a, const Augmentation& e);
Fp evaluate(const DGA& a, const Augmentation& e, const NCPoly& x);

std::uint64_t graded_candidates_by_degree(const DGA& a, std::uint32_t p);
std::uint64_t graded_candidates_by_degree(const ChordInventory& inv, std::uint32_t p);

/// Keeps the values on the first n generators.
Augmentation restrict_augmentation(const Augmentation& e, std::size_t n);

} // namespace cedga
