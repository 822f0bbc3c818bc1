#pragma once

#include "cedga/products.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cedga {

/// Degree -> dimension over a contiguous window, zeros kept.
using DimWindow = std::map<int, std::size_t>;

struct ConeFeasibility {
    bool feasible = false;
    /// Values d_k on [m-1, M]; a witness when feasible, the trace otherwise.
    std::map<int, long long> d;
    /// First degree (descending) where the trace goes negative.
    std::optional<int> certificate_degree;
    long long t_min = 0;
    std::optional<long long> t_max;
    std::vector<std::string> steps;
};

/// Decides whether nonnegative d_k with dims_k = d_k + d_{k-1} exist.
/// Throws Format on an empty or non-contiguous window.
ConeFeasibility cone_feasible(const DimWindow& dims);

/// Dimension of homology forced by degrees alone; nullopt where not forced.
std::map<int, std::optional<std::size_t>> forced_window(const ChordInventory& inv, int lo, int hi);

struct ObstructionReport {
    int r = 0;
    bool not_twist_spun = false;
    std::string verdict;
    std::vector<std::string> assumptions;
    std::uint64_t graded_candidates = 0;
    std::map<int, std::optional<std::size_t>> nonpositive_window;
    DimWindow window;
    ConeFeasibility feasibility;
};

/// The product inventory of the standard unknot with the short chord of the
/// degree-2r knot of the family.
ProductInventory family_product_inventory(int r);

/// Throws Unsupported for r = 0 and NotInRegime if inv is not of the expected shape.
ObstructionReport not_twist_spun_report(const ProductInventory& inv, int r);

} // namespace cedga
