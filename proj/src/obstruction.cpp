#include "cedga/obstruction.hpp"
#include "cedga/augment.hpp"
#include "cedga/catalog.hpp"
#include "cedga/error.hpp"

#include <algorithm>

namespace cedga {

ConeFeasibility cone_feasible(const DimWindow& dims) {
    if (dims.empty())
        throw Error(ErrorCode::Format, "empty degree window");
    const int m = dims.begin()->first;
    const int M = dims.rbegin()->first;
    if (static_cast<std::size_t>(M - m + 1) != dims.size())
        throw Error(ErrorCode::Format, "degree window must be contiguous");

    // d_k = alpha_k + sign_k * t with t = d_M.
    std::map<int, std::pair<long long, int>> affine;
    affine[M] = {0, 1};
    for (int k = M; k >= m; --k) {
        auto [alpha, sign] = affine[k];
        affine[k - 1] = {static_cast<long long>(dims.at(k)) - alpha, -sign};
    }
    ConeFeasibility res;
    res.t_min = 0;
    for (const auto& [k, af] : affine) {
        auto [alpha, sign] = af;
        if (sign > 0) {
            res.t_min = std::max(res.t_min, -alpha);
        } else {
            res.t_max = res.t_max ? std::min(*res.t_max, alpha) : alpha;
        }
    }
    res.feasible = !res.t_max || res.t_min <= *res.t_max;
    const long long t = res.t_min;
    res.steps.push_back("d_" + std::to_string(M) + " = t, t >= " + std::to_string(res.t_min) +
                        (res.t_max ? ", t <= " + std::to_string(*res.t_max) : std::string()));
    for (int k = M; k >= m - 1; --k) {
        auto [alpha, sign] = affine[k];
        long long v = alpha + sign * t;
        res.d[k] = v;
        if (k < M)
            res.steps.push_back("d_" + std::to_string(k) + " = c_" + std::to_string(k + 1) + " - d_" +
                                std::to_string(k + 1) + " = " + std::to_string(dims.at(k + 1)) + " - " +
                                std::to_string(res.d[k + 1]) + " = " + std::to_string(v));
        if (v < 0 && !res.certificate_degree)
            res.certificate_degree = k;
    }
    if (res.feasible)
        res.steps.push_back("feasible with t = " + std::to_string(t));
    else
        res.steps.push_back("infeasible: the smallest admissible t = " + std::to_string(t) + " forces d_" +
                            std::to_string(*res.certificate_degree) + " < 0");
    return res;
}

std::map<int, std::optional<std::size_t>> forced_window(const ChordInventory& inv, int lo, int hi) {
    std::map<int, std::size_t> count;
    for (const auto& c : inv.chords)
        count[c.degree]++;
    auto n = [&](int k) {
        auto it = count.find(k);
        return it == count.end() ? std::size_t{0} : it->second;
    };
    std::map<int, std::optional<std::size_t>> out;
    for (int k = lo; k <= hi; ++k) {
        if (n(k) == 0)
            out[k] = 0;
        else if (n(k - 1) == 0 && n(k + 1) == 0)
            out[k] = n(k);
        else
            out[k] = std::nullopt;
    }
    return out;
}

ProductInventory family_product_inventory(int r) {
    ChordInventory q1 = catalog_inventory("lambda1");
    ChordInventory q2 = lambda2_inventory(r);
    ChordInventory shorter;
    shorter.name = q2.name;
    for (const auto& c : q2.chords)
        if (c.length < q1.min_length())
            shorter.chords.push_back(c);
    return product_inventory(q1, shorter, Rational(1, 100));
}

ObstructionReport not_twist_spun_report(const ProductInventory& inv, int r) {
    if (r == 0)
        throw Error(ErrorCode::Unsupported, "r = 0 is not decided by degree reasons alone");
    if (r < 0)
        throw Error(ErrorCode::NotInRegime, "r must be positive");
    if (inv.q1.size() != 1 || inv.q1.chords.front().degree != 1 || inv.q2_short.size() != 1 ||
        inv.q2_short.chords.front().degree != 2 * r)
        throw Error(ErrorCode::NotInRegime, "inventory is not the product of a single degree-1 chord with a single "
                                            "degree-" + std::to_string(2 * r) + " chord");
    ObstructionReport rep;
    rep.r = r;
    ChordInventory all = inv.as_inventory();
    rep.assumptions = {
        "the product admits an augmentation, induced by an exact Lagrangian filling (assumed, not computed)",
        "the obstruction needs uniqueness of the graded augmentation up to DG-homotopy; only uniqueness as a map is "
        "computed, and the two agree when the trivial assignment is the only candidate",
        "linearised homology is invariant under Legendrian isotopy, so the window computed from degrees applies to "
        "every twist spun isotopic to the product",
    };
    rep.graded_candidates = graded_candidates_by_degree(all, 2);

    int min_degree = 0;
    for (const auto& c : all.chords)
        min_degree = std::min(min_degree, c.degree);
    rep.nonpositive_window = forced_window(all, min_degree - 1, 0);

    const int centre = 1 - 2 * r;
    auto win = forced_window(all, centre - 1, centre + 1);
    for (const auto& [k, v] : win) {
        if (!v)
            throw Error(ErrorCode::InternalConsistency, "degree " + std::to_string(k) + " of the cone window is not forced");
        rep.window[k] = *v;
    }
    rep.feasibility = cone_feasible(rep.window);
    if (rep.graded_candidates != 1) {
        rep.verdict = "inconclusive: more than one graded augmentation candidate";
        return rep;
    }
    rep.not_twist_spun = !rep.feasibility.feasible;
    rep.verdict = rep.not_twist_spun ? "not a twist spun" : "inconclusive";
    return rep;
}

} // namespace cedga
