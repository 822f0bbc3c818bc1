#include "cedga/products.hpp"
#include "cedga/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace cedga {

Rational ChordInventory::min_length() const {
    if (chords.empty())
        throw Error(ErrorCode::EmptyInventory, "inventory '" + name + "' is empty");
    Rational m = chords.front().length;
    for (const auto& c : chords)
        m = std::min(m, c.length);
    return m;
}

Rational ChordInventory::max_length() const {
    if (chords.empty())
        throw Error(ErrorCode::EmptyInventory, "inventory '" + name + "' is empty");
    Rational m = chords.front().length;
    for (const auto& c : chords)
        m = std::max(m, c.length);
    return m;
}

void ChordInventory::validate() const {
    std::set<std::string> names;
    for (const auto& c : chords) {
        if (c.length <= 0)
            throw Error(ErrorCode::NonPositiveLength, "chord '" + c.name + "' has non-positive length");
        if (!names.insert(c.name).second)
            throw Error(ErrorCode::Format, "duplicate chord name '" + c.name + "'");
    }
}

const char* to_string(ChordFamily f) {
    switch (f) {
    case ChordFamily::First: return "first";
    case ChordFamily::FirstHat: return "first-hat";
    case ChordFamily::Second: return "second";
    case ChordFamily::SecondHat: return "second-hat";
    case ChordFamily::MixedSum: return "mixed-sum";
    case ChordFamily::MixedDifference: return "mixed-difference";
    }
    return "unknown";
}

ChordInventory ProductInventory::as_inventory() const {
    ChordInventory inv;
    inv.name = q1.name + "x" + q2_short.name;
    for (const auto& c : chords)
        inv.chords.push_back(c.chord);
    return inv;
}

bool is_smaller(const ChordInventory& q1, const ChordInventory& q2) {
    return q1.max_length() < q2.min_length();
}

bool has_distinct_lengths(const ChordInventory& q1, const ChordInventory& q2) {
    for (const auto& a : q1.chords)
        for (const auto& b : q2.chords)
            if (a.length == b.length)
                return false;
    return true;
}

ChordInventory rescale_by_factor(const ChordInventory& q, const Rational& factor) {
    if (factor <= 0)
        throw Error(ErrorCode::NonPositiveLength, "rescaling factor must be positive");
    ChordInventory out = q;
    for (auto& c : out.chords)
        c.length *= factor;
    return out;
}

ChordInventory rescale(const ChordInventory& q, double t) {
    if (t == 0.0)
        return q;
    return rescale_by_factor(q, approximate_rational(std::exp(t), 1000000));
}

const char* to_string(SpunVerdict v) {
    return v == SpunVerdict::TwistSpunByConstruction ? "twist-spun" : "undetermined";
}

SpunVerdict spun_reducibility(const ChordInventory& q1, const ChordInventory& q2) {
    if (q1.empty() || q2.empty())
        return SpunVerdict::Undetermined;
    if (is_smaller(q1, q2) || is_smaller(q2, q1))
        return SpunVerdict::TwistSpunByConstruction;
    return SpunVerdict::Undetermined;
}

std::string hat_name(const std::string& name) {
    if (name.empty())
        return "^";
    std::string h = name;
    h[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(h[0])));
    return h == name ? name + "^" : h;
}

ProductInventory product_inventory(const ChordInventory& q1, const ChordInventory& q2_short, const Rational& eps) {
    q1.validate();
    q2_short.validate();
    if (q1.empty())
        throw Error(ErrorCode::EmptyInventory, "first factor has no chords");
    if (eps <= 0)
        throw Error(ErrorCode::NotInRegime, "perturbation parameter must be positive");
    if (!q2_short.empty() && !is_smaller(q2_short, q1))
        throw Error(ErrorCode::NotInRegime, "every chord of the second factor must be shorter than every chord of the first");
    std::vector<Rational> lengths;
    for (const auto& c : q1.chords)
        lengths.push_back(c.length);
    for (const auto& c : q2_short.chords)
        lengths.push_back(c.length);
    for (std::size_t i = 0; i < lengths.size(); ++i)
        for (std::size_t j = 0; j < lengths.size(); ++j)
            if (i != j && lengths[i] != lengths[j] && !(eps < abs(lengths[i] - lengths[j])))
                throw Error(ErrorCode::NotInRegime, "perturbation parameter must be smaller than every length gap");

    ProductInventory out;
    out.q1 = q1;
    out.q2_short = q2_short;
    out.eps = eps;
    for (std::size_t i = 0; i < q1.size(); ++i) {
        const auto& c = q1.chords[i];
        out.chords.push_back({c, ChordFamily::First, i, 0});
        out.chords.push_back({{hat_name(c.name), c.degree + 1, c.length + eps}, ChordFamily::FirstHat, i, 0});
    }
    for (std::size_t j = 0; j < q2_short.size(); ++j) {
        const auto& b = q2_short.chords[j];
        out.chords.push_back({b, ChordFamily::Second, 0, j});
        out.chords.push_back({{hat_name(b.name), b.degree + 1, b.length + eps}, ChordFamily::SecondHat, 0, j});
    }
    for (std::size_t i = 0; i < q1.size(); ++i) {
        for (std::size_t j = 0; j < q2_short.size(); ++j) {
            const auto& a = q1.chords[i];
            const auto& b = q2_short.chords[j];
            out.chords.push_back(
                {{a.name + "+" + b.name, a.degree + b.degree + 1, a.length + b.length}, ChordFamily::MixedSum, i, j});
            out.chords.push_back(
                {{a.name + "-" + b.name, a.degree - b.degree, a.length - b.length}, ChordFamily::MixedDifference, i, j});
        }
    }
    return out;
}

} // namespace cedga
