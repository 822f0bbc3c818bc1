#pragma once

#include "cedga/rational.hpp"

#include <string>
#include <vector>

namespace cedga {

struct ChordRecord {
    std::string name;
    int degree = 0;
    Rational length{1};

    friend bool operator==(const ChordRecord&, const ChordRecord&) = default;
};

struct ChordInventory {
    std::string name;
    std::vector<ChordRecord> chords;

    bool empty() const noexcept { return chords.empty(); }
    std::size_t size() const noexcept { return chords.size(); }
    Rational min_length() const;
    Rational max_length() const;
    /// Throws on a non-positive length or a repeated name.
    void validate() const;

    friend bool operator==(const ChordInventory&, const ChordInventory&) = default;
};

enum class ChordFamily { First, FirstHat, Second, SecondHat, MixedSum, MixedDifference };

const char* to_string(ChordFamily f);

struct ProductChord {
    ChordRecord chord;
    ChordFamily family = ChordFamily::First;
    /// Index into q1 (or q2 for the Second families; both for mixed chords).
    std::size_t first = 0;
    std::size_t second = 0;
};

struct ProductInventory {
    ChordInventory q1;
    ChordInventory q2_short;
    Rational eps{0};
    std::vector<ProductChord> chords;

    ChordInventory as_inventory() const;
};

bool is_smaller(const ChordInventory& q1, const ChordInventory& q2);
bool has_distinct_lengths(const ChordInventory& q1, const ChordInventory& q2);

/// Multiplies every length by the rational approximation of e^t.
ChordInventory rescale(const ChordInventory& q, double t);
ChordInventory rescale_by_factor(const ChordInventory& q, const Rational& factor);

enum class SpunVerdict { TwistSpunByConstruction, Undetermined };

const char* to_string(SpunVerdict v);
SpunVerdict spun_reducibility(const ChordInventory& q1, const ChordInventory& q2);

/// Name of the Morse partner of a chord: "a" -> "A", otherwise "x" -> "x^".
std::string hat_name(const std::string& name);

ProductInventory product_inventory(const ChordInventory& q1, const ChordInventory& q2_short, const Rational& eps);

} // namespace cedga
