#pragma once

#include "cedga/dga.hpp"
#include "cedga/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace cedga {

enum class Strand : std::uint8_t { Over, Under };
enum class Direction : std::uint8_t { Out, In };

struct CrossingEnd {
    Strand strand = Strand::Over;
    Direction dir = Direction::Out;

    friend bool operator==(const CrossingEnd&, const CrossingEnd&) = default;
};

/// A double point of the Lagrangian projection. The four ends are listed
/// counterclockwise around the crossing.
struct Crossing {
    std::string name;
    int degree = 0;
    Rational length{1};
    std::array<CrossingEnd, 4> ends{};
};

struct Visit {
    std::size_t crossing = 0;
    Strand strand = Strand::Over;
};

/// Edge k of a component runs from visit k to visit k+1 (cyclically).
struct LagrangianDiagram {
    std::string name;
    std::vector<Crossing> crossings;
    std::vector<std::vector<Visit>> components;
    std::size_t outer_edge = 0;
    bool outer_on_right = true;
    std::size_t base_point_edge = 0;
    std::string notes;
};

/// Faces of the 4-valent plane graph. Dart 2e is edge e traversed forwards,
/// dart 2e+1 backwards; a dart's face lies on its left.
struct PlanarStructure {
    std::size_t num_edges = 0;
    std::vector<int> dart_face;
    std::vector<int> dart_next;
    /// Position (0..3) of the end through which a dart leaves / arrives.
    std::vector<std::uint8_t> dart_leave_pos, dart_arrive_pos;
    std::vector<std::size_t> dart_leave_crossing, dart_arrive_crossing;
    /// leave_dart[c][k] is the dart leaving crossing c through ends[k].
    std::vector<std::array<int, 4>> leave_dart;
    /// quadrant k spans ends[k] to ends[k+1] counterclockwise.
    std::vector<std::array<int, 4>> quadrant_face;
    std::vector<std::array<bool, 4>> quadrant_positive;
    std::size_t num_faces = 0;
    int outer_face = 0;
    std::vector<Rational> face_area;
    std::vector<int> face_winding;

    int left_face(std::size_t edge) const { return dart_face[2 * edge]; }
    int right_face(std::size_t edge) const { return dart_face[2 * edge + 1]; }
};

struct DiagramReport {
    std::size_t crossings = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    int rotation = 0;
    std::vector<Rational> bounded_face_areas;
};

/// Throws NonPlanar, MultiComponent, NonPositiveLength or InvalidDiagram.
PlanarStructure planar_structure(const LagrangianDiagram& d);
DiagramReport validate_diagram(const LagrangianDiagram& d);
int rotation_number(const LagrangianDiagram& d);
int rotation_number(const PlanarStructure& ps);

LagrangianDiagram reversed(const LagrangianDiagram& d);
/// Starts the traversal at visit `shift` instead of visit 0.
LagrangianDiagram rerooted(const LagrangianDiagram& d, std::size_t shift);

enum class ShadingSide : std::uint8_t { Left, Right };

struct PolygonOptions {
    std::uint32_t p = 2;
    /// Maximum number of times the boundary may run along the same dart.
    int multiplicity_cap = 4;
    /// Side of the under strand whose quadrants carry sign -1 at even crossings.
    ShadingSide shading = ShadingSide::Right;
    bool parallel = true;
};

struct Polygon {
    std::size_t positive = 0;
    int positive_quadrant = 0;
    std::vector<int> boundary;
    /// Crossings of the negative corners, counterclockwise from the positive corner.
    std::vector<std::size_t> negatives;
    std::vector<int> negative_quadrants;
    int mu = 0;
    int sign = 1;
    Rational area{0};
};

/// All admissible immersed polygons with positive corner at crossing c.
std::vector<Polygon> enumerate_polygons(const LagrangianDiagram& d, const PlanarStructure& ps, std::size_t c,
                                        const PolygonOptions& opt = {});

DGA chekanov_dga(const LagrangianDiagram& d, const PolygonOptions& opt = {});
DGA chekanov_dga(const LagrangianDiagram& d, std::uint32_t p);

struct GradingReport {
    bool ok = true;
    std::vector<LawViolation> violations;
    std::vector<std::string> messages;
};

GradingReport validate_gradings(const LagrangianDiagram& d, const DGA& dga);

} // namespace cedga
