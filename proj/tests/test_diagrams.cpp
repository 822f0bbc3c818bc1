#include "doctest.h"
#include "support.hpp"

#include "cedga/augment.hpp"
#include "cedga/diagram.hpp"
#include "cedga/error.hpp"
#include "cedga/io.hpp"

#include <algorithm>
#include <tuple>

using namespace cedga;
using namespace testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::InternalConsistency;
}

using PolygonKey = std::tuple<std::vector<std::string>, int, Rational>;

std::vector<PolygonKey> fixture_polygons(const Json& j, const std::string& crossing) {
    std::vector<PolygonKey> out;
    for (const auto& p : j.at("polygons").at(crossing))
        out.emplace_back(p.at("negatives").get<std::vector<std::string>>(), p.at("mu").get<int>(),
                         parse_rational(p.at("area").get<std::string>()));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PolygonKey> computed_polygons(const LagrangianDiagram& d, const PlanarStructure& ps, std::size_t c,
                                          const PolygonOptions& opt = {}) {
    std::vector<PolygonKey> out;
    for (const Polygon& p : enumerate_polygons(d, ps, c, opt)) {
        std::vector<std::string> names;
        for (std::size_t n : p.negatives)
            names.push_back(d.crossings[n].name);
        out.emplace_back(names, p.mu, p.area);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("figure-eight unknot diagram") {
    LagrangianDiagram d = catalog_diagram("unknot");
    DiagramReport r = validate_diagram(d);
    CHECK(r.crossings == 1);
    CHECK(r.edges == 2);
    CHECK(r.faces == 3);
    CHECK(r.bounded_face_areas.size() == 2);
    CHECK(r.rotation == 0);
}

TEST_CASE("trefoil diagram") {
    LagrangianDiagram d = catalog_diagram("trefoil");
    DiagramReport r = validate_diagram(d);
    CHECK(r.crossings == 5);
    CHECK(r.edges == 10);
    CHECK(r.faces == 7);
    CHECK(r.rotation == 0);
    for (const Rational& a : r.bounded_face_areas)
        CHECK(a > 0);
}

TEST_CASE("planar structure consistency") {
    for (const std::string& name : {"unknot", "trefoil"}) {
        LagrangianDiagram d = catalog_diagram(name);
        PlanarStructure ps = planar_structure(d);
        CHECK(ps.num_faces == d.crossings.size() + 2);
        for (std::size_t e = 0; e < ps.num_edges; ++e) {
            CHECK(ps.face_winding[ps.left_face(e)] == ps.face_winding[ps.right_face(e)] + 1);
        }
        CHECK(ps.face_winding[ps.outer_face] == 0);
        // every dart lies on exactly one face and the successor map is a permutation
        std::vector<int> seen(ps.dart_next.size(), 0);
        for (int n : ps.dart_next)
            ++seen[static_cast<std::size_t>(n)];
        for (int s : seen)
            CHECK(s == 1);
    }
}

TEST_CASE("diagram errors") {
    LagrangianDiagram split = catalog_diagram("unknot");
    split.components = {{split.components[0][0]}, {split.components[0][1]}};
    CHECK(code_of([&] { planar_structure(split); }) == ErrorCode::MultiComponent);

    LagrangianDiagram zero = catalog_diagram("trefoil");
    zero.crossings[2].length = Rational(0);
    CHECK(code_of([&] { planar_structure(zero); }) == ErrorCode::NonPositiveLength);

    LagrangianDiagram twisted = catalog_diagram("trefoil");
    std::swap(twisted.crossings[1].ends[1], twisted.crossings[1].ends[3]);
    CHECK(code_of([&] { planar_structure(twisted); }) == ErrorCode::NonPlanar);

    LagrangianDiagram not_transverse = catalog_diagram("unknot");
    std::swap(not_transverse.crossings[0].ends[0], not_transverse.crossings[0].ends[1]);
    CHECK(code_of([&] { planar_structure(not_transverse); }) == ErrorCode::InvalidDiagram);

    LagrangianDiagram short_walk = catalog_diagram("trefoil");
    short_walk.components[0].pop_back();
    CHECK(code_of([&] { planar_structure(short_walk); }) == ErrorCode::InvalidDiagram);

    Json j = diagram_to_json(catalog_diagram("unknot"));
    j["version"] = 2;
    CHECK(code_of([&] { diagram_from_json(j); }) == ErrorCode::VersionMismatch);
}

TEST_CASE("rotation numbers") {
    LagrangianDiagram unknot = catalog_diagram("unknot");
    LagrangianDiagram kinked = load_diagram(data_path("kinked.diagram.json"));
    LagrangianDiagram two = load_diagram(data_path("two_kinks.diagram.json"));
    CHECK(rotation_number(unknot) == 0);
    CHECK(rotation_number(reversed(unknot)) == 0);
    CHECK(rotation_number(kinked) == 1);
    CHECK(rotation_number(reversed(kinked)) == -1);
    CHECK(rotation_number(two) == 0);
    CHECK(rotation_number(reversed(two)) == 0);
}

TEST_CASE("rotation number is invariant under rerooting and negates under reversal") {
    std::vector<LagrangianDiagram> all{catalog_diagram("unknot"), catalog_diagram("trefoil"),
                                       load_diagram(data_path("kinked.diagram.json")),
                                       load_diagram(data_path("two_kinks.diagram.json"))};
    for (const LagrangianDiagram& d : all) {
        int rot = rotation_number(d);
        for (std::size_t s = 0; s < 2 * d.crossings.size(); ++s) {
            CHECK(rotation_number(rerooted(d, s)) == rot);
            CHECK(rotation_number(reversed(rerooted(d, s))) == -rot);
        }
    }
}

TEST_CASE("unknot DGA") {
    DGA a = chekanov_dga(catalog_diagram("unknot"), 2);
    REQUIRE(a.size() == 1);
    CHECK(a.gens[0].name == "a");
    CHECK(a.gens[0].degree == 1);
    CHECK(a.d[0] == NCPoly::unit(2) + NCPoly::constant(2, 1, 1));
    DGA a3 = chekanov_dga(catalog_diagram("unknot"), 3);
    CHECK(a3.d[0] == NCPoly::unit(3) + NCPoly::constant(3, 1, 1));
    CHECK(find_augmentations(a, 2, 1, 1).size() == 1);
}

TEST_CASE("trefoil DGA") {
    DGA a = chekanov_dga(catalog_diagram("trefoil"), 2);
    std::vector<int> degrees;
    for (const ChordGen& g : a.gens)
        degrees.push_back(g.degree);
    CHECK(degrees == std::vector<int>{1, 0, 0, 0, 1});
    CHECK(std::count(degrees.begin(), degrees.end(), 1) == 2);
    CHECK(std::count(degrees.begin(), degrees.end(), 0) == 3);
    CHECK(check_d_squared(a).empty());
    CHECK(check_action_law(a).empty());
    CHECK(find_augmentations(a, 2, 1, 1).size() == 5);
    CHECK(to_string(a, a.d[a.index("a1")]) == "mu + b1 + b3 + b3 b2 b1");
    CHECK(to_string(a, a.d[a.index("a2")]) == "1 + b1 + b3 + b1 b2 b3");
}

TEST_CASE("polygon lists match the hand enumeration") {
    for (const std::string& name : {"unknot", "trefoil"}) {
        LagrangianDiagram d = catalog_diagram(name);
        PlanarStructure ps = planar_structure(d);
        Json fixture = read_json_file(data_path(name + "_polygons.json"));
        for (std::size_t c = 0; c < d.crossings.size(); ++c) {
            CAPTURE(d.crossings[c].name);
            CHECK(computed_polygons(d, ps, c) == fixture_polygons(fixture, d.crossings[c].name));
        }
    }
}

TEST_CASE("polygon area equals the action difference") {
    for (const std::string& name : {"unknot", "trefoil"}) {
        LagrangianDiagram d = catalog_diagram(name);
        PlanarStructure ps = planar_structure(d);
        for (std::size_t c = 0; c < d.crossings.size(); ++c)
            for (const Polygon& p : enumerate_polygons(d, ps, c)) {
                Rational expect = d.crossings[c].length;
                for (std::size_t n : p.negatives)
                    expect -= d.crossings[n].length;
                CHECK(p.area == expect);
                CHECK(p.area > 0);
            }
    }
}

TEST_CASE("multiplicity cap is reported, never silently applied") {
    LagrangianDiagram d = catalog_diagram("trefoil");
    PlanarStructure ps = planar_structure(d);
    PolygonOptions tight;
    tight.multiplicity_cap = 0;
    CHECK(code_of([&] { enumerate_polygons(d, ps, 0, tight); }) == ErrorCode::ResourceLimit);
    CHECK(code_of([&] { chekanov_dga(d, tight); }) == ErrorCode::ResourceLimit);
    PolygonOptions one;
    one.multiplicity_cap = 1;
    CHECK(chekanov_dga(d, one) == chekanov_dga(d, PolygonOptions{}));
}

TEST_CASE("parallel and serial polygon search agree") {
    std::vector<LagrangianDiagram> all{catalog_diagram("unknot"), catalog_diagram("trefoil"),
                                       load_diagram(data_path("kinked.diagram.json")),
                                       load_diagram(data_path("two_kinks.diagram.json"))};
    for (const LagrangianDiagram& d : all)
        for (std::uint32_t p : {2u, 3u, 5u}) {
            PolygonOptions par, ser;
            par.p = ser.p = p;
            ser.parallel = false;
            CHECK(chekanov_dga(d, par) == chekanov_dga(d, ser));
        }
}

TEST_CASE("odd characteristic signs give d squared zero on both shading sides") {
    std::vector<LagrangianDiagram> all{catalog_diagram("unknot"), catalog_diagram("trefoil"),
                                       load_diagram(data_path("kinked.diagram.json")),
                                       load_diagram(data_path("two_kinks.diagram.json"))};
    for (const LagrangianDiagram& d : all)
        for (std::uint32_t p : {3u, 5u, 7u})
            for (ShadingSide side : {ShadingSide::Left, ShadingSide::Right}) {
                PolygonOptions o;
                o.p = p;
                o.shading = side;
                DGA a = chekanov_dga(d, o);
                CHECK(check_d_squared(a).empty());
                CHECK(check_degree_law(a).empty());
                CHECK(check_action_law(a).empty());
            }
}

TEST_CASE("kinked fixtures") {
    DGA k = chekanov_dga(load_diagram(data_path("kinked.diagram.json")), 2);
    CHECK(check_d_squared(k).empty());
    CHECK(find_augmentations(k, 2, 1, 1, false).empty());
    DGA t = chekanov_dga(load_diagram(data_path("two_kinks.diagram.json")), 2);
    CHECK(check_d_squared(t).empty());
    CHECK(check_degree_law(t).empty());
}

TEST_CASE("grading validation") {
    LagrangianDiagram d = catalog_diagram("unknot");
    DGA a = chekanov_dga(d, 2);
    CHECK(validate_gradings(d, a).ok);
    LagrangianDiagram bad = d;
    bad.crossings[0].degree = 2;
    GradingReport r = validate_gradings(bad, chekanov_dga(bad, 2));
    CHECK(!r.ok);
    CHECK(!r.violations.empty());

    LagrangianDiagram t = catalog_diagram("trefoil");
    t.crossings[t.crossings.size() - 1].degree = 0;
    CHECK(!validate_gradings(t, chekanov_dga(t, 2)).ok);

    ChordInventory lam = catalog_inventory("lambda2_r1");
    auto b = std::find_if(lam.chords.begin(), lam.chords.end(), [](const ChordRecord& c) { return c.name == "b"; });
    REQUIRE(b != lam.chords.end());
    CHECK(b->degree == 2);
    CHECK(b->length < 1);
}

TEST_CASE("diagram json round trip") {
    for (const std::string& name : {"unknot", "trefoil"}) {
        LagrangianDiagram d = catalog_diagram(name);
        LagrangianDiagram back = diagram_from_json(diagram_to_json(d));
        CHECK(diagram_to_json(back) == diagram_to_json(d));
        CHECK(chekanov_dga(back, 2) == chekanov_dga(d, 2));
    }
}
