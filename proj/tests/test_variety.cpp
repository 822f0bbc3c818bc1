#include "doctest.h"
#include "support.hpp"

#include "cedga/error.hpp"
#include "cedga/variety.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace cedga;
using namespace testing_support;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalConsistency;
}

using Points = std::vector<TorusPoint>;

LocusPolynomial random_locus_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(1, 3), e(-1, 2), c(-3, 3);
    LocusPolynomial f;
    while (f.is_zero()) {
        for (int i = n(rng); i > 0; --i) {
            long long v = c(rng);
            if (v != 0)
                f.terms[{e(rng), e(rng)}] += v;
        }
        std::erase_if(f.terms, [](const auto& kv) { return kv.second == 0; });
    }
    return f;
}

} // namespace

TEST_CASE("polynomial parsing") {
    LocusPolynomial f = LocusPolynomial::parse("1[0,0] + 1[0,1] + 1[1,1]");
    CHECK(f.terms.size() == 3);
    CHECK(LocusPolynomial::parse(f.to_string()) == f);
    LocusPolynomial g = LocusPolynomial::parse("-2[1,-1] + 3[0,0]");
    CHECK(g.terms.at({1, -1}) == -2);
    CHECK(LocusPolynomial::parse(g.to_string()) == g);
    CHECK(code_of([] { LocusPolynomial::parse("1[0,0] - 1[0,0]"); }) == ErrorCode::Format);
    CHECK(code_of([] { LocusPolynomial::parse("x + 1"); }) == ErrorCode::Format);
    LocusPolynomial one_mu = LocusPolynomial::parse("1[0,0] + 1[1,0]");
    CHECK(one_mu * one_mu == LocusPolynomial::parse("1[0,0] + 2[1,0] + 1[2,0]"));
}

TEST_CASE("catalog loci over F_5") {
    CHECK(polynomial_locus(catalog_polynomial("poly:clifford"), 5).points == Points{{1, 2}, {2, 3}, {3, 1}});
    CHECK(polynomial_locus(catalog_polynomial("poly:chekanov"), 5).points == Points{{1, 1}, {2, 1}, {3, 4}});
    CHECK(polynomial_locus(LocusPolynomial::parse("1[1,0] + 1[0,0]"), 5).points ==
          Points{{4, 1}, {4, 2}, {4, 3}, {4, 4}});
}

TEST_CASE("loci match the solved forms") {
    for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u, 31u}) {
        PrimeField F(q);
        Points clifford, chekanov;
        for (Fp m = 1; m < q; ++m) {
            Fp s = F.add(1, m);
            if (s == 0)
                continue;
            clifford.emplace_back(m, F.neg(F.inv(s)));
            chekanov.emplace_back(m, F.neg(F.inv(F.mul(s, s))));
        }
        CHECK(polynomial_locus(catalog_polynomial("poly:clifford"), q).points == clifford);
        CHECK(polynomial_locus(catalog_polynomial("poly:chekanov"), q).points == chekanov);
    }
}

TEST_CASE("locus of a product is the union") {
    std::mt19937_64 rng(103);
    for (int i = 0; i < 100; ++i) {
        LocusPolynomial f = random_locus_poly(rng), g = random_locus_poly(rng);
        std::uint32_t q = (i % 2) ? 5 : 7;
        Points lf = polynomial_locus(f, q).points, lg = polynomial_locus(g, q).points;
        std::set<TorusPoint> u(lf.begin(), lf.end());
        u.insert(lg.begin(), lg.end());
        LocusPolynomial fg = f * g;
        Points lfg = fg.is_zero() ? Points{} : polynomial_locus(fg, q).points;
        CHECK(Points(u.begin(), u.end()) == lfg);
    }
}

TEST_CASE("the Clifford locus misses the line in every odd characteristic") {
    for (std::uint32_t q = 3; q < 100; q += 2) {
        if (!is_prime(q))
            continue;
        CHECK(intersect_line(polynomial_locus(catalog_polynomial("poly:clifford"), q)).points.empty());
        CHECK(intersect_line(polynomial_locus(catalog_polynomial("poly:chekanov"), q)).points.empty());
    }
}

TEST_CASE("parallel and serial point scans agree") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 30; ++i) {
        LocusPolynomial f = random_locus_poly(rng);
        for (std::uint32_t q : {3u, 11u, 101u})
            CHECK(polynomial_locus(f, q) == polynomial_locus_serial(f, q));
    }
    for (const std::string& name : catalog_spun_names())
        for (std::uint32_t q : {3u, 5u})
            CHECK(augmentation_points(catalog_dga(name, q), q) == augmentation_points_serial(catalog_dga(name, q), q));
}

TEST_CASE("augmentation points") {
    CHECK(augmentation_points(catalog_dga("spun-unknot", 3), 3).points == Points{{2, 1}, {2, 2}});
    CHECK(augmentation_points(catalog_dga("loose", 5), 5).points.empty());
    DGA free;
    free.p = 5;
    free.add_generator({"x", 1, Rational(1)});
    CHECK(augmentation_points(free, 5).points.size() == 16);
    CHECK(code_of([] { augmentation_points(catalog_dga("trefoil", 3), 5); }) == ErrorCode::RingMismatch);
    CHECK(code_of([] { polynomial_locus(catalog_polynomial("poly:clifford"), 2); }) == ErrorCode::Unsupported);
    CHECK(code_of([] { polynomial_locus(catalog_polynomial("poly:clifford"), 9); }) == ErrorCode::Unsupported);
}

TEST_CASE("spun catalog points lie on the line") {
    for (const std::string& name : catalog_spun_names())
        for (std::uint32_t q : {3u, 5u, 7u}) {
            CAPTURE(name);
            CAPTURE(q);
            ContainmentResult r = line_containment(augmentation_points(catalog_dga(name, q), q));
            CHECK(r.verdict != Containment::NotContained);
        }
    CHECK(line_containment(augmentation_points(catalog_dga("spun-trefoil", 5), 5)).verdict == Containment::Contained);
    CHECK(line_containment(augmentation_points(catalog_dga("spun-loose", 5), 5)).verdict == Containment::Empty);
}

TEST_CASE("line containment") {
    ContainmentResult c = line_containment(polynomial_locus(catalog_polynomial("poly:clifford"), 5));
    CHECK(c.verdict == Containment::NotContained);
    CHECK(c.witness == std::optional<TorusPoint>(TorusPoint{1, 2}));
    CHECK(line_containment(polynomial_locus(LocusPolynomial::parse("1[1,0] + 1[0,0]"), 5)).verdict ==
          Containment::Contained);
    CHECK(line_containment(polynomial_locus(catalog_polynomial("poly:chekanov"), 7)).verdict ==
          Containment::NotContained);
    CHECK(line_containment(TorusPointSet{5, {}, ""}).verdict == Containment::Empty);
}

TEST_CASE("changes of basis") {
    TorusPointSet line = polynomial_locus(LocusPolynomial::parse("1[1,0] + 1[0,0]"), 7);
    TorusPointSet swapped = change_basis(line, {0, 1, 1, 0});
    for (const auto& [m, l] : swapped.points)
        CHECK(l == 6);
    CHECK(change_basis(swapped, {0, 1, 1, 0}) == line);

    BasisScan found = scan_basis_changes(swapped, 1);
    REQUIRE(found.containing.has_value());
    CHECK(line_containment(change_basis(swapped, *found.containing)).verdict == Containment::Contained);

    BasisScan none = scan_basis_changes(polynomial_locus(catalog_polynomial("poly:clifford"), 5), 3);
    CHECK(!none.containing.has_value());
    CHECK(none.matrices_tried > 0);
}
