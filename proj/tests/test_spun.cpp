#include "doctest.h"
#include "support.hpp"

#include "cedga/augment.hpp"
#include "cedga/diagram.hpp"
#include "cedga/error.hpp"
#include "cedga/io.hpp"

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

std::vector<DGA> spin_sources(std::uint32_t p) {
    std::vector<DGA> out{catalog_dga("unknot", p), catalog_dga("trefoil", p), catalog_dga("loose", p), toy_dga(p)};
    out.push_back(chekanov_dga(load_diagram(data_path("two_kinks.diagram.json")), p));
    return out;
}

std::size_t hatted_letters(const Word& w, std::size_t n) {
    return static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [&](GenId g) { return g >= n; }));
}

} // namespace

TEST_CASE("spun unknot with the constant loop") {
    DGA u = catalog_dga("unknot", 2);
    SpunDGA s = twist_spun_dga(u, identity_morphism(u));
    REQUIRE(s.dga.size() == 2);
    CHECK(s.dga.gens[1].name == "a^");
    CHECK(s.dga.gens[1].degree == 2);
    CHECK(s.dga.gens[1].length == u.gens[0].length + default_spin_eps(u));
    CHECK(s.dga.d[s.hat(0)].is_zero());
    CHECK(s.dga.d[0] == u.d[0]);
}

TEST_CASE("spun toy DGA") {
    DGA t = toy_dga(2);
    SpunDGA s = twist_spun_dga(t, identity_morphism(t));
    GenId x = t.index("x"), y = t.index("y"), z = t.index("z");
    NCPoly expect = NCPoly::monomial(2, {s.hat(y), z}) + NCPoly::monomial(2, {y, s.hat(z)});
    CHECK(s.dga.d[s.hat(x)] == expect);
    CHECK(s.dga.d[s.hat(y)].is_zero());
    CHECK(s.dga.d[s.hat(z)].is_zero());
    CHECK(to_string(s.dga, s.dga.d[s.hat(x)]) == "y z^ + y^ z");
}

TEST_CASE("only the identity image spins the unknot") {
    DGA u = catalog_dga("unknot", 2);
    int accepted = 0;
    const std::vector<int> exps{-1, 0, 1, 2};
    for (unsigned mask = 1; mask < 16; ++mask) {
        NCPoly f(2);
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (mask & (1u << i))
                f += NCPoly::constant(2, 1, exps[i]);
        DGAMorphism phi = identity_morphism(u);
        phi.images[0] = f * u.gen(0);
        bool chain = check_morphism(phi).empty();
        if (chain) {
            ++accepted;
            CHECK(phi.images[0] == u.gen(0));
            CHECK(twist_spun_dga(u, phi).dga.d[1].is_zero());
        } else {
            CHECK(code_of([&] { twist_spun_dga(u, phi); }) == ErrorCode::InvalidLoop);
        }
    }
    CHECK(accepted == 1);
    DGAMorphism shifted = identity_morphism(u);
    shifted.images[0] = u.gen(0) + u.one() + NCPoly::constant(2, 1, 1);
    CHECK(code_of([&] { twist_spun_dga(u, shifted); }) == ErrorCode::InvalidLoop);
}

TEST_CASE("loop must live on the source DGA") {
    DGA u = catalog_dga("unknot", 2);
    DGA t = catalog_dga("trefoil", 2);
    CHECK(code_of([&] { twist_spun_dga(u, identity_morphism(t)); }) == ErrorCode::InvalidLoop);
}

TEST_CASE("constant loop gives one hatted letter per term") {
    for (std::uint32_t p : {2u, 3u, 5u})
        for (const DGA& a : spin_sources(p)) {
            SpunDGA s = twist_spun_dga(a, identity_morphism(a));
            for (GenId x = 0; x < a.size(); ++x)
                for (const auto& [key, c] : s.dga.d[s.hat(x)].terms()) {
                    CHECK(hatted_letters(key.word, a.size()) == 1);
                    CHECK(key.lambda == 0);
                }
        }
}

TEST_CASE("hat degree law") {
    for (std::uint32_t p : {2u, 3u})
        for (const DGA& a : spin_sources(p)) {
            SpunDGA s = twist_spun_dga(a, identity_morphism(a));
            for (GenId x = 0; x < a.size(); ++x) {
                CHECK(s.dga.gens[s.hat(x)].degree == a.gens[x].degree + 1);
                for (const auto& [key, c] : s.dga.d[s.hat(x)].terms())
                    CHECK(s.dga.term_degree(key) == a.gens[x].degree);
            }
            CHECK(check_degree_law(s.dga).empty());
            CHECK(check_action_law(s.dga).empty());
        }
}

TEST_CASE("homotopy endomorphisms are chain maps") {
    std::mt19937_64 rng(41);
    for (std::uint32_t p : {2u, 3u, 5u})
        for (const DGA& a : spin_sources(p))
            for (int i = 0; i < 5; ++i) {
                DGAMorphism phi = homotopy_endomorphism(a, random_homotopy(a, rng));
                CHECK(check_morphism(phi).empty());
            }
    DGA t = catalog_dga("trefoil", 2);
    std::vector<NCPoly> K(t.size(), NCPoly(2));
    K[t.index("b1")] = t.one();
    CHECK(code_of([&] { homotopy_endomorphism(t, K); }) == ErrorCode::InvalidLoop);
}

TEST_CASE("d squared vanishes on 100 random twist spins") {
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> twist(-2, 2);
    int done = 0, nontrivial = 0;
    const std::vector<std::uint32_t> primes{2, 3, 5};
    while (done < 100) {
        std::uint32_t p = primes[static_cast<std::size_t>(done) % primes.size()];
        std::vector<DGA> sources = spin_sources(p);
        const DGA& a = sources[static_cast<std::size_t>(done / 3) % sources.size()];
        DGAMorphism phi = random_endomorphism(a, rng);
        if (!(phi.images == identity_morphism(a).images))
            ++nontrivial;
        SpunDGA s = twist_spun_dga(a, phi, twist(rng));
        CHECK(check_d_squared(s.dga).empty());
        CHECK(check_degree_law(s.dga).empty());
        CHECK(verify_inclusion(s));
        ++done;
    }
    CHECK(nontrivial > 50);
}

TEST_CASE("lambda twist multiplies the loop term") {
    std::mt19937_64 rng(7);
    DGA t = catalog_dga("trefoil", 3);
    for (int i = 0; i < 3; ++i) {
        DGAMorphism phi = homotopy_endomorphism(t, random_homotopy(t, rng));
        SpunDGA s0 = twist_spun_dga(t, phi, 0);
        SpunDGA s1 = twist_spun_dga(t, phi, 1);
        for (GenId x = 0; x < t.size(); ++x) {
            NCPoly loop = phi.images[x] - t.gen(x);
            NCPoly lifted(3);
            for (const auto& [key, c] : loop.terms())
                lifted.add_term(key.word, {c, key.mu, key.lambda + 1});
            CHECK(s1.dga.d[s1.hat(x)] - s0.dga.d[s0.hat(x)] == lifted - loop);
        }
    }
}

TEST_CASE("inclusion check") {
    SpunDGA s = catalog_spun("spun-trefoil", 2);
    CHECK(verify_inclusion(s));
    SpunDGA edited = s;
    edited.dga.d[0] += edited.dga.one();
    CHECK(!verify_inclusion(edited));
}

TEST_CASE("augmentations pull back along the inclusion") {
    std::mt19937_64 rng(53);
    for (std::uint32_t p : {2u, 3u}) {
        Fp mu0 = p == 2 ? 1 : leverson_mu(p);
        for (const DGA& a : spin_sources(p)) {
            std::vector<DGAMorphism> loops{identity_morphism(a), random_endomorphism(a, rng)};
            for (const DGAMorphism& phi : loops) {
                SpunDGA s = twist_spun_dga(a, phi);
                auto source_augs = find_augmentations(a, p, mu0, 1, false, 1u << 16);
                std::set<std::vector<Fp>> allowed;
                for (const auto& e : source_augs)
                    allowed.insert(e.values);
                auto spun_augs = find_augmentations(s.dga, p, mu0, 1, true);
                for (const auto& e : spun_augs) {
                    Augmentation r = restrict_augmentation(e, a.size());
                    CHECK(is_augmentation(a, r));
                    CHECK(allowed.count(r.values) == 1);
                }
            }
        }
    }
}

TEST_CASE("spun trefoil pullback over the two field sizes") {
    for (std::uint32_t p : {2u, 3u}) {
        Fp mu0 = p == 2 ? 1 : leverson_mu(p);
        SpunDGA s = catalog_spun("spun-trefoil", p);
        auto source = find_augmentations(s.source, p, mu0, 1);
        auto spun = find_augmentations(s.dga, p, mu0, 1);
        CHECK(!spun.empty());
        std::set<std::vector<Fp>> restricted;
        for (const auto& e : spun)
            restricted.insert(restrict_augmentation(e, s.n()).values);
        std::set<std::vector<Fp>> base;
        for (const auto& e : source)
            base.insert(e.values);
        CHECK(std::includes(base.begin(), base.end(), restricted.begin(), restricted.end()));
    }
}

TEST_CASE("filtered loops keep the action law") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        DGA m = filtered_model(p);
        std::vector<NCPoly> K(m.size(), NCPoly(p));
        K[m.index("c")] = m.gen(m.index("e"));
        DGAMorphism phi = homotopy_endomorphism(m, K);
        CHECK(phi.images[m.index("c")] == m.gen(m.index("c")) + m.gen(m.index("f")));
        for (int k : {-1, 0, 2}) {
            SpunDGA s = twist_spun_dga(m, phi, k);
            CHECK(s.dga.d[s.hat(m.index("c"))] == NCPoly::monomial(p, {m.index("f")}, 1, 0, k));
            CHECK(check_action_law(s.dga).empty());
            CHECK(check_d_squared(s.dga).empty());
        }
    }
}

TEST_CASE("unfiltered loops are caught by the loader") {
    std::mt19937_64 rng(61);
    DGA t = catalog_dga("trefoil", 3);
    std::vector<NCPoly> K(t.size(), NCPoly(3));
    K[t.index("b1")] = t.gen(t.index("a1"));
    SpunDGA s = twist_spun_dga(t, homotopy_endomorphism(t, K));
    CHECK(check_d_squared(s.dga).empty());
    CHECK(!check_action_law(s.dga).empty());
    Json j = dga_to_json(s.dga, spun_provenance(s), false);
    CHECK(code_of([&] { dga_from_json(j); }) == ErrorCode::VerificationFailed);
    DGAFile f = dga_from_json(j, false);
    CHECK(!f.verified);
    CHECK(f.dga == s.dga);
}

TEST_CASE("spun provenance round trip") {
    DGA t = filtered_model(3);
    std::vector<NCPoly> K(t.size(), NCPoly(3));
    K[t.index("c")] = t.gen(t.index("e"));
    SpunDGA s = twist_spun_dga(t, homotopy_endomorphism(t, K), 1);
    Json j = dga_to_json(s.dga, spun_provenance(s));
    DGAFile f = dga_from_json(j);
    CHECK(f.dga == s.dga);
    SpunDGA back = spun_from_file(f);
    CHECK(back.dga == s.dga);
    CHECK(back.phi == s.phi);
    CHECK(back.lambda_twist == 1);
    CHECK(back.eps == s.eps);
}
