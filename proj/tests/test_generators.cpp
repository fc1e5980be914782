#include <doctest.h>

#include "tightframe/errors.hpp"
#include "tightframe/framework.hpp"
#include "tightframe/generators.hpp"
#include "tightframe/walks.hpp"

using namespace tightframe;

TEST_CASE("three-class construction at n = 300") {
    VerifiedGraph vg = gen_bkt(300);
    CHECK(vg.graph.vertex_count() == 300);
    // c_300 = floor(sqrt(300)/12) = 1, so the middle class has 100 + 1 + 1 vertices
    CHECK(vg.graph.degree(0) == 102);
    CHECK(vg.all_checks_pass());
    CHECK_THROWS_AS(gen_bkt(301), InputError);
}

TEST_CASE("three-class construction satisfies its degree line") {
    for (long long n : {300, 600}) {
        VerifiedGraph vg = gen_bkt(n);
        bool found = false;
        for (auto& [name, ok] : vg.checks)
            if (name == "degree-sequence") { found = true; CHECK(ok); }
        CHECK(found);
        for (auto& [name, ok] : vg.checks)
            if (name == "no-p4-in-special-neighbourhood") CHECK(ok);
    }
}

TEST_CASE("higher-k extremal family") {
    VerifiedGraph vg = gen_posa_extremal_k(4, 75);
    CHECK(vg.graph.vertex_count() == 300);
    // vertices outside the tripled class have degree exactly (k-1) n = 225
    CHECK(vg.graph.degree(299) == 225);
    CHECK(vg.all_checks_pass());
    CHECK_THROWS_AS(gen_posa_extremal_k(3, 75), InputError);
}

TEST_CASE("separator construction snaps to integrality and splits ore from posa") {
    SeparatorResult sr = gen_ore_posa_separator(3, 360, Rational(1, 100), true);
    CHECK(sr.snapped_n % 6 == 0);
    CHECK(sr.x0_size == sr.snapped_n / 6);
    CHECK(sr.all_checks_pass());
    // the checks embed: ore holds at mu, posa (mu = 0) first fails at |X0|
    ConditionReport ore = ore_check(sr.graph, 3, Rational(1, 100));
    CHECK(ore.holds);
    ConditionReport posa = posa_check(sr.graph, 3, Rational(0));
    CHECK(!posa.holds);

    CHECK_THROWS_AS(gen_ore_posa_separator(3, 360, Rational(1, 100), false), InputError);
}

TEST_CASE("fragile framework base instance") {
    FragileFramework ff = gen_fragile_framework(2, 1);
    CHECK(ff.base_vertices == 17);
    CHECK(ff.graph.vertex_count() == 17);
    for (auto& [name, ok] : ff.checks) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(tight_components(ff.hypergraph).count == 2);

    CHECK_THROWS_AS(gen_fragile_framework(4, 1), InputError);  // not prime
    CHECK_THROWS_AS(gen_fragile_framework(5, 1), InputError);  // gcd(5, 2n) != 1
}

TEST_CASE("fragile framework blow-up keeps two components") {
    FragileFramework ff = gen_fragile_framework(2, 2);
    CHECK(ff.graph.vertex_count() == 2 * 16 + 1);
    CHECK(tight_components(ff.hypergraph).count == 2);
}

TEST_CASE("random generators") {
    Graph full = gen_random(6, Rational(1), 3);
    CHECK(full.edge_count() == 15);
    Graph none = gen_random(6, Rational(0), 3);
    CHECK(none.edge_count() == 0);
    Graph a = gen_random(10, Rational(1, 2), 42);
    Graph b = gen_random(10, Rational(1, 2), 42);
    CHECK(a.edges() == b.edges());
    Graph c = gen_random(10, Rational(1, 2), 43);
    CHECK(a.edges() != c.edges());

    Graph mp = gen_multipartite_random(3, 4, Rational(1), 0);
    CHECK(mp.vertex_count() == 12);
    CHECK(mp.edge_count() == 48);
    REQUIRE(mp.partition().has_value());
    CHECK(multipartite_degree(mp) == 4);
}
