#include <doctest.h>

#include "homw1/gf2alg.hpp"
#include "homw1/graphs.hpp"
#include "homw1/homcomplex.hpp"
#include "oracles.hpp"

using namespace homw1;
using namespace homw1::homcomplex;
using homw1::graphs::make_complete;
using homw1::graphs::make_cycle;

TEST_SUITE_BEGIN("homcomplex");

TEST_CASE("hom poset element counts") {
    auto k2k3 = hom_poset(make_complete(2), make_complete(3));
    // sum over nonempty A of [3] of the number of nonempty B disjoint from A
    std::size_t expected = 0;
    for (int a = 1; a < 8; ++a)
        for (int b = 1; b < 8; ++b)
            if ((a & b) == 0) ++expected;
    CHECK(k2k3.size() == expected);
    CHECK(k2k3.size() == 12);

    CHECK(hom_poset(make_cycle(5), make_complete(2)).empty());
    CHECK(hom_poset(make_complete(1), make_complete(3)).size() == 7);
}

TEST_CASE("hom poset guard") {
    CHECK_THROWS_AS(hom_poset(make_complete(2), make_complete(4), 10), GuardExceeded);
}

TEST_CASE("minimal elements are the graph homomorphisms") {
    std::vector<std::pair<graphs::Graph, graphs::Graph>> cases = {
        {make_complete(2), make_complete(3)},
        {make_cycle(5), make_complete(3)},
        {make_cycle(3), make_complete(4)},
    };
    for (const auto& [g, h] : cases) {
        auto hp = hom_poset(g, h);
        CHECK(static_cast<long long>(hp.poset.minimal_elements().size()) ==
              graphs::count_homomorphisms(g, h));
        // minimal elements assign singletons everywhere
        for (auto m : hp.poset.minimal_elements())
            for (auto s : hp.elements[m].sets) CHECK(__builtin_popcount(s) == 1);
    }
}

TEST_CASE("order relation is componentwise inclusion") {
    auto hp = hom_poset(make_cycle(5), make_complete(3));
    for (int a = 0; a < hp.poset.size(); ++a)
        for (int b = 0; b < hp.poset.size(); ++b) {
            if (a == b) continue;
            bool subset = true;
            for (int v = 0; v < 5; ++v)
                subset = subset &&
                         (hp.elements[a].sets[v] & hp.elements[b].sets[v]) == hp.elements[a].sets[v];
            CHECK(hp.poset.less(a, b) == subset);
        }
}

TEST_CASE("induced involution of the K_2 swap") {
    auto hp = hom_poset(make_complete(2), make_complete(3));
    graphs::GraphAutomorphism swap{{1, 0}};
    auto tau = induced_involution(hp, swap);
    int fixed = 0, pairs = 0;
    for (std::size_t e = 0; e < hp.size(); ++e) {
        if (tau[e] == static_cast<std::int32_t>(e)) ++fixed;
        if (tau[e] > static_cast<std::int32_t>(e)) ++pairs;
        // (A,B) goes to (B,A)
        CHECK(hp.elements[tau[e]].sets[0] == hp.elements[e].sets[1]);
        CHECK(hp.elements[tau[e]].sets[1] == hp.elements[e].sets[0]);
    }
    CHECK(fixed == 0);
    CHECK(pairs == 6);
}

TEST_CASE("induced involution is order preserving and self-inverse") {
    auto hp = hom_poset(make_cycle(5), make_complete(3));
    auto tau = induced_involution(hp, graphs::flip_automorphism(hp.g));
    for (std::size_t e = 0; e < hp.size(); ++e)
        CHECK(tau[tau[e]] == static_cast<std::int32_t>(e));
    for (int a = 0; a < hp.poset.size(); ++a)
        for (int b = 0; b < hp.poset.size(); ++b)
            CHECK(hp.poset.less(a, b) == hp.poset.less(tau[a], tau[b]));
    // the flip formula: (tau phi)(v_i) = phi(v_{2r-i})
    for (std::size_t e = 0; e < hp.size(); ++e)
        for (int i = 0; i < 5; ++i)
            CHECK(hp.elements[tau[e]].sets[i] == hp.elements[e].sets[(5 - 1 - i + 5) % 5]);
}

TEST_CASE("freeness of the flip and swap actions") {
    auto c5k3 = hom_poset(make_cycle(5), make_complete(3));
    auto flip = induced_involution(c5k3, graphs::flip_automorphism(c5k3.g));
    auto rep = check_freeness(c5k3, flip);
    CHECK(rep.free);

    auto k2k4 = hom_poset(make_complete(2), make_complete(4));
    graphs::GraphAutomorphism swap{{1, 0}};
    auto rep2 = check_freeness(k2k4, induced_involution(k2k4, swap));
    CHECK(rep2.free);

    // the identity is rejected with a witness
    graphs::GraphAutomorphism ident{{0, 1}};
    auto rep3 = check_freeness(k2k4, induced_involution(k2k4, ident));
    CHECK(!rep3.free);
    CHECK(rep3.fixed_element);
    CHECK(rep3.witness >= 0);
}

TEST_CASE("involution rejects non-automorphisms") {
    auto hp = hom_poset(make_cycle(5), make_complete(3));
    graphs::GraphAutomorphism bad{{1, 0, 2, 3, 4}};  // not an automorphism of C_5
    CHECK_THROWS_AS(induced_involution(hp, bad), InvalidInput);
}

TEST_CASE("carrier lemmas hold on all maximal chains") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}}) {
        auto rep = verify_f_lemmas(r, n);
        CHECK(rep.pass);
        CHECK(rep.chains_checked > 0);
        INFO("r=", r, " n=", n, " failure=", rep.failure);
    }
}

TEST_CASE("sphere model points") {
    // w_A = chi_A - (|A|/(n+2)) ones; complement is exact negation
    auto w1 = sphere_point(0b001, 3);
    CHECK(w1 == std::vector<Rational>{{2, 3}, {-1, 3}, {-1, 3}});
    auto w23 = sphere_point(0b110, 3);
    for (int c = 0; c < 3; ++c) CHECK(w23[c] == -w1[c]);
    CHECK_THROWS_AS(sphere_point(0, 3), InvalidInput);
    CHECK_THROWS_AS(sphere_point(0b111, 3), InvalidInput);
}

TEST_CASE("f vertex map worked example") {
    Multihom phi{{0b001, 0b010, 0b100}};  // ({0},{1},{2}) on v_0,v_1,v_2
    auto f = f_vertex_map(phi, 3);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::vector<Rational>{{1, 2}, {0}, {-1, 2}});
    CHECK(f[1] == std::vector<Rational>{{-1, 3}, {2, 3}, {-1, 3}});

    // tau phi = ({2},{1},{0}); f_0(tau phi) = -f_0(phi)
    Multihom tau_phi{{0b100, 0b010, 0b001}};
    auto ft = f_vertex_map(tau_phi, 3);
    CHECK(ft[0] == std::vector<Rational>{{-1, 2}, {0}, {1, 2}});
    for (int c = 0; c < 3; ++c) CHECK(ft[0][c] == -f[0][c]);
}

TEST_CASE("proportionality predicates") {
    using V = std::vector<Rational>;
    V a{{1, 2}, {0}, {-1, 2}};
    V b{{1}, {0}, {-1}};
    CHECK(positively_proportional(a, b));
    CHECK(!antipodally_proportional(a, b));
    V c{{-1}, {0}, {1}};
    CHECK(antipodally_proportional(a, c));
    CHECK(!positively_proportional(a, c));
    V d{{1}, {1}, {-2}};
    CHECK(!positively_proportional(a, d));
    CHECK(!antipodally_proportional(a, d));
}

TEST_CASE("f equivariance and forbidden-set avoidance") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
        auto rep = verify_f_equivariance(r, n);
        INFO("r=", r, " n=", n, " failure=", rep.failure);
        CHECK(rep.pass);
        CHECK(rep.elements_checked > 0);
    }
}

TEST_CASE("hom order complex matches the sphere for K_2 targets") {
    auto hp = hom_poset(make_complete(2), make_complete(3));
    auto oc = hom_order_complex(hp);
    CHECK(oc.simplex_count(0) == 12);
    CHECK(oc.simplex_count(1) == 12);
    CHECK(gf2alg::betti(gf2alg::boundary_matrices(oc)) == std::vector<long long>{1, 1});
    CHECK(!oc.labels.empty());  // elements are traceable
}

TEST_SUITE_END();
