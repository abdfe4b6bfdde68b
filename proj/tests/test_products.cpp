#include <doctest.h>

#include "homw1/charclass.hpp"
#include "homw1/gf2alg.hpp"
#include "homw1/products.hpp"
#include "oracles.hpp"

using namespace homw1;
using namespace homw1::products;

TEST_SUITE_BEGIN("products");

TEST_CASE("sphere complexes") {
    SphereComplex s0 = sphere_complex(0);
    CHECK(s0.complex.simplex_count(0) == 2);
    CHECK(s0.complex.dim() == 0);
    CHECK(s0.involution == posets::VertexPerm{1, 0});

    SphereComplex s1 = sphere_complex(1);
    CHECK(s1.complex.simplex_count(0) == 6);
    CHECK(s1.complex.simplex_count(1) == 6);
    CHECK(gf2alg::betti(gf2alg::boundary_matrices(s1.complex)) ==
          std::vector<long long>{1, 1});

    SphereComplex s2 = sphere_complex(2);
    CHECK(s2.complex.simplex_count(0) == 14);
    CHECK(s2.complex.simplex_count(1) == 36);
    CHECK(s2.complex.simplex_count(2) == 24);
    CHECK(gf2alg::betti(gf2alg::boundary_matrices(s2.complex)) ==
          std::vector<long long>{1, 0, 1});

    // complementation is free and never compares a subset with its complement
    for (int n = 0; n <= 2; ++n) {
        SphereComplex sc = sphere_complex(n);
        for (std::size_t v = 0; v < sc.complex.vertex_count(); ++v)
            CHECK(sc.involution[v] != static_cast<std::int32_t>(v));
    }
}

TEST_CASE("the product cell poset of X_{1,1}") {
    ProductBuild x = build_X(1, 1);
    CHECK(x.product.cell_poset.size() == 144);
    CHECK(gf2alg::betti(gf2alg::boundary_matrices(x.product.triangulation)) ==
          std::vector<long long>{1, 2, 1});

    // tau is free, involutive and fixes no simplex
    const auto& tri = x.product.triangulation;
    for (std::size_t e = 0; e < x.tau.size(); ++e)
        CHECK(x.tau[e] != static_cast<std::int32_t>(e));
    for (int d = 0; d <= tri.dim(); ++d)
        for (std::size_t r = 0; r < tri.tables[d].size(); ++r) {
            auto img = posets::map_simplex(tri.tables[d], x.tau, tri.tables[d][r]);
            REQUIRE(img.has_value());
            CHECK(*img != r);
        }
}

TEST_CASE("X_{1,2} has the Kunneth betti table") {
    ProductBuild x = build_X(1, 2);
    CHECK(gf2alg::betti(gf2alg::boundary_matrices(x.product.triangulation)) ==
          std::vector<long long>{1, 0, 2, 0, 1});
}

TEST_CASE("unsupported sizes are rejected") {
    CHECK_THROWS_AS(build_X(2, 2), GuardExceeded);
    CHECK_THROWS_AS(build_X(3, 1), GuardExceeded);
    CHECK_THROWS_AS(build_X(0, 1), InvalidInput);
}

TEST_CASE("named cycles of the torus") {
    ProductBuild x = build_X(1, 1);
    auto cc = gf2alg::boundary_matrices(x.product.triangulation);

    NamedCycle c0 = named_cycle_c(x, 0);
    NamedCycle c1 = named_cycle_c(x, 1);
    NamedCycle diag = named_cycle_diag(x, 0);
    NamedCycle anti = named_cycle_antidiag(x);

    CHECK(c0.cycle.popcount() == 12);
    CHECK(diag.cycle.popcount() == 12);
    for (const NamedCycle* z : {&c0, &c1, &diag, &anti})
        CHECK(gf2alg::is_cycle(cc, 1, z->cycle));

    CHECK(!gf2alg::is_boundary(cc, 1, c0.cycle));
    CHECK(!gf2alg::is_boundary(cc, 1, c1.cycle));
    // c_0, c_1 are independent in H_1
    gf2alg::GF2Vector sum = c0.cycle;
    sum.xor_with(c1.cycle);
    CHECK(!gf2alg::is_boundary(cc, 1, sum));
}

TEST_CASE("quotient simplex counts halve") {
    ProductBuild x = build_X(1, 1);
    auto dc = charclass::build_double_cover(x.product.triangulation, x.tau);
    for (int d = 0; d <= dc.total.dim(); ++d)
        CHECK(dc.total.simplex_count(d) == 2 * dc.quotient.simplex_count(d));
}

TEST_CASE("section 3 verification at (1,1)") {
    Section3Report rep = verify_section3(1, 1);
    INFO("failure: ", rep.failure);
    CHECK(rep.pass);
    CHECK(rep.assertions.size() == 4);
    CHECK(rep.quotient_betti == std::vector<long long>{1, 2, 1});
    for (const auto& [name, ok] : rep.assertions) {
        INFO("assertion: ", name);
        CHECK(ok);
    }
}

TEST_CASE("generic product complex matches the hand count") {
    // two triangulated circles: 36 cells, 9-vertex base grid
    auto c3 = oracle::close_complex(3, {{0, 1}, {1, 2}, {0, 2}});
    ProductComplex torus = product_complex({&c3, &c3}, 1u << 20, 1u << 24);
    CHECK(torus.cell_poset.size() == 36);
    CHECK(torus.triangulation.simplex_count(0) == 36);
    CHECK(torus.triangulation.simplex_count(1) == 108);
    CHECK(torus.triangulation.simplex_count(2) == 72);
    CHECK(torus.triangulation.euler_characteristic() == 0);
}

TEST_SUITE_END();
