#include <doctest.h>

#include "homw1/gf2alg.hpp"
#include "homw1/posets.hpp"
#include "homw1/products.hpp"
#include "oracles.hpp"

using namespace homw1;
using namespace homw1::gf2alg;
using homw1::posets::SimplicialComplex;

namespace {

SimplicialComplex cycle_complex(int n) {
    std::vector<std::vector<std::int32_t>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return oracle::close_complex(n, std::move(edges));
}

// the classical 6-vertex triangulation of the projective plane
SimplicialComplex rp2_six() {
    return oracle::close_complex(6, {{0, 1, 2},
                                     {0, 2, 3},
                                     {0, 3, 4},
                                     {0, 4, 5},
                                     {0, 1, 5},
                                     {1, 2, 4},
                                     {2, 3, 5},
                                     {1, 3, 4},
                                     {2, 4, 5},
                                     {1, 3, 5}});
}

// order-complex product of two triangulated circles
products::ProductComplex torus_product() {
    static SimplicialComplex c3 = cycle_complex(3);
    return products::product_complex({&c3, &c3}, 1u << 20, 1u << 24);
}

GF2Vector full_vector(std::size_t n) {
    GF2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i);
    return v;
}

GF2Matrix random_matrix(oracle::Rng& rng, std::size_t rows, std::size_t cols,
                        std::uint32_t percent) {
    GF2Matrix m;
    m.rows = rows;
    m.cols = cols;
    m.col.resize(cols);
    for (auto& c : m.col)
        for (std::size_t r = 0; r < rows; ++r)
            if (rng.chance(percent)) c.push_back(static_cast<std::int32_t>(r));
    return m;
}

Cochain random_cochain(oracle::Rng& rng, const SimplicialComplex& c, int dim) {
    Cochain a{dim, GF2Vector(c.simplex_count(dim))};
    for (std::size_t i = 0; i < a.bits.size(); ++i)
        if (rng.chance(50)) a.bits.set(i);
    return a;
}

}  // namespace

TEST_SUITE_BEGIN("gf2alg");

TEST_CASE("boundary matrices of tiny complexes") {
    auto hollow = boundary_matrices(cycle_complex(3));
    CHECK(hollow.boundary[1].rows == 3);
    CHECK(hollow.boundary[1].cols == 3);
    CHECK(rank(hollow.boundary[1]) == 2);

    auto pt = boundary_matrices(oracle::close_complex(1, {}));
    CHECK(pt.dim() == 0);
    CHECK(pt.boundary[0].rows == 0);

    auto full = boundary_matrices(oracle::close_complex(3, {{0, 1, 2}}));
    CHECK(full.boundary[2].cols == 1);
    CHECK(full.boundary[2].col[0].size() == 3);
}

TEST_CASE("betti numbers of model spaces") {
    CHECK(betti(boundary_matrices(cycle_complex(6))) == std::vector<long long>{1, 1});
    CHECK(betti(boundary_matrices(rp2_six())) == std::vector<long long>{1, 1, 1});
    auto torus = torus_product();
    CHECK(betti(boundary_matrices(torus.triangulation)) == std::vector<long long>{1, 2, 1});
}

TEST_CASE("betti agrees with the dense oracle") {
    CHECK(betti(boundary_matrices(rp2_six())) == oracle::dense_betti(rp2_six()));
    auto hex = cycle_complex(6);
    CHECK(betti(boundary_matrices(hex)) == oracle::dense_betti(hex));
}

TEST_CASE("is_boundary") {
    auto full = oracle::close_complex(3, {{0, 1, 2}});
    auto cc = boundary_matrices(full);
    GF2Vector tri_boundary = cc.boundary[2].apply(full_vector(1));
    CHECK(is_boundary(cc, 1, tri_boundary));

    auto hex = cycle_complex(6);
    auto hcc = boundary_matrices(hex);
    CHECK(!is_boundary(hcc, 1, full_vector(6)));

    GF2Vector not_cycle(6);
    not_cycle.set(0);
    CHECK_THROWS_AS(is_boundary(hcc, 1, not_cycle), InvalidInput);
}

TEST_CASE("meridians on the torus product") {
    auto torus = torus_product();
    auto cc = boundary_matrices(torus.triangulation);
    auto meridian = [&](std::int32_t v) {
        GF2Vector z(torus.triangulation.simplex_count(1));
        const auto& edges = torus.triangulation.tables[1];
        for (std::size_t r = 0; r < edges.size(); ++r) {
            auto e = edges[r];
            if (torus.tuples[e[0]][0] == v && torus.tuples[e[1]][0] == v) z.set(r);
        }
        return z;
    };
    GF2Vector m0 = meridian(0), m1 = meridian(1);
    CHECK(is_cycle(cc, 1, m0));
    CHECK(!is_boundary(cc, 1, m0));
    GF2Vector sum = m0;
    sum.xor_with(m1);
    CHECK(is_boundary(cc, 1, sum));  // parallel meridians cobound an annulus

    // is_boundary is invariant under adding a boundary
    GF2Vector shifted = m0;
    GF2Vector tri(torus.triangulation.simplex_count(2));
    tri.set(0);
    shifted.xor_with(cc.boundary[2].apply(tri));
    CHECK(!is_boundary(cc, 1, shifted));
}

TEST_CASE("cup products on the projective plane") {
    SimplicialComplex rp2 = rp2_six();
    auto cc = boundary_matrices(rp2);

    Cochain zero{1, GF2Vector(rp2.simplex_count(1))};
    Cochain beta{1, GF2Vector(rp2.simplex_count(1))};
    beta.bits.set(3);
    CHECK(cup_product(rp2, zero, beta).bits.is_zero());

    // dense-oracle search for a cocycle generating H^1: kernel of the
    // coboundary C^1 -> C^2 (rows = triangles), minus vertex coboundaries
    oracle::DenseMatrix d1(rp2.simplex_count(2),
                           std::vector<std::uint8_t>(rp2.simplex_count(1), 0));
    auto cols2 = oracle::dense_boundary_cols(rp2, 2);
    for (std::size_t j = 0; j < cols2.size(); ++j)
        for (std::size_t i = 0; i < cols2[j].size(); ++i) d1[j][i] = cols2[j][i];
    auto kernel = oracle::dense_kernel_basis(d1);
    auto cols1 = oracle::dense_boundary_cols(rp2, 1);  // coboundaries of vertices = columns^T
    std::vector<std::vector<std::uint8_t>> cob_cols(rp2.simplex_count(0));
    for (std::size_t v = 0; v < rp2.simplex_count(0); ++v) {
        cob_cols[v].assign(rp2.simplex_count(1), 0);
        for (std::size_t e = 0; e < cols1.size(); ++e) cob_cols[v][e] = cols1[e][v];
    }
    Cochain gen{1, GF2Vector(rp2.simplex_count(1))};
    bool found = false;
    for (const auto& k : kernel) {
        if (oracle::dense_in_span(cob_cols, k)) continue;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i]) gen.bits.set(i);
        found = true;
        break;
    }
    REQUIRE(found);
    CHECK(is_cocycle(cc, gen));
    CHECK(!is_coboundary(cc, gen));
    Cochain square = cup_product(rp2, gen, gen);
    CHECK(is_cocycle(cc, square));
    CHECK(!is_coboundary(cc, square));  // H^*(RP^2) ring: generator squares to the top class
}

TEST_CASE("cup products pair the torus generators with the fundamental class") {
    auto torus = torus_product();
    const auto& tri = torus.triangulation;
    auto cc = boundary_matrices(tri);
    // crossing cocycles: factor-i projection of an edge equals the fixed pair
    // (vertex 0, edge {0,1}) of the 3-cycle face poset (ids 0 and 3)
    auto crossing = [&](int factor) {
        Cochain a{1, GF2Vector(tri.simplex_count(1))};
        const auto& edges = tri.tables[1];
        for (std::size_t r = 0; r < edges.size(); ++r) {
            auto e = edges[r];
            std::int32_t x = torus.tuples[e[0]][factor], y = torus.tuples[e[1]][factor];
            if ((x == 0 && y == 3) || (x == 3 && y == 0)) a.bits.set(r);
        }
        return a;
    };
    Cochain a = crossing(0), b = crossing(1);
    CHECK(is_cocycle(cc, a));
    CHECK(is_cocycle(cc, b));
    CHECK(!is_coboundary(cc, a));
    // a cup b and b cup a are cohomologous mod 2 and each represents the top
    // class: both evaluate to 1 on the fundamental cycle
    Cochain ab = cup_product(tri, a, b);
    Cochain ba = cup_product(tri, b, a);
    CHECK(is_cocycle(cc, ab));
    CHECK(!is_coboundary(cc, ab));
    CHECK(ab.bits.popcount() % 2 == 1);
    CHECK(ba.bits.popcount() % 2 == 1);
    Cochain sum{2, ab.bits};
    sum.bits.xor_with(ba.bits);
    CHECK(is_coboundary(cc, sum));
}

TEST_CASE("cup dimension overflow returns the empty cochain") {
    auto hex = cycle_complex(6);
    Cochain a{1, full_vector(6)};
    Cochain prod = cup_product(hex, a, a);
    CHECK(prod.dim == 2);
    CHECK(prod.bits.size() == 0);
}

TEST_CASE("Leibniz rule for cup products") {
    oracle::Rng rng(20260808);
    for (int trial = 0; trial < 15; ++trial) {
        posets::Poset p = oracle::random_poset(rng, 6 + trial % 3, 40);
        SimplicialComplex c = posets::order_complex(p);
        if (c.dim() < 1) continue;
        auto cc = boundary_matrices(c);
        int pdim = static_cast<int>(rng.below(2));
        int qdim = static_cast<int>(rng.below(2));
        if (pdim + qdim + 1 > c.dim()) continue;
        Cochain a = random_cochain(rng, c, pdim);
        Cochain b = random_cochain(rng, c, qdim);
        Cochain lhs = coboundary(cc, cup_product(c, a, b));
        Cochain rhs = cup_product(c, coboundary(cc, a), b);
        rhs.bits.xor_with(cup_product(c, a, coboundary(cc, b)).bits);
        CHECK(lhs.bits == rhs.bits);
    }
}

TEST_CASE("coboundary of coboundary vanishes") {
    oracle::Rng rng(99);
    auto rp2 = rp2_six();
    auto cc = boundary_matrices(rp2);
    for (int trial = 0; trial < 10; ++trial) {
        Cochain a = random_cochain(rng, rp2, 0);
        CHECK(coboundary(cc, coboundary(cc, a)).bits.is_zero());
    }
}

TEST_CASE("sparse and dense elimination agree") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        GF2Matrix m = random_matrix(rng, 1 + rng.below(40), 1 + rng.below(40), 25);
        std::size_t rs = rank(m, SolveMode::Sparse);
        std::size_t rd = rank(m, SolveMode::Dense);
        CHECK(rs == rd);
        // also against the dense-oracle row reduction
        oracle::DenseMatrix dm(m.rows, std::vector<std::uint8_t>(m.cols, 0));
        for (std::size_t j = 0; j < m.cols; ++j)
            for (auto r : m.col[j]) dm[r][j] = 1;
        CHECK(rs == oracle::dense_rank(dm));
    }
}

TEST_CASE("betti is invariant under barycentric subdivision") {
    std::vector<SimplicialComplex> corpus;
    corpus.push_back(cycle_complex(6));
    corpus.push_back(rp2_six());
    corpus.push_back(oracle::close_complex(3, {{0, 1, 2}}));
    for (const auto& c : corpus) {
        auto sub = posets::barycentric_subdivide(c);
        CHECK(betti(boundary_matrices(c)) == betti(boundary_matrices(sub)));
        CHECK(c.euler_characteristic() == sub.euler_characteristic());
    }
}

TEST_CASE("pushforward of cycles") {
    auto hex = cycle_complex(6);
    GF2Vector fund = full_vector(6);
    std::vector<std::int32_t> identity = {0, 1, 2, 3, 4, 5};
    CHECK(pushforward_cycle(hex, hex, identity, 1, fund) == fund);

    // hexagon -> triangle quotient: each target edge is hit twice
    posets::Quotient q = posets::quotient_by_involution(hex, {3, 4, 5, 0, 1, 2});
    GF2Vector image = pushforward_cycle(hex, q.complex, q.projection, 1, fund);
    CHECK(image.is_zero());

    // inclusion of a meridian circle into the torus product
    auto torus = torus_product();
    auto circle = cycle_complex(6);
    std::vector<std::int32_t> incl = {0, 3, 1, 5, 2, 4};  // (0,v)/(0,e) ids, cycle order
    GF2Vector pushed = pushforward_cycle(circle, torus.triangulation, incl, 1, full_vector(6));
    GF2Vector expected(torus.triangulation.simplex_count(1));
    const auto& edges = torus.triangulation.tables[1];
    for (std::size_t r = 0; r < edges.size(); ++r)
        if (torus.tuples[edges[r][0]][0] == 0 && torus.tuples[edges[r][1]][0] == 0)
            expected.set(r);
    CHECK(pushed == expected);
    CHECK(!is_boundary(boundary_matrices(torus.triangulation), 1, pushed));

    // non-simplicial maps are rejected
    std::vector<std::int32_t> bad = {0, 2, 4, 0, 2, 4};
    CHECK_THROWS_AS(pushforward_cycle(hex, hex, bad, 1, fund), InvalidInput);
}

TEST_CASE("matrix dump format") {
    GF2Matrix m;
    m.rows = 3;
    m.cols = 2;
    m.col = {{0, 2}, {}};
    CHECK(dump_matrix(m) == "3 2\n0 2\n\n");
}

TEST_SUITE_END();
