#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homw1/errors.hpp"
#include "homw1/gf2alg.hpp"
#include "homw1/graphs.hpp"
#include "homw1/posets.hpp"

namespace homw1::charclass {

struct DoubleCover {
    posets::SimplicialComplex total;       // possibly subdivided input
    posets::VertexPerm involution;
    posets::SimplicialComplex quotient;
    std::vector<std::int32_t> projection;      // total vertex -> quotient vertex
    std::vector<std::int32_t> representative;  // quotient vertex -> total vertex
    int subdivisions = 0;
};

// Quotients by the involution, subdividing on a non-simplicial quotient at
// most twice.  Throws QuotientError{NotFree} for a non-free action.
DoubleCover build_double_cover(posets::SimplicialComplex c, posets::VertexPerm t);

// Sheet-swap 1-cocycle on the quotient: a quotient edge gets 0 iff the lift
// starting at the representative of one end lands on the representative of
// the other.
gf2alg::Cochain w1_cocycle(const DoubleCover& dc);

// n-fold cup power of w1 under the given vertex order, tested for being a
// coboundary.  n = 0 encodes the H^0(X/Z2) convention: true iff empty.
bool w1_power_vanishes(const DoubleCover& dc, const gf2alg::GF2ChainComplex& qcc, int n,
                       std::span<const std::int32_t> vertex_rank = {});
bool w1_power_vanishes(const DoubleCover& dc, int n);

// -1 for the empty space, else the largest n with w1^n nonzero.
int w1_height(const DoubleCover& dc);

struct W1Report {
    int height = -1;
    std::vector<std::pair<int, bool>> powers;  // (n, vanishes), ascending n
    std::vector<long long> quotient_betti;
    int subdivisions = 0;
    std::string vertex_order = "lex";
};

W1Report w1_report(const DoubleCover& dc, bool with_betti = true);

enum class BoundTest { K2, OddCycle };

struct BoundCertificate {
    int bound = 1;
    int height = -1;
    BoundTest test = BoundTest::K2;
    int odd_cycle_r = 0;               // for OddCycle: the tested C_{2r+1}
    std::size_t hom_elements = 0;
    bool degenerate = false;           // edgeless target or empty Hom
    std::vector<long long> quotient_betti;
    int subdivisions = 0;
};

// Topological chromatic lower bound: h = w1 height of Hom(test, g) with the
// swap/flip action; bound = h + 2 for K_2, h + 3 for odd cycles.  Degenerate
// guards keep the bound sound when the Hom space is empty.
BoundCertificate chromatic_lower_bound(const graphs::Graph& g, BoundTest test, int r = 1,
                                       const Guards& guards = {});

}  // namespace homw1::charclass
