#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homw1/errors.hpp"
#include "homw1/gf2alg.hpp"
#include "homw1/posets.hpp"

namespace homw1::products {

// bsd of the boundary of an (n+1)-simplex: order complex of the proper
// nonempty subsets of an (n+2)-set, with complementation as a free involution.
struct SphereComplex {
    int n = 0;
    posets::SimplicialComplex complex;
    posets::VertexPerm involution;               // vertex complementation
    std::vector<std::uint32_t> vertex_subset;    // vertex -> subset bitmask
    int base_vertex = 0;                         // the vertex labeled {0}
};

SphereComplex sphere_complex(int n);

// Product of simplicial complexes triangulated as the order complex of the
// product of their face posets.  tuples[e] = per-factor simplex id, where a
// factor simplex id is offset[dim] + rank in that factor's tables.
struct ProductComplex {
    posets::Poset cell_poset;
    std::vector<std::vector<std::int32_t>> tuples;
    posets::SimplicialComplex triangulation;  // order complex of cell_poset
    std::vector<std::vector<std::int32_t>> factor_offsets;  // per factor, per dim
};

ProductComplex product_complex(const std::vector<const posets::SimplicialComplex*>& factors,
                               std::size_t guard_elements, std::size_t guard_simplices);

// X_{r,n} = (S^n)^{2r} with tau(x)_0 = -x_0, tau(x)_i = x_{2r-i}.
struct ProductBuild {
    int r = 0, n = 0;
    SphereComplex sphere;
    ProductComplex product;
    posets::VertexPerm tau;  // on triangulation vertices (= cell poset elements)
};

// Supported pairs: (1,1), (1,2), (2,1).  (2,2) and beyond are rejected: the
// flag count of the product face poset grows factorially with cell dimension.
ProductBuild build_X(int r, int n);

struct NamedCycle {
    std::string label;
    int dim = 0;
    gf2alg::GF2Vector cycle;
};

// c_i: factor i fixed at the base vertex (the subset {0}), full spheres
// elsewhere.  diag_i: elements with equal factors i and i+1.  antidiag:
// elements whose last factor is the complement of factor 0.
NamedCycle named_cycle_c(const ProductBuild& x, int i);
NamedCycle named_cycle_diag(const ProductBuild& x, int i);
NamedCycle named_cycle_antidiag(const ProductBuild& x);

struct Section3Report {
    bool pass = false;
    std::vector<std::pair<std::string, bool>> assertions;
    std::vector<long long> quotient_betti;
    int subdivisions = 0;
    std::string failure;
};

// Desk-scale verification:
//  (a) c_i + c_{i+1} + diag_i bounds for 0 <= i < 2r-1, and the wraparound
//      c_{2r-1} + tau_# c_0 + antidiag bounds;
//  (b) the quotient pushforward of c_r bounds;
//  (c) the quotient pushforward of c_0 + diag_0 + ... + diag_{r-1} bounds.
Section3Report verify_section3(int r, int n);

}  // namespace homw1::products
