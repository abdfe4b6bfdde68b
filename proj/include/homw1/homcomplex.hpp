#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homw1/errors.hpp"
#include "homw1/graphs.hpp"
#include "homw1/posets.hpp"
#include "homw1/rational.hpp"

namespace homw1::homcomplex {

// Assignment of a nonempty subset of V(h) (bitmask) to each vertex of g such
// that across every edge of g all color pairs are edges of h.
struct Multihom {
    std::vector<std::uint32_t> sets;  // indexed by vertex of g

    bool operator==(const Multihom&) const = default;
    std::string str() const;  // e.g. "0;1,2;3"
};

struct HomPoset {
    graphs::Graph g, h;
    std::vector<Multihom> elements;  // lexicographic by mask vector
    posets::Poset poset;             // componentwise inclusion order

    bool empty() const { return elements.empty(); }
    std::size_t size() const { return elements.size(); }
    int index_of(const Multihom& m) const;  // -1 if absent
};

// Complete enumeration by backtracking with neighbor compatibility pruning.
HomPoset hom_poset(const graphs::Graph& g, const graphs::Graph& h,
                   std::size_t guard_elements = Guards{}.max_poset_elements);

// Element permutation induced by an involutive automorphism a of g:
// (a phi)(v) = phi(a(v)).  Order preserving by construction; validated.
std::vector<std::int32_t> induced_involution(const HomPoset& hp,
                                             const graphs::GraphAutomorphism& a);

struct FreenessReport {
    bool free = false;
    bool fixed_element = false;
    bool comparable_pair = false;
    int witness = -1;  // offending element index, -1 when free
};

// Free iff no fixed element and no element comparable to its image; this makes
// the induced involution on the order complex fix no simplex and put no orbit
// pair inside one simplex.
FreenessReport check_freeness(const HomPoset& hp, const std::vector<std::int32_t>& invol);

struct FLemmaReport {
    bool pass = false;
    std::size_t chains_checked = 0;
    std::size_t elements = 0;
    std::string failure;  // first counterexample, empty when pass
};

// Checks, over every maximal chain of Hom(C_{2r+1}, K_{n+2}):
//  (a) for 0 < i < 2r-1 the value-set families at v_i and v_{i+1} are disjoint
//      (carrier simplices of consecutive coordinate maps share no vertex);
//  (b) the value-set family at v_1 differs from the family
//      {phi_j(v_0)} u {complement of phi_j(v_2r)} (carriers of the edge map
//      and the first vertex map differ).
FLemmaReport verify_f_lemmas(int r, int n,
                             std::size_t guard_elements = Guards{}.max_poset_elements);

// Rational sphere model.  A proper nonempty color set A maps to
// w_A = chi_A - (|A|/(n+2)) * ones, so that w_{complement A} = -w_A exactly.
std::vector<Rational> sphere_point(std::uint32_t mask, int colors);

// The 2r coordinate maps evaluated at one poset element:
//  coordinate 0      = (w_{phi(v_0)} + w_{complement phi(v_2r)}) / 2
//  coordinate i > 0  = w_{phi(v_i)}
std::vector<std::vector<Rational>> f_vertex_map(const Multihom& phi, int colors);

bool positively_proportional(const std::vector<Rational>& a, const std::vector<Rational>& b);
bool antipodally_proportional(const std::vector<Rational>& a, const std::vector<Rational>& b);

struct EquivarianceReport {
    bool pass = false;
    std::size_t elements_checked = 0;
    std::string failure;
};

// For every element phi: f(tau phi) = tau f(phi) exactly (coordinate 0 negates,
// coordinate i matches coordinate 2r-i), all coordinates nonzero, consecutive
// coordinates avoid the forbidden set: coordinates i, i+1 (i < 2r-1) are not
// positively proportional and coordinates 2r-1, 0 are not antipodal.
EquivarianceReport verify_f_equivariance(int r, int n,
                                         std::size_t guard_elements = Guards{}.max_poset_elements);

// Order complex of the multihom poset = barycentric subdivision of Hom(g,h),
// with element labels.
posets::SimplicialComplex hom_order_complex(const HomPoset& hp, int max_dim = -1,
                                            std::size_t guard_simplices = 0);

}  // namespace homw1::homcomplex
