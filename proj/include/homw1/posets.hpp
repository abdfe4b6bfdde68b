#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "homw1/errors.hpp"

namespace homw1::posets {

// Finite poset.  The full strict comparability relation is stored as sorted
// upper sets; chain enumeration and cover extraction only ever walk these.
class Poset {
public:
    Poset() = default;

    // above[i] = indices of elements strictly greater than i.  Validates
    // irreflexivity, antisymmetry and transitivity.
    static Poset from_strict_above(std::vector<std::vector<std::int32_t>> above,
                                   std::vector<std::string> labels = {});

    int size() const { return static_cast<int>(above_.size()); }
    bool less(int a, int b) const;  // strict
    bool leq(int a, int b) const { return a == b || less(a, b); }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }
    std::span<const std::int32_t> above(int a) const { return above_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::vector<std::int32_t>> cover_lists() const;
    std::vector<std::int32_t> minimal_elements() const;
    std::vector<std::int32_t> maximal_elements() const;

private:
    std::vector<std::vector<std::int32_t>> above_;
    std::vector<std::string> labels_;
};

// d-simplices of one dimension, each a strictly increasing vertex list,
// stored flat and sorted lexicographically (rank = position).
class SimplexTable {
public:
    SimplexTable() = default;
    SimplexTable(int dim, std::vector<std::int32_t> flat);

    int dim() const { return dim_; }
    std::size_t size() const { return count_; }
    std::span<const std::int32_t> operator[](std::size_t rank) const {
        return {flat_.data() + rank * (dim_ + 1), static_cast<std::size_t>(dim_ + 1)};
    }
    std::optional<std::size_t> rank_of(std::span<const std::int32_t> verts) const;

private:
    int dim_ = 0;
    std::size_t count_ = 0;
    std::vector<std::int32_t> flat_;
};

struct SimplicialComplex {
    std::vector<std::string> labels;  // per vertex; may be empty (unlabeled)
    std::vector<SimplexTable> tables; // tables[d] = d-simplices

    int dim() const { return static_cast<int>(tables.size()) - 1; }
    bool empty() const { return tables.empty(); }
    std::size_t vertex_count() const { return tables.empty() ? 0 : tables[0].size(); }
    std::size_t simplex_count(int d) const {
        return (d >= 0 && d <= dim()) ? tables[d].size() : 0;
    }
    std::size_t total_simplices() const;
    long long euler_characteristic() const;

    // Face closure, strict vertex ordering, vertex table completeness.
    void validate() const;
};

// Builds a complex from per-dimension simplex lists (sorted + deduped here).
SimplicialComplex make_complex(std::vector<std::vector<std::vector<std::int32_t>>> by_dim,
                               std::vector<std::string> labels = {});

using VertexPerm = std::vector<std::int32_t>;

// Simplicial self-inverse vertex map; throws InvalidInput otherwise.
void check_involution(const SimplicialComplex& c, const VertexPerm& t);

// Image of a simplex under a vertex permutation, as (dim, rank).
std::optional<std::size_t> map_simplex(const SimplexTable& table, const VertexPerm& t,
                                       std::span<const std::int32_t> verts);

// k-simplices are the (k+1)-chains of p.  max_dim < 0 means unbounded.
// guard_simplices = 0 means unlimited.
SimplicialComplex order_complex(const Poset& p, int max_dim = -1,
                                std::size_t guard_simplices = 0);

// Elements are the nonempty simplices of c, ordered by face inclusion, indexed
// by (dimension, rank) in lexicographic rank order.
Poset face_poset(const SimplicialComplex& c);

SimplicialComplex barycentric_subdivide(const SimplicialComplex& c);

// Subdivides and transports a simplicial involution to the subdivision.
std::pair<SimplicialComplex, VertexPerm> barycentric_subdivide_with_involution(
    const SimplicialComplex& c, const VertexPerm& t);

// Pairs (a,b) with a <= b, ordered by (p,q) <= (p',q') iff p <= p' and q >= q'.
Poset interval_poset(const Poset& p);

// Order isomorphism search with invariant pruning; witness maps p -> q.
std::optional<std::vector<std::int32_t>> poset_isomorphic(const Poset& p, const Poset& q,
                                                          std::size_t guard_elements = 2000);

enum class QuotientErrorKind { NotFree, NotSimplicial };

struct QuotientError : std::runtime_error {
    QuotientErrorKind kind;
    QuotientError(QuotientErrorKind k, const std::string& what)
        : std::runtime_error(what), kind(k) {}
};

struct Quotient {
    SimplicialComplex complex;
    std::vector<std::int32_t> projection;      // total vertex -> quotient vertex
    std::vector<std::int32_t> representative;  // quotient vertex -> total vertex
};

// Quotient by a free involution; projection must be 2-to-1 on simplices in
// every dimension, else QuotientError{NotSimplicial}.
Quotient quotient_by_involution(const SimplicialComplex& c, const VertexPerm& t);

}  // namespace homw1::posets
