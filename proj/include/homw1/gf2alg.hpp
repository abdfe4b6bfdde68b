#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "homw1/bitvec.hpp"
#include "homw1/errors.hpp"
#include "homw1/posets.hpp"

namespace homw1::gf2alg {

// Sparse GF(2) matrix, column major: sorted set-bit row indices per column.
struct GF2Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<std::int32_t>> col;

    void validate() const;
    GF2Matrix transposed() const;
    GF2Vector apply(const GF2Vector& x) const;  // y = M x
};

enum class SolveMode { Auto, Dense, Sparse };

// Pivot basis of the column space.  Deterministic: columns are processed in
// index order, pivots sit at the lowest set row of the reduced column.
// Dense mode keeps pivot columns as packed words, sparse mode as index lists;
// Auto picks dense when the packed pivot storage fits a fixed budget.
class GF2Solver {
public:
    explicit GF2Solver(const GF2Matrix& m, SolveMode mode = SolveMode::Auto);

    std::size_t rank() const { return rank_; }
    bool in_column_space(const GF2Vector& v) const;
    bool dense_path() const { return dense_; }

private:
    std::size_t rows_ = 0;
    std::size_t rank_ = 0;
    bool dense_ = false;
    std::vector<std::int32_t> pivot_of_row_;        // row -> pivot slot, -1 if none
    std::vector<GF2Vector> dense_cols_;
    std::vector<std::vector<std::int32_t>> sparse_cols_;

    void reduce(GF2Vector& acc, bool record);
};

std::size_t rank(const GF2Matrix& m, SolveMode mode = SolveMode::Auto);

struct GF2ChainComplex {
    std::vector<std::size_t> counts;   // simplices per dimension
    std::vector<GF2Matrix> boundary;   // boundary[k]: C_k -> C_{k-1}; boundary[0] has 0 rows
    int dim() const { return static_cast<int>(counts.size()) - 1; }
};

// Boundary of a k-simplex = sum of its (k-1)-faces.  Validates dd = 0.
GF2ChainComplex boundary_matrices(const posets::SimplicialComplex& c);

std::vector<long long> betti(const GF2ChainComplex& cc, SolveMode mode = SolveMode::Auto);

bool is_cycle(const GF2ChainComplex& cc, int k, const GF2Vector& z);
// Pre: z is a k-cycle (checked).  True iff z is in the image of boundary[k+1].
bool is_boundary(const GF2ChainComplex& cc, int k, const GF2Vector& z);

struct Cochain {
    int dim = 0;
    GF2Vector bits;
};

// delta(alpha)(sigma) = alpha(boundary sigma); the transpose of the boundary.
Cochain coboundary(const GF2ChainComplex& cc, const Cochain& a);
bool is_cocycle(const GF2ChainComplex& cc, const Cochain& a);
// True iff a is in the image of delta from dimension a.dim - 1.
bool is_coboundary(const GF2ChainComplex& cc, const Cochain& a);

// Front-face/back-face cup product with respect to a vertex order.
// vertex_rank[v] = position of v in the order; empty span = index order.
Cochain cup_product(const posets::SimplicialComplex& c, const Cochain& a, const Cochain& b,
                    std::span<const std::int32_t> vertex_rank = {});

// Chain-map pushforward along a simplicial vertex map X -> Y.  Simplices with
// collapsed vertices map to zero.  Throws InvalidInput with a witness simplex
// when the map is not simplicial.
GF2Vector pushforward_cycle(const posets::SimplicialComplex& x,
                            const posets::SimplicialComplex& y,
                            std::span<const std::int32_t> vertex_map, int k,
                            const GF2Vector& z);

// Debug dump: "rows cols" header plus one line of sorted set rows per column.
std::string dump_matrix(const GF2Matrix& m);

}  // namespace homw1::gf2alg
