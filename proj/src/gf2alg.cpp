#include "homw1/gf2alg.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "homw1/report.hpp"

namespace homw1::gf2alg {

void GF2Matrix::validate() const {
    if (col.size() != cols) throw InvalidInput("matrix column count mismatch");
    for (const auto& c : col)
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] < 0 || static_cast<std::size_t>(c[i]) >= rows)
                throw InvalidInput("matrix row index out of range");
            if (i + 1 < c.size() && c[i] >= c[i + 1])
                throw InvalidInput("matrix column not strictly increasing");
        }
}

GF2Matrix GF2Matrix::transposed() const {
    GF2Matrix t;
    t.rows = cols;
    t.cols = rows;
    t.col.resize(rows);
    for (std::size_t j = 0; j < cols; ++j)
        for (std::int32_t i : col[j]) t.col[i].push_back(static_cast<std::int32_t>(j));
    return t;
}

GF2Vector GF2Matrix::apply(const GF2Vector& x) const {
    GF2Vector y(rows);
    for (std::size_t j = 0; j < cols; ++j)
        if (x.get(j)) y.xor_indices(col[j]);
    return y;
}

// ---------------------------------------------------------------- solver

namespace {
// Packed pivot storage is preferred while it fits this many 64-bit words.
constexpr std::size_t kDenseBudgetWords = 48u << 20;  // 384 MB
}

GF2Solver::GF2Solver(const GF2Matrix& m, SolveMode mode) : rows_(m.rows) {
    std::size_t words_per_col = (rows_ + 63) / 64;
    std::size_t max_pivots = std::min(m.rows, m.cols);
    switch (mode) {
        case SolveMode::Dense: dense_ = true; break;
        case SolveMode::Sparse: dense_ = false; break;
        case SolveMode::Auto:
            dense_ = words_per_col * std::max<std::size_t>(max_pivots, 1) <= kDenseBudgetWords;
            break;
    }
    pivot_of_row_.assign(rows_, -1);
    for (std::size_t j = 0; j < m.cols; ++j) {
        GF2Vector acc(rows_);
        acc.xor_indices(m.col[j]);
        reduce(acc, true);
    }
}

void GF2Solver::reduce(GF2Vector& acc, bool record) {
    while (true) {
        auto low = acc.lowest_set();
        if (!low) return;
        std::int32_t slot = pivot_of_row_[*low];
        if (slot < 0) {
            if (record) {
                pivot_of_row_[*low] = static_cast<std::int32_t>(rank_);
                if (dense_)
                    dense_cols_.push_back(acc);
                else
                    sparse_cols_.push_back(acc.to_indices());
                ++rank_;
            }
            return;
        }
        if (dense_)
            acc.xor_with(dense_cols_[slot]);
        else
            acc.xor_indices(sparse_cols_[slot]);
    }
}

bool GF2Solver::in_column_space(const GF2Vector& v) const {
    GF2Vector acc = v;
    while (true) {
        auto low = acc.lowest_set();
        if (!low) return true;
        std::int32_t slot = pivot_of_row_[*low];
        if (slot < 0) return false;
        if (dense_)
            acc.xor_with(dense_cols_[slot]);
        else
            acc.xor_indices(sparse_cols_[slot]);
    }
}

std::size_t rank(const GF2Matrix& m, SolveMode mode) { return GF2Solver(m, mode).rank(); }

// ---------------------------------------------------------------- chain complex

GF2ChainComplex boundary_matrices(const posets::SimplicialComplex& c) {
    GF2ChainComplex cc;
    for (int d = 0; d <= c.dim(); ++d) cc.counts.push_back(c.tables[d].size());
    cc.boundary.resize(cc.counts.size());
    if (c.empty()) return cc;
    cc.boundary[0].rows = 0;
    cc.boundary[0].cols = cc.counts[0];
    cc.boundary[0].col.assign(cc.counts[0], {});
    std::vector<std::int32_t> face;
    for (int k = 1; k <= c.dim(); ++k) {
        GF2Matrix& b = cc.boundary[k];
        b.rows = cc.counts[k - 1];
        b.cols = cc.counts[k];
        b.col.resize(b.cols);
        for (std::size_t r = 0; r < c.tables[k].size(); ++r) {
            auto s = c.tables[k][r];
            auto& column = b.col[r];
            for (std::size_t drop = 0; drop <= static_cast<std::size_t>(k); ++drop) {
                face.clear();
                for (std::size_t i = 0; i <= static_cast<std::size_t>(k); ++i)
                    if (i != drop) face.push_back(s[i]);
                column.push_back(static_cast<std::int32_t>(*c.tables[k - 1].rank_of(face)));
            }
            std::sort(column.begin(), column.end());
        }
    }
    // dd = 0
    for (int k = 2; k <= c.dim(); ++k) {
        GF2Vector acc(cc.counts[k - 2]);
        for (std::size_t j = 0; j < cc.counts[k]; ++j) {
            acc = GF2Vector(cc.counts[k - 2]);
            for (std::int32_t f : cc.boundary[k].col[j]) acc.xor_indices(cc.boundary[k - 1].col[f]);
            if (!acc.is_zero()) throw InvalidInput("boundary of boundary is nonzero");
        }
    }
    return cc;
}

std::vector<long long> betti(const GF2ChainComplex& cc, SolveMode mode) {
    int dim = cc.dim();
    if (dim < 0) return {};
    std::vector<std::size_t> ranks(dim + 2, 0);  // ranks[k] = rank boundary[k]
    int cap = report::thread_limit();
    if (cap <= 1 || dim < 1) {
        for (int k = 1; k <= dim; ++k) ranks[k] = rank(cc.boundary[k], mode);
    } else {
        std::vector<std::future<std::size_t>> fut(dim + 1);
        std::vector<int> pending;
        for (int k = 1; k <= dim; ++k) pending.push_back(k);
        // waves of at most `cap` tasks
        for (std::size_t i = 0; i < pending.size(); i += cap) {
            std::size_t end = std::min(pending.size(), i + cap);
            for (std::size_t t = i; t < end; ++t) {
                int k = pending[t];
                fut[k] = std::async(std::launch::async,
                                    [&cc, k, mode] { return rank(cc.boundary[k], mode); });
            }
            for (std::size_t t = i; t < end; ++t) ranks[pending[t]] = fut[pending[t]].get();
        }
    }
    std::vector<long long> out(dim + 1);
    for (int k = 0; k <= dim; ++k)
        out[k] = static_cast<long long>(cc.counts[k]) - static_cast<long long>(ranks[k]) -
                 static_cast<long long>(ranks[k + 1]);
    return out;
}

bool is_cycle(const GF2ChainComplex& cc, int k, const GF2Vector& z) {
    if (k < 0 || k > cc.dim()) return z.is_zero();
    if (z.size() != cc.counts[k]) throw InvalidInput("cycle vector has wrong length");
    if (k == 0) return true;
    return cc.boundary[k].apply(z).is_zero();
}

bool is_boundary(const GF2ChainComplex& cc, int k, const GF2Vector& z) {
    if (!is_cycle(cc, k, z)) throw InvalidInput("is_boundary input is not a cycle");
    if (k >= cc.dim()) return z.is_zero();
    return GF2Solver(cc.boundary[k + 1]).in_column_space(z);
}

// ---------------------------------------------------------------- cochains

Cochain coboundary(const GF2ChainComplex& cc, const Cochain& a) {
    int k = a.dim;
    if (k >= cc.dim()) return Cochain{k + 1, GF2Vector(0)};
    const GF2Matrix& b = cc.boundary[k + 1];
    Cochain out{k + 1, GF2Vector(cc.counts[k + 1])};
    for (std::size_t j = 0; j < b.cols; ++j) {
        bool bit = false;
        for (std::int32_t f : b.col[j]) bit ^= a.bits.get(f);
        if (bit) out.bits.set(j);
    }
    return out;
}

bool is_cocycle(const GF2ChainComplex& cc, const Cochain& a) {
    return coboundary(cc, a).bits.is_zero();
}

bool is_coboundary(const GF2ChainComplex& cc, const Cochain& a) {
    if (a.dim > cc.dim()) return true;  // zero cochain group
    if (a.dim == 0) return a.bits.is_zero();
    return GF2Solver(cc.boundary[a.dim].transposed()).in_column_space(a.bits);
}

Cochain cup_product(const posets::SimplicialComplex& c, const Cochain& a, const Cochain& b,
                    std::span<const std::int32_t> vertex_rank) {
    int p = a.dim, q = b.dim, k = p + q;
    if (k > c.dim()) return Cochain{k, GF2Vector(0)};
    const auto& tab = c.tables[k];
    Cochain out{k, GF2Vector(tab.size())};
    std::vector<std::int32_t> ordered, front, back;
    for (std::size_t r = 0; r < tab.size(); ++r) {
        auto s = tab[r];
        ordered.assign(s.begin(), s.end());
        if (!vertex_rank.empty())
            std::sort(ordered.begin(), ordered.end(), [&](std::int32_t x, std::int32_t y) {
                return vertex_rank[x] < vertex_rank[y];
            });
        front.assign(ordered.begin(), ordered.begin() + p + 1);
        back.assign(ordered.begin() + p, ordered.end());
        std::sort(front.begin(), front.end());
        std::sort(back.begin(), back.end());
        auto fr = c.tables[p].rank_of(front);
        auto br = c.tables[q].rank_of(back);
        if (a.bits.get(*fr) && b.bits.get(*br)) out.bits.set(r);
    }
    return out;
}

GF2Vector pushforward_cycle(const posets::SimplicialComplex& x,
                            const posets::SimplicialComplex& y,
                            std::span<const std::int32_t> vertex_map, int k,
                            const GF2Vector& z) {
    if (vertex_map.size() != x.vertex_count())
        throw InvalidInput("vertex map size does not match source complex");
    // simpliciality: every simplex image (with collapses removed) lives in y
    std::vector<std::int32_t> img;
    for (int d = 0; d <= x.dim(); ++d)
        for (std::size_t r = 0; r < x.tables[d].size(); ++r) {
            auto s = x.tables[d][r];
            img.assign(s.begin(), s.end());
            for (auto& v : img) v = vertex_map[v];
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            int id = static_cast<int>(img.size()) - 1;
            if (id > y.dim() || !y.tables[id].rank_of(img)) {
                std::ostringstream os;
                os << "vertex map not simplicial on {";
                for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
                os << "}";
                throw InvalidInput(os.str());
            }
        }
    if (k < 0 || k > x.dim()) {
        if (!z.is_zero()) throw InvalidInput("cycle dimension out of range");
        return GF2Vector(k >= 0 && k <= y.dim() ? y.tables[k].size() : 0);
    }
    if (z.size() != x.tables[k].size()) throw InvalidInput("cycle vector has wrong length");
    GF2Vector out(k <= y.dim() ? y.tables[k].size() : 0);
    for (std::int32_t i : z.to_indices()) {
        auto s = x.tables[k][static_cast<std::size_t>(i)];
        img.assign(s.begin(), s.end());
        for (auto& v : img) v = vertex_map[v];
        std::sort(img.begin(), img.end());
        bool collapsed = false;
        for (std::size_t t = 0; t + 1 < img.size(); ++t)
            if (img[t] == img[t + 1]) collapsed = true;
        if (collapsed) continue;
        out.flip(*y.tables[k].rank_of(img));
    }
    return out;
}

std::string dump_matrix(const GF2Matrix& m) {
    std::ostringstream os;
    os << m.rows << " " << m.cols << "\n";
    for (const auto& c : m.col) {
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
        os << "\n";
    }
    return os.str();
}

}  // namespace homw1::gf2alg
