#include "homw1/posets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace homw1::posets {

namespace {

std::string simplex_str(std::span<const std::int32_t> v) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "}";
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- Poset

Poset Poset::from_strict_above(std::vector<std::vector<std::int32_t>> above,
                               std::vector<std::string> labels) {
    Poset p;
    int n = static_cast<int>(above.size());
    for (int a = 0; a < n; ++a) {
        auto& ua = above[a];
        std::sort(ua.begin(), ua.end());
        ua.erase(std::unique(ua.begin(), ua.end()), ua.end());
        for (std::int32_t b : ua) {
            if (b < 0 || b >= n) throw InvalidInput("poset relation index out of range");
            if (b == a) throw InvalidInput("poset relation is not irreflexive at " + std::to_string(a));
        }
    }
    p.above_ = std::move(above);
    p.labels_ = std::move(labels);
    // antisymmetry and transitivity
    for (int a = 0; a < n; ++a) {
        for (std::int32_t b : p.above_[a]) {
            if (std::binary_search(p.above_[b].begin(), p.above_[b].end(), a))
                throw InvalidInput("poset relation not antisymmetric at (" + std::to_string(a) +
                                   "," + std::to_string(b) + ")");
            if (!std::includes(p.above_[a].begin(), p.above_[a].end(), p.above_[b].begin(),
                               p.above_[b].end()))
                throw InvalidInput("poset relation not transitive at (" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
        }
    }
    return p;
}

bool Poset::less(int a, int b) const {
    return std::binary_search(above_[a].begin(), above_[a].end(), b);
}

std::vector<std::vector<std::int32_t>> Poset::cover_lists() const {
    int n = size();
    std::vector<std::vector<std::int32_t>> covers(n);
    std::vector<char> not_cover;
    for (int a = 0; a < n; ++a) {
        const auto& up = above_[a];
        not_cover.assign(up.size(), 0);
        for (std::size_t i = 0; i < up.size(); ++i) {
            const auto& upper = above_[up[i]];
            // everything above an element of up is not a cover of a
            std::size_t j = 0;
            for (std::int32_t c : upper) {
                while (j < up.size() && up[j] < c) ++j;
                if (j == up.size()) break;
                if (up[j] == c) not_cover[j] = 1;
            }
        }
        for (std::size_t i = 0; i < up.size(); ++i)
            if (!not_cover[i]) covers[a].push_back(up[i]);
    }
    return covers;
}

std::vector<std::int32_t> Poset::minimal_elements() const {
    int n = size();
    std::vector<char> has_below(n, 0);
    for (int a = 0; a < n; ++a)
        for (std::int32_t b : above_[a]) has_below[b] = 1;
    std::vector<std::int32_t> out;
    for (int a = 0; a < n; ++a)
        if (!has_below[a]) out.push_back(a);
    return out;
}

std::vector<std::int32_t> Poset::maximal_elements() const {
    std::vector<std::int32_t> out;
    for (int a = 0; a < size(); ++a)
        if (above_[a].empty()) out.push_back(a);
    return out;
}

// ---------------------------------------------------------------- SimplexTable

SimplexTable::SimplexTable(int dim, std::vector<std::int32_t> flat) : dim_(dim) {
    std::size_t w = static_cast<std::size_t>(dim + 1);
    if (flat.size() % w != 0) throw InvalidInput("simplex table size mismatch");
    count_ = flat.size() / w;
    flat_ = std::move(flat);
}

std::optional<std::size_t> SimplexTable::rank_of(std::span<const std::int32_t> verts) const {
    if (verts.size() != static_cast<std::size_t>(dim_ + 1)) return std::nullopt;
    std::size_t lo = 0, hi = count_;
    std::size_t w = verts.size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        const std::int32_t* row = flat_.data() + mid * w;
        int cmp = 0;
        for (std::size_t i = 0; i < w; ++i) {
            if (row[i] != verts[i]) {
                cmp = row[i] < verts[i] ? -1 : 1;
                break;
            }
        }
        if (cmp < 0)
            lo = mid + 1;
        else if (cmp > 0)
            hi = mid;
        else
            return mid;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------- SimplicialComplex

std::size_t SimplicialComplex::total_simplices() const {
    std::size_t s = 0;
    for (const auto& t : tables) s += t.size();
    return s;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dim(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(tables[d].size());
    return chi;
}

void SimplicialComplex::validate() const {
    if (tables.empty()) {
        if (!labels.empty()) throw InvalidInput("empty complex with labels");
        return;
    }
    std::size_t v = tables[0].size();
    if (!labels.empty() && labels.size() != v)
        throw InvalidInput("label count does not match vertex count");
    for (std::size_t i = 0; i < v; ++i)
        if (tables[0][i][0] != static_cast<std::int32_t>(i))
            throw InvalidInput("vertex table must list 0..V-1 exactly");
    for (int d = 0; d <= dim(); ++d) {
        const auto& tab = tables[d];
        if (d > 0 && tab.size() == 0) throw InvalidInput("empty simplex dimension " + std::to_string(d));
        std::vector<std::int32_t> prev;
        for (std::size_t r = 0; r < tab.size(); ++r) {
            auto s = tab[r];
            for (std::size_t i = 0; i + 1 < s.size(); ++i)
                if (s[i] >= s[i + 1])
                    throw InvalidInput("simplex not strictly increasing: " + simplex_str(s));
            if (s.front() < 0 || static_cast<std::size_t>(s.back()) >= v)
                throw InvalidInput("simplex vertex out of range: " + simplex_str(s));
            std::vector<std::int32_t> cur(s.begin(), s.end());
            if (!prev.empty() && !(prev < cur))
                throw InvalidInput("simplex table not sorted/unique at dim " + std::to_string(d));
            prev = std::move(cur);
            if (d > 0) {
                std::vector<std::int32_t> face(s.size() - 1);
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    std::size_t k = 0;
                    for (std::size_t i = 0; i < s.size(); ++i)
                        if (i != drop) face[k++] = s[i];
                    if (!tables[d - 1].rank_of(face))
                        throw InvalidInput("missing face " + simplex_str(face) + " of " +
                                           simplex_str(s));
                }
            }
        }
    }
}

SimplicialComplex make_complex(std::vector<std::vector<std::vector<std::int32_t>>> by_dim,
                               std::vector<std::string> labels) {
    while (!by_dim.empty() && by_dim.back().empty()) by_dim.pop_back();
    SimplicialComplex c;
    c.labels = std::move(labels);
    for (int d = 0; d < static_cast<int>(by_dim.size()); ++d) {
        auto& rows = by_dim[d];
        for (auto& r : rows) std::sort(r.begin(), r.end());
        std::sort(rows.begin(), rows.end());
        rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
        std::vector<std::int32_t> flat;
        flat.reserve(rows.size() * (d + 1));
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != d + 1)
                throw InvalidInput("simplex of wrong dimension in build");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        c.tables.emplace_back(d, std::move(flat));
    }
    c.validate();
    return c;
}

void check_involution(const SimplicialComplex& c, const VertexPerm& t) {
    std::size_t v = c.vertex_count();
    if (t.size() != v) throw InvalidInput("involution size does not match vertex count");
    for (std::size_t i = 0; i < v; ++i) {
        if (t[i] < 0 || static_cast<std::size_t>(t[i]) >= v)
            throw InvalidInput("involution image out of range at " + std::to_string(i));
        if (static_cast<std::size_t>(t[t[i]]) != i)
            throw InvalidInput("vertex map is not self-inverse at " + std::to_string(i));
    }
    for (int d = 1; d <= c.dim(); ++d)
        for (std::size_t r = 0; r < c.tables[d].size(); ++r)
            if (!map_simplex(c.tables[d], t, c.tables[d][r]))
                throw InvalidInput("vertex map is not simplicial on " +
                                   simplex_str(c.tables[d][r]));
}

std::optional<std::size_t> map_simplex(const SimplexTable& table, const VertexPerm& t,
                                       std::span<const std::int32_t> verts) {
    std::vector<std::int32_t> img(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) img[i] = t[verts[i]];
    std::sort(img.begin(), img.end());
    for (std::size_t i = 0; i + 1 < img.size(); ++i)
        if (img[i] == img[i + 1]) return std::nullopt;
    return table.rank_of(img);
}

// ---------------------------------------------------------------- order complex

SimplicialComplex order_complex(const Poset& p, int max_dim, std::size_t guard_simplices) {
    int n = p.size();
    std::vector<std::vector<std::int32_t>> flat_by_dim;  // unsorted rows, flat
    std::size_t emitted = 0;
    std::vector<std::int32_t> chain;
    auto emit = [&](std::span<const std::int32_t> ch) {
        int d = static_cast<int>(ch.size()) - 1;
        if (d >= static_cast<int>(flat_by_dim.size())) flat_by_dim.resize(d + 1);
        std::vector<std::int32_t> sorted(ch.begin(), ch.end());
        std::sort(sorted.begin(), sorted.end());
        flat_by_dim[d].insert(flat_by_dim[d].end(), sorted.begin(), sorted.end());
        if (guard_simplices && ++emitted > guard_simplices)
            throw GuardExceeded("order_complex guard: more than " +
                                std::to_string(guard_simplices) + " simplices");
    };
    std::function<void(int)> extend = [&](int last) {
        if (max_dim >= 0 && static_cast<int>(chain.size()) == max_dim + 1) return;
        for (std::int32_t f : p.above(last)) {
            chain.push_back(f);
            emit(chain);
            extend(f);
            chain.pop_back();
        }
    };
    for (int s = 0; s < n; ++s) {
        chain.assign(1, s);
        emit(chain);
        extend(s);
    }
    // sort each dimension's rows lexicographically
    SimplicialComplex c;
    c.labels = p.labels();
    for (int d = 0; d < static_cast<int>(flat_by_dim.size()); ++d) {
        auto& flat = flat_by_dim[d];
        std::size_t w = static_cast<std::size_t>(d + 1);
        std::size_t count = flat.size() / w;
        std::vector<std::size_t> idx(count);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return std::lexicographical_compare(flat.begin() + a * w, flat.begin() + (a + 1) * w,
                                                flat.begin() + b * w, flat.begin() + (b + 1) * w);
        });
        std::vector<std::int32_t> sorted;
        sorted.reserve(flat.size());
        for (std::size_t r : idx)
            sorted.insert(sorted.end(), flat.begin() + r * w, flat.begin() + (r + 1) * w);
        flat = std::vector<std::int32_t>();  // release early
        c.tables.emplace_back(d, std::move(sorted));
    }
    return c;
}

// ---------------------------------------------------------------- face poset

Poset face_poset(const SimplicialComplex& c) {
    std::vector<std::size_t> offset(c.dim() + 1, 0);
    std::size_t total = 0;
    for (int d = 0; d <= c.dim(); ++d) {
        offset[d] = total;
        total += c.tables[d].size();
    }
    std::vector<std::vector<std::int32_t>> above(total);
    std::vector<std::string> labels(total);
    std::vector<std::int32_t> face;
    for (int d = 0; d <= c.dim(); ++d) {
        for (std::size_t r = 0; r < c.tables[d].size(); ++r) {
            auto s = c.tables[d][r];
            std::size_t id = offset[d] + r;
            labels[id] = simplex_str(s);
            // register this simplex above each nonempty proper subset
            for (std::uint32_t mask = 1; mask + 1 < (1u << (d + 1)); ++mask) {
                face.clear();
                for (int i = 0; i <= d; ++i)
                    if (mask & (1u << i)) face.push_back(s[i]);
                int fd = static_cast<int>(face.size()) - 1;
                auto fr = c.tables[fd].rank_of(face);
                above[offset[fd] + *fr].push_back(static_cast<std::int32_t>(id));
            }
        }
    }
    return Poset::from_strict_above(std::move(above), std::move(labels));
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& c) {
    if (c.empty()) return {};
    return order_complex(face_poset(c));
}

std::pair<SimplicialComplex, VertexPerm> barycentric_subdivide_with_involution(
    const SimplicialComplex& c, const VertexPerm& t) {
    check_involution(c, t);
    if (c.empty()) return {{}, {}};
    SimplicialComplex sub = order_complex(face_poset(c));
    std::vector<std::size_t> offset(c.dim() + 1, 0);
    std::size_t total = 0;
    for (int d = 0; d <= c.dim(); ++d) {
        offset[d] = total;
        total += c.tables[d].size();
    }
    VertexPerm perm(total);
    for (int d = 0; d <= c.dim(); ++d)
        for (std::size_t r = 0; r < c.tables[d].size(); ++r) {
            auto img = map_simplex(c.tables[d], t, c.tables[d][r]);
            perm[offset[d] + r] = static_cast<std::int32_t>(offset[d] + *img);
        }
    return {std::move(sub), std::move(perm)};
}

// ---------------------------------------------------------------- interval poset

Poset interval_poset(const Poset& p) {
    int n = p.size();
    std::vector<std::pair<int, int>> elems;  // (a, b) with a <= b
    for (int a = 0; a < n; ++a) {
        elems.emplace_back(a, a);
        for (std::int32_t b : p.above(a)) elems.emplace_back(a, b);
    }
    std::size_t m = elems.size();
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i)
        labels[i] = "(" + std::to_string(elems[i].first) + "," + std::to_string(elems[i].second) + ")";
    std::vector<std::vector<std::int32_t>> above(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            // (p,q) <= (p',q')  iff  p <= p' and q >= q'
            if (p.leq(elems[i].first, elems[j].first) && p.leq(elems[j].second, elems[i].second))
                above[i].push_back(static_cast<std::int32_t>(j));
        }
    return Poset::from_strict_above(std::move(above), std::move(labels));
}

// ---------------------------------------------------------------- isomorphism

namespace {

struct IsoSignature {
    int up = 0, down = 0, height_up = 0, height_down = 0;
    auto operator<=>(const IsoSignature&) const = default;
};

std::vector<IsoSignature> poset_signatures(const Poset& p) {
    int n = p.size();
    std::vector<IsoSignature> sig(n);
    std::vector<int> below_count(n, 0);
    for (int a = 0; a < n; ++a) {
        sig[a].up = static_cast<int>(p.above(a).size());
        for (std::int32_t b : p.above(a)) ++below_count[b];
    }
    for (int a = 0; a < n; ++a) sig[a].down = below_count[a];
    std::vector<int> hu(n, -1);
    std::function<int(int)> height_up = [&](int a) {
        if (hu[a] >= 0) return hu[a];
        int best = 0;
        for (std::int32_t b : p.above(a)) best = std::max(best, 1 + height_up(b));
        return hu[a] = best;
    };
    for (int a = 0; a < n; ++a) sig[a].height_up = height_up(a);
    // height_down via the dual relation
    std::vector<std::vector<std::int32_t>> below(n);
    for (int a = 0; a < n; ++a)
        for (std::int32_t b : p.above(a)) below[b].push_back(a);
    std::vector<int> hd(n, -1);
    std::function<int(int)> height_down = [&](int a) {
        if (hd[a] >= 0) return hd[a];
        int best = 0;
        for (std::int32_t b : below[a]) best = std::max(best, 1 + height_down(b));
        return hd[a] = best;
    };
    for (int a = 0; a < n; ++a) sig[a].height_down = height_down(a);
    return sig;
}

}  // namespace

std::optional<std::vector<std::int32_t>> poset_isomorphic(const Poset& p, const Poset& q,
                                                          std::size_t guard_elements) {
    if (p.size() != q.size()) return std::nullopt;
    std::size_t n = static_cast<std::size_t>(p.size());
    if (n > guard_elements)
        throw GuardExceeded("poset_isomorphic guard: " + std::to_string(n) + " elements > " +
                            std::to_string(guard_elements));
    if (n == 0) return std::vector<std::int32_t>{};
    auto sp = poset_signatures(p);
    auto sq = poset_signatures(q);
    std::map<IsoSignature, std::vector<std::int32_t>> classes_q;
    for (std::size_t b = 0; b < n; ++b) classes_q[sq[b]].push_back(static_cast<std::int32_t>(b));
    {
        std::map<IsoSignature, std::size_t> count_p;
        for (std::size_t a = 0; a < n; ++a) ++count_p[sp[a]];
        for (auto& [k, v] : count_p) {
            auto it = classes_q.find(k);
            if (it == classes_q.end() || it->second.size() != v) return std::nullopt;
        }
        if (count_p.size() != classes_q.size()) return std::nullopt;
    }
    // assign most-constrained classes first
    std::vector<std::int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        std::size_t ca = classes_q[sp[a]].size(), cb = classes_q[sp[b]].size();
        if (ca != cb) return ca < cb;
        return a < b;
    });
    std::vector<std::int32_t> map_pq(n, -1);
    std::vector<char> used(n, 0);
    std::size_t budget = 10'000'000;
    std::function<bool(std::size_t)> assign = [&](std::size_t pos) -> bool {
        if (pos == n) return true;
        std::int32_t a = order[pos];
        for (std::int32_t b : classes_q[sp[a]]) {
            if (used[b]) continue;
            if (budget-- == 0)
                throw GuardExceeded("poset_isomorphic search budget exceeded");
            bool ok = true;
            for (std::size_t prev = 0; prev < pos && ok; ++prev) {
                std::int32_t x = order[prev], y = map_pq[x];
                ok = (p.less(a, x) == q.less(b, y)) && (p.less(x, a) == q.less(y, b));
            }
            if (!ok) continue;
            map_pq[a] = b;
            used[b] = 1;
            if (assign(pos + 1)) return true;
            used[b] = 0;
            map_pq[a] = -1;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return map_pq;
}

// ---------------------------------------------------------------- quotient

Quotient quotient_by_involution(const SimplicialComplex& c, const VertexPerm& t) {
    check_involution(c, t);
    Quotient out;
    std::size_t v = c.vertex_count();
    for (std::size_t i = 0; i < v; ++i)
        if (static_cast<std::size_t>(t[i]) == i)
            throw QuotientError(QuotientErrorKind::NotFree,
                                "involution not free: fixed vertex " + std::to_string(i));
    if (c.empty()) return out;
    // orbit representatives in increasing vertex order
    out.projection.assign(v, -1);
    for (std::size_t i = 0; i < v; ++i) {
        if (static_cast<std::size_t>(t[i]) > i) {
            out.projection[i] = static_cast<std::int32_t>(out.representative.size());
            out.projection[t[i]] = out.projection[i];
            out.representative.push_back(static_cast<std::int32_t>(i));
        }
    }
    std::vector<std::string> qlabels;
    if (!c.labels.empty())
        for (std::int32_t rep : out.representative) qlabels.push_back(c.labels[rep]);
    // project simplices; every fiber must have exactly two preimages
    std::vector<std::vector<std::vector<std::int32_t>>> by_dim(c.dim() + 1);
    for (int d = 0; d <= c.dim(); ++d) {
        const auto& tab = c.tables[d];
        std::vector<std::vector<std::int32_t>> images;
        images.reserve(tab.size());
        for (std::size_t r = 0; r < tab.size(); ++r) {
            auto s = tab[r];
            std::vector<std::int32_t> img(s.size());
            for (std::size_t i = 0; i < s.size(); ++i) img[i] = out.projection[s[i]];
            std::sort(img.begin(), img.end());
            for (std::size_t i = 0; i + 1 < img.size(); ++i)
                if (img[i] == img[i + 1])
                    throw QuotientError(QuotientErrorKind::NotSimplicial,
                                        "quotient not simplicial; subdivide first: simplex " +
                                            simplex_str(s) + " contains an orbit pair");
            images.push_back(std::move(img));
        }
        std::sort(images.begin(), images.end());
        for (std::size_t i = 0; i < images.size();) {
            std::size_t j = i;
            while (j < images.size() && images[j] == images[i]) ++j;
            if (j - i != 2)
                throw QuotientError(QuotientErrorKind::NotSimplicial,
                                    "quotient not simplicial; subdivide first: " +
                                        std::to_string(j - i) + " simplices over image " +
                                        simplex_str(images[i]));
            by_dim[d].push_back(images[i]);
            i = j;
        }
    }
    out.complex = make_complex(std::move(by_dim), std::move(qlabels));
    return out;
}

}  // namespace homw1::posets
