#include "homw1/homcomplex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

namespace homw1::homcomplex {

std::string Multihom::str() const {
    // arrays of sorted color subsets, e.g. [[0],[1,2],[3]]
    std::ostringstream os;
    os << "[";
    for (std::size_t v = 0; v < sets.size(); ++v) {
        if (v) os << ",";
        os << "[";
        bool first = true;
        for (int c = 0; c < 32; ++c)
            if (sets[v] & (1u << c)) {
                if (!first) os << ",";
                os << c;
                first = false;
            }
        os << "]";
    }
    os << "]";
    return os.str();
}

int HomPoset::index_of(const Multihom& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m,
                               [](const Multihom& a, const Multihom& b) { return a.sets < b.sets; });
    if (it == elements.end() || !(*it == m)) return -1;
    return static_cast<int>(it - elements.begin());
}

namespace {

// adjacency masks of h: adj[b] = colors adjacent to b
std::vector<std::uint32_t> color_adjacency(const graphs::Graph& h) {
    std::vector<std::uint32_t> adj(h.vertex_count, 0);
    for (auto [u, v] : h.edges) {
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
    }
    return adj;
}

// colors compatible with every color of `mask` across an edge
std::uint32_t allowed_against(const std::vector<std::uint32_t>& adj, std::uint32_t mask,
                              std::uint32_t full) {
    std::uint32_t allowed = full;
    while (mask) {
        int b = std::countr_zero(mask);
        mask &= mask - 1;
        allowed &= adj[b];
    }
    return allowed;
}

}  // namespace

HomPoset hom_poset(const graphs::Graph& g, const graphs::Graph& h, std::size_t guard_elements) {
    if (h.vertex_count > 30) throw InvalidInput("target graph too large for mask sets (>30)");
    HomPoset hp;
    hp.g = g;
    hp.h = h;
    const std::uint32_t full = h.vertex_count ? (1u << h.vertex_count) - 1 : 0;
    auto adj = color_adjacency(h);
    auto gadj = g.adjacency_lists();
    std::vector<std::uint32_t> cur(g.vertex_count, 0);

    std::function<void(int)> enumerate = [&](int v) {
        if (v == g.vertex_count) {
            hp.elements.push_back(Multihom{cur});
            if (hp.elements.size() > guard_elements)
                throw GuardExceeded("hom_poset guard: more than " +
                                    std::to_string(guard_elements) + " elements");
            return;
        }
        std::uint32_t allowed = full;
        for (int u : gadj[v])
            if (u < v) allowed &= allowed_against(adj, cur[u], full);
        // nonempty submasks of `allowed` in increasing numeric order
        for (std::uint32_t s = allowed & (~allowed + 1); s;
             s = (s - allowed) & allowed) {
            cur[v] = s;
            enumerate(v + 1);
            if (s == allowed) break;
        }
        cur[v] = 0;
    };
    if (g.vertex_count == 0) {
        hp.elements.push_back(Multihom{cur});  // the empty assignment
    } else if (full) {
        enumerate(0);
    }
    // componentwise-inclusion order; index order refines it since a submask is
    // numerically smaller, so above-lists are generated by superset extension
    std::vector<std::vector<std::int32_t>> above(hp.elements.size());
    std::vector<std::string> labels(hp.elements.size());
    std::vector<std::uint32_t> sup(g.vertex_count, 0);
    for (std::size_t e = 0; e < hp.elements.size(); ++e) {
        labels[e] = hp.elements[e].str();
        const auto& base = hp.elements[e].sets;
        std::function<void(int)> extend = [&](int v) {
            if (v == g.vertex_count) {
                Multihom m{sup};
                if (!(m.sets == base)) {
                    int idx = hp.index_of(m);
                    above[e].push_back(idx);
                }
                return;
            }
            std::uint32_t allowed = full;
            for (int u : gadj[v])
                if (u < v) allowed &= allowed_against(adj, sup[u], full);
            std::uint32_t free = allowed & ~base[v];
            if ((base[v] & allowed) != base[v]) return;  // base incompatible upward
            for (std::uint32_t s = 0;;) {
                sup[v] = base[v] | s;
                extend(v + 1);
                if (s == free) break;
                s = (s - free) & free;
            }
            sup[v] = 0;
        };
        if (g.vertex_count > 0) extend(0);
    }
    hp.poset = posets::Poset::from_strict_above(std::move(above), std::move(labels));
    return hp;
}

std::vector<std::int32_t> induced_involution(const HomPoset& hp,
                                             const graphs::GraphAutomorphism& a) {
    if (!graphs::is_automorphism(hp.g, a))
        throw InvalidInput("vertex map is not an automorphism of the source graph");
    for (std::size_t i = 0; i < a.perm.size(); ++i)
        if (a.perm[a.perm[i]] != static_cast<int>(i))
            throw InvalidInput("automorphism is not involutive");
    std::vector<std::int32_t> perm(hp.size());
    Multihom img;
    img.sets.resize(hp.g.vertex_count);
    for (std::size_t e = 0; e < hp.size(); ++e) {
        for (int v = 0; v < hp.g.vertex_count; ++v) img.sets[v] = hp.elements[e].sets[a.perm[v]];
        int idx = hp.index_of(img);
        if (idx < 0) throw InvalidInput("induced image leaves the poset");  // cannot happen
        perm[e] = idx;
    }
    for (std::size_t e = 0; e < hp.size(); ++e)
        if (perm[perm[e]] != static_cast<std::int32_t>(e))
            throw InvalidInput("induced involution is not self-inverse");
    return perm;
}

FreenessReport check_freeness(const HomPoset& hp, const std::vector<std::int32_t>& invol) {
    FreenessReport rep;
    for (std::size_t e = 0; e < hp.size(); ++e) {
        if (invol[e] == static_cast<std::int32_t>(e)) {
            rep.fixed_element = true;
            rep.witness = static_cast<int>(e);
            return rep;
        }
        if (hp.poset.comparable(static_cast<int>(e), invol[e])) {
            rep.comparable_pair = true;
            rep.witness = static_cast<int>(e);
            return rep;
        }
    }
    rep.free = true;
    return rep;
}

// ---------------------------------------------------------------- f lemmas

FLemmaReport verify_f_lemmas(int r, int n, std::size_t guard_elements) {
    if (r < 1 || n < 0) throw InvalidInput("verify_f_lemmas needs r >= 1, n >= 0");
    HomPoset hp = hom_poset(graphs::make_cycle(2 * r + 1), graphs::make_complete(n + 2),
                            guard_elements);
    FLemmaReport rep;
    rep.elements = hp.size();
    const int last = 2 * r;  // index of v_2r
    const std::uint32_t full = (1u << (n + 2)) - 1;
    auto covers = hp.poset.cover_lists();
    auto minimal = hp.poset.minimal_elements();
    std::vector<std::int32_t> chain;

    auto check_chain = [&](const std::vector<std::int32_t>& ch) -> bool {
        ++rep.chains_checked;
        // (a) value families at v_i and v_{i+1} are disjoint, 0 < i < 2r-1
        for (int i = 1; i + 1 < last; ++i) {
            for (std::int32_t x : ch)
                for (std::int32_t y : ch)
                    if (hp.elements[x].sets[i] == hp.elements[y].sets[i + 1]) {
                        std::ostringstream os;
                        os << "carrier collision at i=" << i << " on chain top "
                           << hp.elements[ch.back()].str();
                        rep.failure = os.str();
                        return false;
                    }
        }
        // (b) family at v_1 differs from {phi(v_0)} u {complement phi(v_2r)}
        std::vector<std::uint32_t> f1, f0;
        for (std::int32_t x : ch) f1.push_back(hp.elements[x].sets[1]);
        for (std::int32_t x : ch) f0.push_back(hp.elements[x].sets[0]);
        for (std::int32_t x : ch) f0.push_back(full & ~hp.elements[x].sets[last]);
        auto dedupe = [](std::vector<std::uint32_t>& v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        };
        dedupe(f1);
        dedupe(f0);
        if (f1 == f0) {
            rep.failure = "edge-map carrier equals vertex-map carrier on chain top " +
                          hp.elements[ch.back()].str();
            return false;
        }
        return true;
    };

    std::function<bool(std::int32_t)> walk = [&](std::int32_t e) -> bool {
        chain.push_back(e);
        bool ok = true;
        if (covers[e].empty()) {
            ok = check_chain(chain);
        } else {
            for (std::int32_t f : covers[e])
                if (!(ok = walk(f))) break;
        }
        chain.pop_back();
        return ok;
    };

    rep.pass = true;
    for (std::int32_t s : minimal)
        if (!walk(s)) {
            rep.pass = false;
            break;
        }
    return rep;
}

// ---------------------------------------------------------------- sphere model

std::vector<Rational> sphere_point(std::uint32_t mask, int colors) {
    int size = std::popcount(mask);
    if (size == 0 || size == colors) throw InvalidInput("sphere_point needs a proper nonempty set");
    std::vector<Rational> w(colors);
    for (int c = 0; c < colors; ++c) {
        Rational chi = (mask >> c) & 1 ? 1 : 0;
        w[c] = chi - Rational(size, colors);
    }
    return w;
}

std::vector<std::vector<Rational>> f_vertex_map(const Multihom& phi, int colors) {
    int s = static_cast<int>(phi.sets.size());
    if (s < 3 || s % 2 == 0) throw InvalidInput("f_vertex_map needs an odd cycle multihom");
    int two_r = s - 1;
    const std::uint32_t full = (1u << colors) - 1;
    std::vector<std::vector<Rational>> f(two_r);
    // coordinate 0: midpoint of phi(v_0) and complement of phi(v_2r)
    auto w_first = sphere_point(phi.sets[0], colors);
    auto w_last = sphere_point(full & ~phi.sets[two_r], colors);
    f[0].resize(colors);
    for (int c = 0; c < colors; ++c)
        f[0][c] = (w_first[c] + w_last[c]) * Rational(1, 2);
    for (int i = 1; i < two_r; ++i) f[i] = sphere_point(phi.sets[i], colors);
    return f;
}

namespace {

bool proportional_with_sign(const std::vector<Rational>& a, const std::vector<Rational>& b,
                            bool positive) {
    // a = lambda b with lambda > 0 (or < 0): cross products equal, sign matches
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] == a[j] * b[i])) return false;
    // proportional; determine the sign on a nonzero coordinate
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i].num == 0) {
            if (a[i].num != 0) return false;  // not proportional at all
            continue;
        }
        if (a[i].num == 0) return false;
        bool same_sign = (a[i].num > 0) == (b[i].num > 0);
        return positive ? same_sign : !same_sign;
    }
    return false;  // b is zero
}

}  // namespace

bool positively_proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return proportional_with_sign(a, b, true);
}

bool antipodally_proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return proportional_with_sign(a, b, false);
}

EquivarianceReport verify_f_equivariance(int r, int n, std::size_t guard_elements) {
    HomPoset hp = hom_poset(graphs::make_cycle(2 * r + 1), graphs::make_complete(n + 2),
                            guard_elements);
    auto flip = graphs::flip_automorphism(hp.g);
    auto tau = induced_involution(hp, flip);
    const int colors = n + 2;
    const int two_r = 2 * r;
    EquivarianceReport rep;
    auto fail = [&](std::size_t e, const std::string& what) {
        rep.failure = "element " + hp.elements[e].str() + ": " + what;
        return rep;
    };
    for (std::size_t e = 0; e < hp.size(); ++e) {
        auto f = f_vertex_map(hp.elements[e], colors);
        auto ft = f_vertex_map(hp.elements[tau[e]], colors);
        // coordinate 0 negates, coordinate i matches coordinate 2r-i
        for (int c = 0; c < colors; ++c)
            if (!(ft[0][c] == -f[0][c])) return fail(e, "coordinate 0 does not negate");
        for (int i = 1; i < two_r; ++i)
            if (!(ft[i] == f[two_r - i])) return fail(e, "coordinate permutation mismatch");
        // nonzero coordinates
        for (int i = 0; i < two_r; ++i) {
            bool zero = true;
            for (const auto& x : f[i]) zero = zero && x.num == 0;
            if (zero) return fail(e, "zero coordinate " + std::to_string(i));
        }
        // forbidden set: x_i = x_{i+1} for i < 2r-1, x_{2r-1} = -x_0
        for (int i = 0; i + 1 < two_r; ++i)
            if (positively_proportional(f[i], f[i + 1]))
                return fail(e, "consecutive coordinates coincide at " + std::to_string(i));
        if (antipodally_proportional(f[two_r - 1], f[0]))
            return fail(e, "last coordinate antipodal to coordinate 0");
        ++rep.elements_checked;
    }
    rep.pass = true;
    return rep;
}

posets::SimplicialComplex hom_order_complex(const HomPoset& hp, int max_dim,
                                            std::size_t guard_simplices) {
    return posets::order_complex(hp.poset, max_dim, guard_simplices);
}

}  // namespace homw1::homcomplex
