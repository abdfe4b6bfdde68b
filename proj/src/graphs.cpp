#include "homw1/graphs.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace homw1::graphs {

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
    std::vector<std::vector<int>> adj(vertex_count);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool Graph::is_bipartite() const {
    std::vector<int> side(vertex_count, -1);
    auto adj = adjacency_lists();
    for (int s = 0; s < vertex_count; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    q.push(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

Graph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0) throw InvalidInput("vertex_count < 0: " + std::to_string(vertex_count));
    for (auto& [u, v] : edges) {
        if (u == v) throw InvalidInput("loop edge at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= vertex_count)
            throw InvalidInput("edge endpoint out of range: {" + std::to_string(u) + "," +
                               std::to_string(v) + "}");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph{vertex_count, std::move(edges)};
}

Graph make_complete(int m) {
    if (m < 1) throw InvalidInput("complete(m) needs m >= 1, got " + std::to_string(m));
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) e.emplace_back(u, v);
    return make_graph(m, std::move(e));
}

Graph make_cycle(int s) {
    if (s < 3) throw InvalidInput("cycle(s) needs s >= 3, got " + std::to_string(s));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < s; ++i) e.emplace_back(i, (i + 1) % s);
    return make_graph(s, std::move(e));
}

Graph make_path(int s) {
    if (s < 1) throw InvalidInput("path(s) needs s >= 1, got " + std::to_string(s));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < s; ++i) e.emplace_back(i, i + 1);
    return make_graph(s, std::move(e));
}

Graph make_kneser(int n, int k) {
    if (k < 1 || n < 2 * k)
        throw InvalidInput("kneser(n,k) needs n >= 2k >= 2, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
    // vertices = k-subsets of [n] in lexicographic order of their sorted lists
    std::vector<std::uint64_t> subsets;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::uint64_t m = 0;
        for (int x : pick) m |= std::uint64_t(1) << x;
        subsets.push_back(m);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<std::pair<int, int>> e;
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = a + 1; b < subsets.size(); ++b)
            if ((subsets[a] & subsets[b]) == 0) e.emplace_back(int(a), int(b));
    return make_graph(int(subsets.size()), std::move(e));
}

Graph make_mycielski(const Graph& g) {
    int n = g.vertex_count;
    std::vector<std::pair<int, int>> e = g.edges;
    for (auto [u, v] : g.edges) {
        e.emplace_back(u, n + v);  // shadow of v sees neighbors of v
        e.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
    return make_graph(2 * n + 1, std::move(e));
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("bad integer '" + s + "' in " + what);
    }
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    auto parts = split(spec, ':');
    const std::string& kind = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n + 1)
            throw InvalidInput("graph spec '" + spec + "': expected " + std::to_string(n) +
                               " parameter(s)");
    };
    if (kind == "complete") {
        want(1);
        return make_complete(parse_int(parts[1], spec));
    }
    if (kind == "cycle") {
        want(1);
        return make_cycle(parse_int(parts[1], spec));
    }
    if (kind == "path") {
        want(1);
        return make_path(parse_int(parts[1], spec));
    }
    if (kind == "kneser") {
        want(2);
        return make_kneser(parse_int(parts[1], spec), parse_int(parts[2], spec));
    }
    if (kind == "mycielski") {
        if (parts.size() < 2) throw InvalidInput("graph spec '" + spec + "': missing inner spec");
        std::string inner = spec.substr(kind.size() + 1);
        return make_mycielski(parse_graph_spec(inner));
    }
    if (kind == "file") {
        if (parts.size() < 2) throw InvalidInput("graph spec '" + spec + "': missing path");
        return read_graph_file(spec.substr(kind.size() + 1));
    }
    throw InvalidInput("unknown graph spec kind '" + kind + "'");
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "p") {
            if (!(ls >> n) || n < 0) throw InvalidInput("bad header in '" + path + "'");
            continue;
        }
        if (n < 0) throw InvalidInput("graph file '" + path + "' missing 'p N' header");
        int u = parse_int(tok, path), v;
        if (!(ls >> v)) throw InvalidInput("bad edge line '" + line + "' in '" + path + "'");
        edges.emplace_back(u, v);
    }
    if (n < 0) throw InvalidInput("graph file '" + path + "' missing 'p N' header");
    return make_graph(n, std::move(edges));
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write graph file '" + path + "'");
    out << "p " << g.vertex_count << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

bool is_automorphism(const Graph& g, const GraphAutomorphism& a) {
    if (int(a.perm.size()) != g.vertex_count) return false;
    std::vector<bool> seen(g.vertex_count, false);
    for (int p : a.perm) {
        if (p < 0 || p >= g.vertex_count || seen[p]) return false;
        seen[p] = true;
    }
    for (auto [u, v] : g.edges)
        if (!g.has_edge(a.perm[u], a.perm[v])) return false;
    return true;
}

GraphAutomorphism flip_automorphism(const Graph& g) {
    int s = g.vertex_count;
    if (s < 3 || s % 2 == 0)
        throw InvalidInput("flip automorphism needs an odd cycle, got " + std::to_string(s) +
                           " vertices");
    Graph expect = make_cycle(s);
    if (g.edges != expect.edges)
        throw InvalidInput("flip automorphism needs the cycle generator's labeling");
    GraphAutomorphism a;
    a.perm.resize(s);
    for (int i = 0; i < s; ++i) a.perm[i] = (s - 1 - i + s) % s;  // v_i -> v_{2r-i}
    return a;
}

namespace {

long long count_homs_rec(const Graph& g, const Graph& h,
                         const std::vector<std::vector<int>>& gadj, std::vector<int>& img,
                         int v) {
    if (v == g.vertex_count) return 1;
    long long total = 0;
    for (int t = 0; t < h.vertex_count; ++t) {
        bool ok = true;
        for (int u : gadj[v]) {
            if (u < v && !h.has_edge(img[u], t)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        img[v] = t;
        total += count_homs_rec(g, h, gadj, img, v + 1);
    }
    return total;
}

}  // namespace

long long count_homomorphisms(const Graph& g, const Graph& h) {
    std::vector<int> img(g.vertex_count, -1);
    auto gadj = g.adjacency_lists();
    return count_homs_rec(g, h, gadj, img, 0);
}

namespace {

bool colorable_rec(const Graph& g, const std::vector<std::vector<int>>& adj, int m,
                   std::vector<int>& color, int v, int used) {
    if (v == g.vertex_count) return true;
    // symmetry breaking: a fresh vertex never needs more than one new color
    int limit = std::min(m, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u : adj[v]) {
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[v] = c;
        if (colorable_rec(g, adj, m, color, v + 1, std::max(used, c + 1))) return true;
    }
    color[v] = -1;
    return false;
}

}  // namespace

int chromatic_number(const Graph& g, int guard_vertices) {
    if (g.vertex_count == 0) return 0;
    if (g.vertex_count > guard_vertices)
        throw GuardExceeded("chromatic_number guard: " + std::to_string(g.vertex_count) +
                            " vertices > " + std::to_string(guard_vertices));
    auto adj = g.adjacency_lists();
    for (int m = 1; m <= g.vertex_count; ++m) {
        std::vector<int> color(g.vertex_count, -1);
        if (colorable_rec(g, adj, m, color, 0, 0)) return m;
    }
    return g.vertex_count;  // unreachable: K_n is n-colorable
}

}  // namespace homw1::graphs
