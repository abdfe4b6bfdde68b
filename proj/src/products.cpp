#include "homw1/products.hpp"

#include <algorithm>
#include <functional>

#include "homw1/charclass.hpp"

namespace homw1::products {

SphereComplex sphere_complex(int n) {
    if (n < 0) throw InvalidInput("sphere_complex needs n >= 0");
    if (n > 20) throw GuardExceeded("sphere_complex guard: n too large");
    const std::uint32_t full = (1u << (n + 2)) - 1;
    SphereComplex sc;
    sc.n = n;
    // proper nonempty subsets of [n+2], mask order: vertex index = mask - 1
    std::vector<std::vector<std::int32_t>> above(full - 1);
    std::vector<std::string> labels(full - 1);
    for (std::uint32_t m = 1; m < full; ++m) {
        sc.vertex_subset.push_back(m);
        std::string l = "{";
        for (int c = 0; c <= n + 1; ++c)
            if (m & (1u << c)) l += (l.size() > 1 ? "," : "") + std::to_string(c);
        labels[m - 1] = l + "}";
        std::uint32_t free = full & ~m;
        for (std::uint32_t s = free & (~free + 1); s; s = (s - free) & free) {
            std::uint32_t sup = m | s;
            if (sup != full) above[m - 1].push_back(static_cast<std::int32_t>(sup - 1));
            if (s == free) break;
        }
    }
    posets::Poset p = posets::Poset::from_strict_above(std::move(above), std::move(labels));
    sc.complex = posets::order_complex(p);
    sc.involution.resize(full - 1);
    for (std::uint32_t m = 1; m < full; ++m)
        sc.involution[m - 1] = static_cast<std::int32_t>((full & ~m) - 1);
    posets::check_involution(sc.complex, sc.involution);
    sc.base_vertex = 0;  // the subset {0}
    return sc;
}

ProductComplex product_complex(const std::vector<const posets::SimplicialComplex*>& factors,
                               std::size_t guard_elements, std::size_t guard_simplices) {
    std::size_t k = factors.size();
    if (k == 0) throw InvalidInput("product_complex needs at least one factor");
    ProductComplex pc;
    std::vector<posets::Poset> face(k);
    std::vector<std::size_t> sizes(k);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        face[i] = posets::face_poset(*factors[i]);
        sizes[i] = static_cast<std::size_t>(face[i].size());
        pc.factor_offsets.emplace_back();
        std::int32_t off = 0;
        for (int d = 0; d <= factors[i]->dim(); ++d) {
            pc.factor_offsets[i].push_back(off);
            off += static_cast<std::int32_t>(factors[i]->tables[d].size());
        }
        if (sizes[i] == 0) throw InvalidInput("product factor is empty");
        if (total > guard_elements / sizes[i] + 1) total = guard_elements + 1;
        else total *= sizes[i];
    }
    if (total > guard_elements)
        throw GuardExceeded("product_complex guard: more than " +
                            std::to_string(guard_elements) + " cells");
    // tuples in lexicographic order, factor 0 most significant
    std::vector<std::size_t> stride(k, 1);
    for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * sizes[i];
    pc.tuples.assign(total, std::vector<std::int32_t>(k, 0));
    for (std::size_t e = 0; e < total; ++e) {
        std::size_t rest = e;
        for (std::size_t i = 0; i < k; ++i) {
            pc.tuples[e][i] = static_cast<std::int32_t>(rest / stride[i]);
            rest %= stride[i];
        }
    }
    std::vector<std::vector<std::int32_t>> above(total);
    std::vector<std::string> labels(total);
    std::vector<std::int32_t> sup(k);
    for (std::size_t e = 0; e < total; ++e) {
        const auto& t = pc.tuples[e];
        std::string l = "(";
        for (std::size_t i = 0; i < k; ++i)
            l += (i ? "," : "") + face[i].labels()[t[i]];
        labels[e] = l + ")";
        // componentwise reflexive-above tuples, minus the element itself
        std::function<void(std::size_t)> extend = [&](std::size_t i) {
            if (i == k) {
                std::size_t id = 0;
                for (std::size_t j = 0; j < k; ++j) id += static_cast<std::size_t>(sup[j]) * stride[j];
                if (id != e) above[e].push_back(static_cast<std::int32_t>(id));
                return;
            }
            sup[i] = t[i];
            extend(i + 1);
            for (std::int32_t f : face[i].above(t[i])) {
                sup[i] = f;
                extend(i + 1);
            }
        };
        extend(0);
    }
    pc.cell_poset = posets::Poset::from_strict_above(std::move(above), std::move(labels));
    pc.triangulation = posets::order_complex(pc.cell_poset, -1, guard_simplices);
    return pc;
}

ProductBuild build_X(int r, int n) {
    if (r < 1 || n < 1) throw InvalidInput("build_X needs r >= 1 and n >= 1");
    bool supported = (r == 1 && n == 1) || (r == 1 && n == 2) || (r == 2 && n == 1);
    if (!supported)
        throw GuardExceeded("build_X guard: (r,n)=(" + std::to_string(r) + "," +
                            std::to_string(n) +
                            ") unsupported; flag counts grow factorially (supported: (1,1), "
                            "(1,2), (2,1))");
    ProductBuild x;
    x.r = r;
    x.n = n;
    x.sphere = sphere_complex(n);
    std::vector<const posets::SimplicialComplex*> factors(2 * r, &x.sphere.complex);
    x.product = product_complex(factors, 1u << 30, 1u << 30);
    // complement map on face-poset ids of the sphere factor
    posets::Poset sphere_faces = posets::face_poset(x.sphere.complex);
    std::vector<std::int32_t> compl_id(sphere_faces.size());
    {
        std::int32_t off = 0;
        for (int d = 0; d <= x.sphere.complex.dim(); ++d) {
            const auto& tab = x.sphere.complex.tables[d];
            for (std::size_t rk = 0; rk < tab.size(); ++rk) {
                auto img = posets::map_simplex(tab, x.sphere.involution, tab[rk]);
                compl_id[off + rk] = off + static_cast<std::int32_t>(*img);
            }
            off += static_cast<std::int32_t>(tab.size());
        }
    }
    std::size_t total = x.product.tuples.size();
    std::size_t m = static_cast<std::size_t>(sphere_faces.size());
    x.tau.resize(total);
    const int k = 2 * r;
    for (std::size_t e = 0; e < total; ++e) {
        const auto& t = x.product.tuples[e];
        std::size_t id = 0;
        for (int i = 0; i < k; ++i) {
            std::int32_t img = i == 0 ? compl_id[t[0]] : t[k - i];
            id = id * m + static_cast<std::size_t>(img);
        }
        x.tau[e] = static_cast<std::int32_t>(id);
    }
    for (std::size_t e = 0; e < total; ++e) {
        if (x.tau[static_cast<std::size_t>(x.tau[e])] != static_cast<std::int32_t>(e))
            throw InvalidInput("tau is not an involution");
        if (x.tau[e] == static_cast<std::int32_t>(e)) throw InvalidInput("tau has a fixed cell");
        if (x.product.cell_poset.comparable(static_cast<int>(e), x.tau[e]))
            throw InvalidInput("tau compares a cell with its image");
    }
    return x;
}

namespace {

gf2alg::GF2Vector fundamental_cycle(const ProductBuild& x,
                                    const std::function<bool(std::size_t)>& in_subcomplex,
                                    int target_dim) {
    const posets::Poset& p = x.product.cell_poset;
    const auto& table = x.product.triangulation.tables[target_dim];
    gf2alg::GF2Vector z(table.size());
    std::vector<std::int32_t> chain;
    std::function<void(int)> extend = [&](int last) {
        if (static_cast<int>(chain.size()) == target_dim + 1) {
            std::vector<std::int32_t> sorted(chain);
            std::sort(sorted.begin(), sorted.end());
            z.flip(*table.rank_of(sorted));
            return;
        }
        for (std::int32_t f : p.above(last)) {
            if (!in_subcomplex(static_cast<std::size_t>(f))) continue;
            chain.push_back(f);
            extend(f);
            chain.pop_back();
        }
    };
    for (int s = 0; s < p.size(); ++s) {
        if (!in_subcomplex(static_cast<std::size_t>(s))) continue;
        chain.assign(1, s);
        extend(s);
    }
    return z;
}

}  // namespace

NamedCycle named_cycle_c(const ProductBuild& x, int i) {
    if (i < 0 || i >= 2 * x.r) throw InvalidInput("c_i index out of range");
    int dim = (2 * x.r - 1) * x.n;
    std::int32_t base = x.sphere.base_vertex;  // 0-simplex id of the vertex {0}
    auto z = fundamental_cycle(
        x, [&](std::size_t e) { return x.product.tuples[e][i] == base; }, dim);
    return NamedCycle{"c" + std::to_string(i), dim, std::move(z)};
}

NamedCycle named_cycle_diag(const ProductBuild& x, int i) {
    if (i < 0 || i + 1 >= 2 * x.r) throw InvalidInput("diag_i index out of range");
    int dim = (2 * x.r - 1) * x.n;
    auto z = fundamental_cycle(
        x,
        [&](std::size_t e) {
            return x.product.tuples[e][i] == x.product.tuples[e][i + 1];
        },
        dim);
    return NamedCycle{"diag" + std::to_string(i), dim, std::move(z)};
}

NamedCycle named_cycle_antidiag(const ProductBuild& x) {
    int dim = (2 * x.r - 1) * x.n;
    posets::Poset sphere_faces = posets::face_poset(x.sphere.complex);
    std::vector<std::int32_t> compl_id(sphere_faces.size());
    std::int32_t off = 0;
    for (int d = 0; d <= x.sphere.complex.dim(); ++d) {
        const auto& tab = x.sphere.complex.tables[d];
        for (std::size_t rk = 0; rk < tab.size(); ++rk) {
            auto img = posets::map_simplex(tab, x.sphere.involution, tab[rk]);
            compl_id[off + rk] = off + static_cast<std::int32_t>(*img);
        }
        off += static_cast<std::int32_t>(tab.size());
    }
    auto z = fundamental_cycle(
        x,
        [&](std::size_t e) {
            const auto& t = x.product.tuples[e];
            return t[2 * x.r - 1] == compl_id[t[0]];
        },
        dim);
    return NamedCycle{"antidiag", dim, std::move(z)};
}

Section3Report verify_section3(int r, int n) {
    ProductBuild x = build_X(r, n);
    Section3Report rep;
    const int D = (2 * r - 1) * n;
    gf2alg::GF2ChainComplex cc = gf2alg::boundary_matrices(x.product.triangulation);
    std::vector<NamedCycle> c;
    for (int i = 0; i < 2 * r; ++i) c.push_back(named_cycle_c(x, i));
    std::vector<NamedCycle> diag;
    for (int i = 0; i + 1 < 2 * r; ++i) diag.push_back(named_cycle_diag(x, i));
    NamedCycle anti = named_cycle_antidiag(x);
    for (const auto& nc : c)
        if (!gf2alg::is_cycle(cc, D, nc.cycle)) throw InvalidInput(nc.label + " is not a cycle");
    for (const auto& nc : diag)
        if (!gf2alg::is_cycle(cc, D, nc.cycle)) throw InvalidInput(nc.label + " is not a cycle");
    if (!gf2alg::is_cycle(cc, D, anti.cycle)) throw InvalidInput("antidiag is not a cycle");

    gf2alg::GF2Solver top_solver(cc.boundary[D + 1]);
    auto record = [&](const std::string& name, bool ok) {
        rep.assertions.emplace_back(name, ok);
        if (!ok && rep.failure.empty()) rep.failure = name;
    };
    // (a) diagonal classes: c_i + c_{i+1} + diag_i bounds
    for (int i = 0; i + 1 < 2 * r; ++i) {
        gf2alg::GF2Vector z = c[i].cycle;
        z.xor_with(c[i + 1].cycle);
        z.xor_with(diag[i].cycle);
        record("c" + std::to_string(i) + "+c" + std::to_string(i + 1) + "+diag" +
                   std::to_string(i) + " bounds",
               top_solver.in_column_space(z));
    }
    // (a') wraparound: c_{2r-1} + tau_# c_0 + antidiag bounds
    {
        gf2alg::GF2Vector tau_c0 = gf2alg::pushforward_cycle(
            x.product.triangulation, x.product.triangulation, x.tau, D, c[0].cycle);
        gf2alg::GF2Vector z = c[2 * r - 1].cycle;
        z.xor_with(tau_c0);
        z.xor_with(anti.cycle);
        record("c" + std::to_string(2 * r - 1) + "+tau#c0+antidiag bounds",
               top_solver.in_column_space(z));
    }
    // (b) quotient pushforward of c_r bounds
    charclass::DoubleCover dc =
        charclass::build_double_cover(x.product.triangulation, x.tau);
    rep.subdivisions = dc.subdivisions;
    gf2alg::GF2ChainComplex qcc = gf2alg::boundary_matrices(dc.quotient);
    rep.quotient_betti = gf2alg::betti(qcc);
    {
        gf2alg::GF2Vector push = gf2alg::pushforward_cycle(dc.total, dc.quotient, dc.projection,
                                                           D, c[r].cycle);
        record("pi#(c" + std::to_string(r) + ") bounds",
               gf2alg::is_boundary(qcc, D, push));
    }
    // (c) telescoped: pi#(c_0 + diag_0 + ... + diag_{r-1}) bounds
    {
        gf2alg::GF2Vector z = c[0].cycle;
        for (int i = 0; i < r; ++i) z.xor_with(diag[i].cycle);
        gf2alg::GF2Vector push =
            gf2alg::pushforward_cycle(dc.total, dc.quotient, dc.projection, D, z);
        record("pi#(c0+diag0..diag" + std::to_string(r - 1) + ") bounds",
               gf2alg::is_boundary(qcc, D, push));
    }
    rep.pass = rep.failure.empty();
    return rep;
}

}  // namespace homw1::products
