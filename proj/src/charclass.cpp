#include "homw1/charclass.hpp"

#include <algorithm>

#include "homw1/homcomplex.hpp"

namespace homw1::charclass {

DoubleCover build_double_cover(posets::SimplicialComplex c, posets::VertexPerm t) {
    DoubleCover dc;
    for (int attempt = 0;; ++attempt) {
        try {
            posets::Quotient q = posets::quotient_by_involution(c, t);
            dc.total = std::move(c);
            dc.involution = std::move(t);
            dc.quotient = std::move(q.complex);
            dc.projection = std::move(q.projection);
            dc.representative = std::move(q.representative);
            dc.subdivisions = attempt;
            return dc;
        } catch (const posets::QuotientError& e) {
            if (e.kind == posets::QuotientErrorKind::NotFree) throw;
            if (attempt == 2)
                throw posets::QuotientError(
                    posets::QuotientErrorKind::NotSimplicial,
                    std::string("quotient still not simplicial after two subdivisions: ") +
                        e.what());
            auto [sub, sub_t] = posets::barycentric_subdivide_with_involution(c, t);
            c = std::move(sub);
            t = std::move(sub_t);
        }
    }
}

gf2alg::Cochain w1_cocycle(const DoubleCover& dc) {
    gf2alg::Cochain w;
    w.dim = 1;
    if (dc.quotient.dim() < 1) {
        w.bits = gf2alg::GF2Vector(0);
        return w;
    }
    const auto& edges = dc.quotient.tables[1];
    w.bits = gf2alg::GF2Vector(edges.size());
    const auto& edge_table = dc.total.tables[1];
    for (std::size_t r = 0; r < edges.size(); ++r) {
        auto e = edges[r];
        std::int32_t a = dc.representative[e[0]];
        std::int32_t b = dc.representative[e[1]];
        std::int32_t lift[2] = {std::min(a, b), std::max(a, b)};
        // exactly one of {rep(a), rep(b)} / {rep(a), tau(rep(b))} is an edge
        if (!edge_table.rank_of(std::span<const std::int32_t>(lift, 2))) w.bits.set(r);
    }
    return w;
}

bool w1_power_vanishes(const DoubleCover& dc, const gf2alg::GF2ChainComplex& qcc, int n,
                       std::span<const std::int32_t> vertex_rank) {
    if (n == 0) return dc.quotient.empty();
    if (n > dc.quotient.dim()) return true;  // no n-simplices at all
    gf2alg::Cochain w1 = w1_cocycle(dc);
    gf2alg::Cochain power = w1;
    for (int k = 2; k <= n; ++k) power = gf2alg::cup_product(dc.quotient, w1, power, vertex_rank);
    return gf2alg::is_coboundary(qcc, power);
}

bool w1_power_vanishes(const DoubleCover& dc, int n) {
    gf2alg::GF2ChainComplex qcc = gf2alg::boundary_matrices(dc.quotient);
    return w1_power_vanishes(dc, qcc, n);
}

int w1_height(const DoubleCover& dc) {
    if (dc.total.empty()) return -1;
    gf2alg::GF2ChainComplex qcc = gf2alg::boundary_matrices(dc.quotient);
    int h = 0;
    for (int n = 1; n <= dc.quotient.dim(); ++n) {
        if (w1_power_vanishes(dc, qcc, n)) break;  // monotone: higher powers vanish too
        h = n;
    }
    return h;
}

W1Report w1_report(const DoubleCover& dc, bool with_betti) {
    W1Report rep;
    rep.subdivisions = dc.subdivisions;
    gf2alg::GF2ChainComplex qcc = gf2alg::boundary_matrices(dc.quotient);
    if (with_betti) rep.quotient_betti = gf2alg::betti(qcc);
    if (dc.total.empty()) {
        rep.height = -1;
        rep.powers.emplace_back(0, true);
        return rep;
    }
    rep.powers.emplace_back(0, false);
    rep.height = 0;
    for (int n = 1; n <= dc.quotient.dim(); ++n) {
        bool vanishes = w1_power_vanishes(dc, qcc, n);
        rep.powers.emplace_back(n, vanishes);
        if (vanishes) break;
        rep.height = n;
    }
    return rep;
}

BoundCertificate chromatic_lower_bound(const graphs::Graph& g, BoundTest test, int r,
                                       const Guards& guards) {
    BoundCertificate cert;
    cert.test = test;
    cert.odd_cycle_r = test == BoundTest::OddCycle ? r : 0;
    if (test == BoundTest::OddCycle && r < 1)
        throw InvalidInput("odd cycle test needs r >= 1, got " + std::to_string(r));

    if (g.edges.empty()) {
        cert.bound = 1;
        cert.degenerate = true;
        return cert;
    }
    graphs::Graph source =
        test == BoundTest::K2 ? graphs::make_complete(2) : graphs::make_cycle(2 * r + 1);
    graphs::GraphAutomorphism swap_or_flip;
    if (test == BoundTest::K2)
        swap_or_flip.perm = {1, 0};
    else
        swap_or_flip = graphs::flip_automorphism(source);

    homcomplex::HomPoset hp = homcomplex::hom_poset(source, g, guards.max_poset_elements);
    cert.hom_elements = hp.size();
    if (hp.empty()) {
        cert.bound = 2;  // g has an edge
        cert.degenerate = true;
        return cert;
    }
    auto invol = homcomplex::induced_involution(hp, swap_or_flip);
    auto freeness = homcomplex::check_freeness(hp, invol);
    if (!freeness.free)
        throw InvalidInput("flip/swap action unexpectedly not free");  // theorem-level
    posets::SimplicialComplex oc =
        homcomplex::hom_order_complex(hp, -1, guards.max_simplices);
    DoubleCover dc = build_double_cover(std::move(oc), posets::VertexPerm(invol));
    W1Report w = w1_report(dc, true);
    cert.height = w.height;
    cert.quotient_betti = w.quotient_betti;
    cert.subdivisions = w.subdivisions;
    cert.bound = test == BoundTest::K2 ? w.height + 2 : w.height + 3;
    return cert;
}

}  // namespace homw1::charclass
