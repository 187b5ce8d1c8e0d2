#pragma once

#include "tdc/cocycle.hpp"
#include "tdc/semidirect.hpp"

namespace tdc {

// Cocycle in the raw crossed-module carriers (u_ij, g_ij, a_ijk). The typed
// records encode into this shape; the generic validator and pushforward
// operate here and must agree with the typed ones on the named instances.
struct RawCocycle {
    CMDesc cm;
    Nerve nerve;
    bool has_u = false;
    std::vector<SkewIntMat> u;  // edges
    std::vector<RatVec> g;      // edges
    std::vector<HV> a;          // triangles

    const SkewIntMat& u_at(const Simplex& s) const { return u[nerve.index_of(1, s)]; }
    const RatVec& g_at(const Simplex& s) const { return g[nerve.index_of(1, s)]; }
    const HV& a_at(const Simplex& s) const { return a[nerve.index_of(2, s)]; }
};

inline RawCocycle encode_raw(const CocycleTB2R& x) {
    RawCocycle r{cm_tb2r(x.n), x.nerve, false, {}, {}, {}};
    for (const Simplex& s : x.nerve.simplices(1)) r.g.push_back(x.a.at(x.nerve, s));
    for (const Simplex& s : x.nerve.simplices(2)) {
        HV h = r.cm.h_zero();
        h.tau = x.tau.at(x.nerve, s);
        h.z = x.m.at(x.nerve, s);
        r.a.push_back(h);
    }
    return r;
}

inline RawCocycle encode_raw(const CocycleTB1& x) {
    RawCocycle r = encode_raw(CocycleTB2R{x.n, x.nerve, x.a, x.m, x.tau});
    r.has_u = true;
    for (const Simplex& s : x.nerve.simplices(1)) r.u.push_back(x.B.at(x.nerve, s));
    return r;
}

inline RawCocycle encode_raw(const CocycleTD& x) {
    RawCocycle r{cm_td(x.n), x.nerve, false, {}, {}, {}};
    for (const Simplex& s : x.nerve.simplices(1))
        r.g.push_back(concat(x.a.at(x.nerve, s), x.a_hat.at(x.nerve, s)));
    for (const Simplex& s : x.nerve.simplices(2)) {
        HV h = r.cm.h_zero();
        h.z = concat(x.m.at(x.nerve, s), x.m_hat.at(x.nerve, s));
        h.t = x.t.at(x.nerve, s);
        r.a.push_back(h);
    }
    return r;
}

inline RawCocycle encode_raw(const CocycleTDhalf& x) {
    RawCocycle r = encode_raw(CocycleTD{x.n, x.nerve, x.a, x.a_hat, x.m, x.m_hat, x.t});
    r.has_u = true;
    for (const Simplex& s : x.nerve.simplices(1)) r.u.push_back(x.B.at(x.nerve, s));
    return r;
}

inline CocycleTB2R decode_tb2r(const RawCocycle& r) {
    CocycleTB2R x = zero_tb2r(r.cm.n, r.nerve);
    const auto& edges = r.nerve.simplices(1);
    for (std::size_t i = 0; i < edges.size(); ++i) x.a.vals[i] = r.g[i];
    const auto& tris = r.nerve.simplices(2);
    for (std::size_t i = 0; i < tris.size(); ++i) {
        x.tau.vals[i] = r.a[i].tau;
        x.m.vals[i] = r.a[i].z;
    }
    return x;
}

inline CocycleTD decode_td(const RawCocycle& r) {
    CocycleTD x = zero_td(r.cm.n, r.nerve);
    const auto& edges = r.nerve.simplices(1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        x.a.vals[i] = first_half(r.g[i]);
        x.a_hat.vals[i] = second_half(r.g[i]);
    }
    const auto& tris = r.nerve.simplices(2);
    for (std::size_t i = 0; i < tris.size(); ++i) {
        x.m.vals[i] = first_half(r.a[i].z);
        x.m_hat.vals[i] = second_half(r.a[i].z);
        x.t.vals[i] = r.a[i].t;
    }
    return x;
}

inline CocycleTB1 decode_tb1(const RawCocycle& r) {
    CocycleTB2R base = decode_tb2r(r);
    CocycleTB1 x{base.n, base.nerve, zero_cochain(base.nerve, 1, SkewIntMat::zero(base.n)),
                 base.a, base.m, base.tau};
    for (std::size_t i = 0; i < r.u.size(); ++i) x.B.vals[i] = r.u[i];
    return x;
}

inline CocycleTDhalf decode_tdhalf(const RawCocycle& r) {
    CocycleTD base = decode_td(r);
    CocycleTDhalf x{base.n, base.nerve, zero_cochain(base.nerve, 1, SkewIntMat::zero(base.n)),
                    base.a, base.a_hat, base.m, base.m_hat, base.t};
    for (std::size_t i = 0; i < r.u.size(); ++i) x.B.vals[i] = r.u[i];
    return x;
}

// Generic validation of the crossed-module / semi-direct cocycle conditions:
//   u_jk + u_ij = u_ik
//   t(a_ijk) + g_jk + phi_{u_jk}(g_ij) = g_ik
//   a_ikl . act(g_kl, eta_{u_kl}(t(a_ijk), g_jk phi_{u_jk}(g_ij))^{-1} f_{u_kl}(a_ijk))
//     = a_ijl . a_jkl . act(g_kl, eta_{u_kl}(g_jk, phi_{u_jk}(g_ij)))
inline Report generic_validate(const RawCocycle& x) {
    const CMDesc& cm = x.cm;
    SdDesc sd{cm};
    auto action = [&](const SkewIntMat& u) { return x.has_u ? sd.action(u) : ci_identity(cm); };
    for (const Simplex& s : x.nerve.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        if (x.has_u) {
            if (!(x.u_at(jk) + x.u_at(ij) == x.u_at(ik))) return Report::fail("generic:u", s);
        }
        CI Fjk = action(x.has_u ? x.u_at(jk) : SkewIntMat::zero(cm.n));
        RatVec lhs = cm.t_of(x.a_at(s)) + x.g_at(jk) + Fjk.phi(x.g_at(ij));
        if (!cm.g_eq(lhs, x.g_at(ik))) return Report::fail("generic:obj", s);
    }
    for (const Simplex& s : x.nerve.simplices(3)) {
        Simplex ijk = sub3(s, 0, 1, 2), ijl = sub3(s, 0, 1, 3), ikl = sub3(s, 0, 2, 3),
                jkl = sub3(s, 1, 2, 3);
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), kl = tri_edge(s, 2, 3);
        SkewIntMat u_kl = x.has_u ? x.u_at(kl) : SkewIntMat::zero(cm.n);
        SkewIntMat u_jk = x.has_u ? x.u_at(jk) : SkewIntMat::zero(cm.n);
        CI Fkl = action(u_kl);
        CI Fjk = action(u_jk);
        RatVec gprod = x.g_at(jk) + Fjk.phi(x.g_at(ij));
        HV inner = cm.h_add(cm.h_neg(Fkl.eta(cm.t_of(x.a_at(ijk)), gprod)), Fkl.f(x.a_at(ijk)));
        HV lhs = cm.h_add(x.a_at(ikl), cm.act(x.g_at(kl), inner));
        HV rhs = cm.h_add(cm.h_add(x.a_at(ijl), x.a_at(jkl)),
                          cm.act(x.g_at(kl), Fkl.eta(x.g_at(jk), Fjk.phi(x.g_at(ij)))));
        if (!cm.h_eq(lhs, rhs)) return Report::fail("generic:arrow", s);
    }
    return Report::pass();
}

// Pushforward of a plain crossed-module cocycle along a crossed intertwiner:
// g' = phi(g), a'_ijk = eta(t(a_ijk), g_jk g_ij)^{-1} f(a_ijk) eta(g_jk, g_ij)^{-1}.
inline RawCocycle pushforward_raw(const CI& F, const RawCocycle& x) {
    if (x.has_u) throw std::invalid_argument("plain pushforward on semi-direct cocycle");
    if (!(F.dom == x.cm)) throw std::invalid_argument("pushforward domain mismatch");
    RawCocycle y{F.cod, x.nerve, false, {}, {}, {}};
    for (const RatVec& g : x.g) y.g.push_back(F.phi(g));
    for (const Simplex& s : x.nerve.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2);
        RatVec gprod = x.g_at(jk) + x.g_at(ij);
        const HV& a = x.a_at(s);
        HV v = F.cod.h_add(F.cod.h_neg(F.eta(x.cm.t_of(a), gprod)),
                           F.cod.h_add(F.f(a), F.cod.h_neg(F.eta(x.g_at(jk), x.g_at(ij)))));
        y.a.push_back(v);
    }
    return y;
}

// Equivariant pushforward between semi-direct cocycles: u is kept, and the
// domain action enters through phi_{u_jk}.
inline RawCocycle pushforward_raw_equivariant(const CI& F, const RawCocycle& x) {
    if (!x.has_u) throw std::invalid_argument("equivariant pushforward needs u-data");
    if (!(F.dom == x.cm)) throw std::invalid_argument("pushforward domain mismatch");
    SdDesc sd_dom{x.cm};
    RawCocycle y{F.cod, x.nerve, true, x.u, {}, {}};
    for (const RatVec& g : x.g) y.g.push_back(F.phi(g));
    for (const Simplex& s : x.nerve.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2);
        CI Fjk = sd_dom.action(x.u_at(jk));
        RatVec gprod = x.g_at(jk) + Fjk.phi(x.g_at(ij));
        const HV& a = x.a_at(s);
        HV v = F.cod.h_add(
            F.cod.h_neg(F.eta(x.cm.t_of(a), gprod)),
            F.cod.h_add(F.f(a), F.cod.h_neg(F.eta(x.g_at(jk), Fjk.phi(x.g_at(ij))))));
        y.a.push_back(v);
    }
    return y;
}

// Pushforward of equivalence data along an equivariant intertwiner; used to
// project a gauge to the left legs.
struct RawGauge {
    std::vector<SkewIntMat> v;  // vertices (absent when the cocycles are plain)
    std::vector<RatVec> h;      // vertices
    std::vector<HV> e;          // edges
};

}  // namespace tdc
