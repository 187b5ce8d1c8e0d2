#pragma once

#include "tdc/generic.hpp"

namespace tdc {

// ---------------------------------------------------------------------------
// Leg projections and the named automorphism pushforwards (closed forms).
// Each agrees with the generic pushforward engine; tests assert that.
// ---------------------------------------------------------------------------

// tau_ijk(c) = t_ijk + (c - a_ik) . mhat_ijk - a_ij . ahat_jk
inline AffChar leftleg_tau(const Circle& t, const RatVec& a_ik, const IntVec& m_hat,
                           const RatVec& a_ij, const RatVec& ahat_jk) {
    Circle c = t - Circle(dot(m_hat, a_ik)) - Circle(dot(a_ij, ahat_jk));
    return AffChar(c, m_hat);
}

inline CocycleTB2R leftleg(const CocycleTD& x) {
    CocycleTB2R y = zero_tb2r(x.n, x.nerve);
    y.a = x.a;
    y.m = x.m;
    for (const Simplex& s : x.nerve.simplices(2)) {
        y.tau.at(x.nerve, s) = leftleg_tau(
            x.t.at(x.nerve, s), x.a.at(x.nerve, tri_edge(s, 0, 2)), x.m_hat.at(x.nerve, s),
            x.a.at(x.nerve, tri_edge(s, 0, 1)), x.a_hat.at(x.nerve, tri_edge(s, 1, 2)));
    }
    return y;
}

inline CocycleTB1 leftleg(const CocycleTDhalf& x) {
    CocycleTB1 y = zero_tb1(x.n, x.nerve);
    y.B = x.B;
    y.a = x.a;
    y.m = x.m;
    for (const Simplex& s : x.nerve.simplices(2)) {
        y.tau.at(x.nerve, s) = leftleg_tau(
            x.t.at(x.nerve, s), x.a.at(x.nerve, tri_edge(s, 0, 2)), x.m_hat.at(x.nerve, s),
            x.a.at(x.nerve, tri_edge(s, 0, 1)), x.a_hat.at(x.nerve, tri_edge(s, 1, 2)));
    }
    return y;
}

inline CocycleTB2R rightleg(const CocycleTD& x) {
    CocycleTB2R y = zero_tb2r(x.n, x.nerve);
    y.a = x.a_hat;
    y.m = x.m_hat;
    for (const Simplex& s : x.nerve.simplices(2))
        y.tau.at(x.nerve, s) = AffChar(x.t.at(x.nerve, s), x.m.at(x.nerve, s));
    return y;
}

// flip_*: swaps the two torus directions; the eta of flip feeds extra t-terms.
inline CocycleTD flip_push(const CocycleTD& x) {
    CocycleTD y = zero_td(x.n, x.nerve);
    y.a = x.a_hat;
    y.a_hat = x.a;
    y.m = x.m_hat;
    y.m_hat = x.m;
    for (const Simplex& s : x.nerve.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2);
        y.t.at(x.nerve, s) =
            x.t.at(x.nerve, s) -
            Circle(dot(x.m_hat.at(x.nerve, s),
                       x.a.at(x.nerve, jk) + x.a.at(x.nerve, ij))) -
            Circle(dot(x.a_hat.at(x.nerve, jk), x.a.at(x.nerve, ij)));
    }
    return y;
}

// (F_{e^B})_* on TD-cocycles.
inline CocycleTD act_eB(const CocycleTD& x, const SkewIntMat& B) {
    CocycleTD y = x;
    for (const Simplex& s : x.nerve.simplices(1))
        y.a_hat.at(x.nerve, s) = B.mul(x.a.at(x.nerve, s)) + x.a_hat.at(x.nerve, s);
    for (const Simplex& s : x.nerve.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2);
        y.m_hat.at(x.nerve, s) = B.mul(x.m.at(x.nerve, s)) + x.m_hat.at(x.nerve, s);
        y.t.at(x.nerve, s) =
            x.t.at(x.nerve, s) -
            Circle(bracket_low(to_rat_vec(x.m.at(x.nerve, s)), B,
                               x.a.at(x.nerve, jk) + x.a.at(x.nerve, ij))) -
            Circle(bracket_low(x.a.at(x.nerve, jk), B, x.a.at(x.nerve, ij)));
    }
    return y;
}

// (F_B)_* on TB2R-cocycles.
inline CocycleTB2R act_B(const CocycleTB2R& x, const SkewIntMat& B) {
    CocycleTB2R y = x;
    for (const Simplex& s : x.nerve.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2);
        const IntVec& m = x.m.at(x.nerve, s);
        y.tau.at(x.nerve, s) =
            x.tau.at(x.nerve, s) - aff_of_bra(m, B) -
            AffChar::constant_char(
                bracket_low(x.a.at(x.nerve, jk) + x.a.at(x.nerve, ij), B, m), x.n) -
            AffChar::constant_char(
                bracket_low(x.a.at(x.nerve, ij), B, x.a.at(x.nerve, jk)), x.n);
    }
    return y;
}

// ---------------------------------------------------------------------------
// The fibre sequence Gamma -> Gamma x| so(n,Z) -> so(n,Z).
// ---------------------------------------------------------------------------

inline CocycleTDhalf i_push(const CocycleTD& x) {
    CocycleTDhalf y = zero_tdhalf(x.n, x.nerve);
    y.a = x.a;
    y.a_hat = x.a_hat;
    y.m = x.m;
    y.m_hat = x.m_hat;
    y.t = x.t;
    return y;
}

inline CocycleTB1 i_push(const CocycleTB2R& x) {
    CocycleTB1 y = zero_tb1(x.n, x.nerve);
    y.a = x.a;
    y.m = x.m;
    y.tau = x.tau;
    return y;
}

inline CocycleSO p_push(const CocycleTDhalf& x) { return {x.n, x.nerve, x.B}; }
inline CocycleSO p_push(const CocycleTB1& x) { return {x.n, x.nerve, x.B}; }

// Constant gauge C_i = B witnessing i(x) ~ i(act_eB(x)).
inline GaugeTDhalf constant_so_gauge(int n, const Nerve& nv, const SkewIntMat& B) {
    GaugeTDhalf g = zero_gauge_tdhalf(n, nv);
    for (auto& c : g.C.vals) c = B;
    return g;
}

// ---------------------------------------------------------------------------
// Trivial-torus-bundle maps.
// ---------------------------------------------------------------------------

// I_*: (B 1-cocycle, m 2-cocycle, t 2-cocycle) |-> the cocycle (B, 0, 0, tau_{t,m}).
inline CocycleTB1 trivial_I(const CocycleSO& so, const Cochain<IntVec>& m,
                            const Cochain<Circle>& t) {
    const Nerve& nv = so.nerve;
    if (!is_cocycle(nv, m, int_vec_zero(so.n)) || !is_cocycle(nv, t, Circle()))
        throw std::invalid_argument("trivial_I inputs must be cocycles");
    Report r = validate(so);
    if (!r.ok) throw std::invalid_argument("trivial_I: B is not a cocycle");
    CocycleTB1 y = zero_tb1(so.n, nv);
    y.B = so.B;
    for (const Simplex& s : nv.simplices(2))
        y.tau.at(nv, s) = AffChar(t.at(nv, s), m.at(nv, s));
    return y;
}

// T_*: underlying torus-bundle class of the left leg, the Z^n 2-cocycle m.
inline Cochain<IntVec> trivial_T(const CocycleTB1& x) { return x.m; }
inline Cochain<IntVec> trivial_T(const CocycleTB2R& x) { return x.m; }

// Itilde_*: (B, (b, mhat) crossed-module cocycle for Z^n -> R^n, t) |-> TDhalf
// cocycle (B, 0, b, 0, mhat, t).
inline CocycleTDhalf trivial_Itilde(const CocycleSO& so, const Cochain<RatVec>& b,
                                    const Cochain<IntVec>& m_hat, const Cochain<Circle>& t) {
    const Nerve& nv = so.nerve;
    Report r = validate(so);
    if (!r.ok) throw std::invalid_argument("trivial_Itilde: B is not a cocycle");
    for (const Simplex& s : nv.simplices(2)) {
        RatVec lhs = b.at(nv, tri_edge(s, 0, 2));
        RatVec rhs = to_rat_vec(m_hat.at(nv, s)) + b.at(nv, tri_edge(s, 1, 2)) +
                     b.at(nv, tri_edge(s, 0, 1));
        if (lhs != rhs) throw std::invalid_argument("trivial_Itilde: (b, m_hat) not a cocycle");
    }
    if (!is_cocycle(nv, t, Circle()))
        throw std::invalid_argument("trivial_Itilde: t not a cocycle");
    CocycleTDhalf y = zero_tdhalf(so.n, nv);
    y.B = so.B;
    y.a_hat = b;
    y.m_hat = m_hat;
    y.t = t;
    return y;
}

inline Cochain<IntVec> trivial_Ttilde(const CocycleTDhalf& x) { return x.m; }

// ---------------------------------------------------------------------------
// Polarization: a section C trivializing the B-class turns a half-geometric
// correspondence into a T-duality correspondence.
// ---------------------------------------------------------------------------

struct PolarizeResult {
    bool ok = false;
    CocycleTD cocycle;
    Report error;                      // failing edge when a section is given
    SolveOutcome<SkewIntMat> search;   // obstruction when no section exists
};

inline PolarizeResult polarize(const CocycleTDhalf& x, const Cochain<SkewIntMat>& C) {
    PolarizeResult res;
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        SkewIntMat want = C.at(nv, vtx(j)) + x.B.at(nv, s) - C.at(nv, vtx(i));
        if (!want.is_zero()) {
            res.error = Report::fail("coc:TFgeo:6", s, "section does not trivialize B");
            return res;
        }
    }
    GaugeTDhalf g = zero_gauge_tdhalf(x.n, nv);
    g.C = C;
    CocycleTDhalf y = apply_gauge(x, g);
    res.ok = true;
    res.cocycle = CocycleTD{y.n, y.nerve, y.a, y.a_hat, y.m, y.m_hat, y.t};
    return res;
}

// Search for a section: B_ij = C_i - C_j, i.e. delta C = -B over so(n,Z).
inline PolarizeResult polarize_search(const CocycleTDhalf& x) {
    PolarizeResult res;
    Cochain<SkewIntMat> negB = cochain_neg(x.B);
    SolveOutcome<SkewIntMat> out =
        solve_coboundary(x.nerve, negB, Ring::Z, SkewIntMat::zero(x.n));
    if (!out.ok) {
        out.note = "no polarization exists on this nerve";
        res.search = out;
        res.error = Report::fail("coc:TFgeo:6", {}, out.note);
        return res;
    }
    return polarize(x, out.solution);
}

// ---------------------------------------------------------------------------
// Gauge bookkeeping used by the dualization machinery.
// ---------------------------------------------------------------------------

// Left-leg image of a TDhalf gauge. The eps-constant collects the f-image of
// e together with the multiplicator corrections of the pushforward:
// eps_ij = e_ij - zhat_ij.(p_j + a_ij) - phat_j.a_ij + ahat'_ij.p_i.
inline GaugeTB1 induced_leftleg_gauge(const CocycleTDhalf& x, const CocycleTDhalf& y,
                                      const GaugeTDhalf& h) {
    const Nerve& nv = x.nerve;
    GaugeTB1 g = zero_gauge_tb1(x.n, nv);
    g.C = h.C;
    g.z = h.z;
    g.p = h.p;
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        Circle c = h.e.at(nv, s) -
                   Circle(dot(h.z_hat.at(nv, s), h.p.at(nv, vtx(j)) + x.a.at(nv, s))) -
                   Circle(dot(h.p_hat.at(nv, vtx(j)), x.a.at(nv, s))) +
                   Circle(dot(y.a_hat.at(nv, s), h.p.at(nv, vtx(i))));
        g.eps.at(nv, s) = AffChar(c, h.z_hat.at(nv, s));
    }
    return g;
}

// Composite of two gauges with vanishing C-parts. The Circle parts pick up
// the action twist -phat'_j . z_ij (resp. the translated eps).
inline GaugeTDhalf gauge_compose_abelian(const GaugeTDhalf& g, const GaugeTDhalf& g2,
                                         const Nerve& nv) {
    GaugeTDhalf r = g;
    for (auto& c : r.C.vals)
        if (!c.is_zero()) throw std::invalid_argument("gauge_compose_abelian needs C = 0");
    for (const auto& c : g2.C.vals)
        if (!c.is_zero()) throw std::invalid_argument("gauge_compose_abelian needs C = 0");
    for (std::size_t i = 0; i < r.z.vals.size(); ++i) {
        r.z.vals[i] = g.z.vals[i] + g2.z.vals[i];
        r.z_hat.vals[i] = g.z_hat.vals[i] + g2.z_hat.vals[i];
    }
    for (std::size_t i = 0; i < r.p.vals.size(); ++i) {
        r.p.vals[i] = g.p.vals[i] + g2.p.vals[i];
        r.p_hat.vals[i] = g.p_hat.vals[i] + g2.p_hat.vals[i];
    }
    for (const Simplex& s : nv.simplices(1)) {
        int j = s[1];
        r.e.at(nv, s) = g2.e.at(nv, s) + g.e.at(nv, s) -
                        Circle(dot(g2.p_hat.at(nv, vtx(j)), g.z.at(nv, s)));
    }
    return r;
}

inline GaugeTB1 gauge_compose_abelian(const GaugeTB1& g, const GaugeTB1& g2, const Nerve& nv) {
    GaugeTB1 r = g;
    for (const auto& c : g.C.vals)
        if (!c.is_zero()) throw std::invalid_argument("gauge_compose_abelian needs C = 0");
    for (const auto& c : g2.C.vals)
        if (!c.is_zero()) throw std::invalid_argument("gauge_compose_abelian needs C = 0");
    for (std::size_t i = 0; i < r.z.vals.size(); ++i)
        r.z.vals[i] = g.z.vals[i] + g2.z.vals[i];
    for (std::size_t i = 0; i < r.p.vals.size(); ++i)
        r.p.vals[i] = g.p.vals[i] + g2.p.vals[i];
    for (const Simplex& s : nv.simplices(1)) {
        int j = s[1];
        r.eps.at(nv, s) = g2.eps.at(nv, s) +
                          aff_translate(g2.p.at(nv, vtx(j)), g.eps.at(nv, s));
    }
    return r;
}

// Inverse of a C = 0 gauge. The vector parts negate; the arrow part picks up
// the action of the negated object datum: e_inv = -e_ij - phat_j . z_ij for
// the categorical torus, eps_inv = -l_{-p_j} eps_ij on the bracket side.
inline GaugeTDhalf gauge_inverse_abelian(const GaugeTDhalf& g, const Nerve& nv) {
    for (const auto& c : g.C.vals)
        if (!c.is_zero()) throw std::invalid_argument("gauge_inverse_abelian needs C = 0");
    GaugeTDhalf r = g;
    for (auto& v : r.z.vals) v = -v;
    for (auto& v : r.z_hat.vals) v = -v;
    for (auto& v : r.p.vals) v = -v;
    for (auto& v : r.p_hat.vals) v = -v;
    for (const Simplex& s : nv.simplices(1)) {
        int j = s[1];
        r.e.at(nv, s) = -g.e.at(nv, s) - Circle(dot(g.p_hat.at(nv, vtx(j)), g.z.at(nv, s)));
    }
    return r;
}

inline GaugeTB1 gauge_inverse_abelian(const GaugeTB1& g, const Nerve& nv) {
    for (const auto& c : g.C.vals)
        if (!c.is_zero()) throw std::invalid_argument("gauge_inverse_abelian needs C = 0");
    GaugeTB1 r = g;
    for (auto& v : r.z.vals) v = -v;
    for (auto& v : r.p.vals) v = -v;
    for (const Simplex& s : nv.simplices(1)) {
        int j = s[1];
        r.eps.at(nv, s) = -aff_translate(-g.p.at(nv, vtx(j)), g.eps.at(nv, s));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Restricted gauge solving: with the integer/matrix parts fixed the
// remaining equations are affine in p, p_hat over Q and e over Q/Z.
// ---------------------------------------------------------------------------

struct GaugeSolveTDhalf {
    bool ok = false;
    GaugeTDhalf gauge;
    Report error;  // fixed data inconsistent
    std::string obstruction_locus;
    SolveOutcome<RatVec> obstruction_q;
    SolveOutcome<Circle> obstruction_circle;
};

struct GaugeSolveTB1 {
    bool ok = false;
    GaugeTB1 gauge;
    Report error;
    std::string obstruction_locus;
    SolveOutcome<RatVec> obstruction_q;
    SolveOutcome<Circle> obstruction_circle;
};

// Finishing steps shared by the restricted solver and the Step-3 lift: with
// (C, z, z_hat, p) known, solve p_hat over Q and e over Q/Z.
inline GaugeSolveTDhalf finish_gauge_tdhalf(const CocycleTDhalf& x, const CocycleTDhalf& y,
                                            const Cochain<SkewIntMat>& C,
                                            const Cochain<IntVec>& z,
                                            const Cochain<IntVec>& z_hat,
                                            const Cochain<RatVec>& p) {
    GaugeSolveTDhalf res;
    const Nerve& nv = x.nerve;

    // p_hat-solve over Q: (delta p_hat)_ij = -(zhat_ij + C_j a_ij + ahat_ij - ahat'_ij - B'_ij p_i)
    Cochain<RatVec> rhs_ph = zero_cochain(nv, 1, rat_vec_zero(x.n));
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        RatVec beta = to_rat_vec(z_hat.at(nv, s)) + C.at(nv, vtx(j)).mul(x.a.at(nv, s)) +
                      x.a_hat.at(nv, s) - y.a_hat.at(nv, s) -
                      y.B.at(nv, s).mul(p.at(nv, vtx(i)));
        rhs_ph.at(nv, s) = -beta;
    }
    SolveOutcome<RatVec> sph = solve_coboundary(nv, rhs_ph, Ring::Q, rat_vec_zero(x.n));
    if (!sph.ok) {
        res.obstruction_locus = "p_hat";
        res.obstruction_q = sph;
        return res;
    }
    Cochain<RatVec> p_hat = sph.solution;

    // e-solve over Q/Z with rhs the rearranged t-equation.
    Cochain<Circle> rhs_e = zero_cochain(nv, 2, Circle());
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        int k = s[2];
        const SkewIntMat& Bp_jk = y.B.at(nv, jk);
        const SkewIntMat& C_k = C.at(nv, vtx(k));
        rhs_e.at(nv, s) =
            x.t.at(nv, s) - y.t.at(nv, s) -
            Circle(bracket_low(y.a.at(nv, ij), Bp_jk, p.at(nv, vtx(s[0])))) +
            Circle(bracket_low(to_rat_vec(z.at(nv, ij)), Bp_jk,
                               p.at(nv, vtx(s[1])) + x.a.at(nv, ij))) +
            Circle(dot(y.a_hat.at(nv, jk), z.at(nv, ij))) +
            Circle(bracket_low(p.at(nv, vtx(s[1])), Bp_jk, x.a.at(nv, ij))) -
            Circle(bracket_low(to_rat_vec(x.m.at(nv, s)), C_k, x.a.at(nv, ik))) -
            Circle(dot(p_hat.at(nv, vtx(k)), x.m.at(nv, s))) -
            Circle(bracket_low(x.a.at(nv, jk), C_k, x.a.at(nv, ij)));
    }
    SolveOutcome<Circle> se = solve_coboundary(nv, rhs_e, Ring::Circle, Circle());
    if (!se.ok) {
        res.obstruction_locus = "e";
        res.obstruction_circle = se;
        return res;
    }

    res.ok = true;
    res.gauge = GaugeTDhalf{C, z, z_hat, p, p_hat, se.solution};
    return res;
}

inline GaugeSolveTDhalf solve_gauge_restricted(const CocycleTDhalf& x, const CocycleTDhalf& y,
                                               const Cochain<SkewIntMat>& C,
                                               const Cochain<IntVec>& z,
                                               const Cochain<IntVec>& z_hat) {
    GaugeSolveTDhalf res;
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        SkewIntMat lb = C.at(nv, vtx(j)) + x.B.at(nv, s);
        SkewIntMat rb = y.B.at(nv, s) + C.at(nv, vtx(i));
        if (lb != rb) {
            res.error = Report::fail("coc:TFgeo:6", s, "fixed C incompatible with B-classes");
            return res;
        }
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        IntVec lm = y.m.at(nv, s) + z.at(nv, ij) + z.at(nv, jk);
        IntVec rm = z.at(nv, ik) + x.m.at(nv, s);
        if (lm != rm) {
            res.error = Report::fail("re:coc:TFgeo:7", s, "fixed z incompatible with m-data");
            return res;
        }
        IntVec lmh = y.m_hat.at(nv, s) + z_hat.at(nv, ij) + z_hat.at(nv, jk) +
                     y.B.at(nv, jk).mul(z.at(nv, ij));
        IntVec rmh = x.m_hat.at(nv, s) + z_hat.at(nv, ik) +
                     C.at(nv, vtx(s[2])).mul(x.m.at(nv, s));
        if (lmh != rmh) {
            res.error = Report::fail("re:coc:TFgeo:8", s, "fixed z_hat incompatible");
            return res;
        }
    }

    // p-solve over Q: (delta p)_ij = a'_ij - a_ij - z_ij
    Cochain<RatVec> rhs_p = zero_cochain(nv, 1, rat_vec_zero(x.n));
    for (const Simplex& s : nv.simplices(1))
        rhs_p.at(nv, s) = y.a.at(nv, s) - x.a.at(nv, s) - to_rat_vec(z.at(nv, s));
    SolveOutcome<RatVec> sp = solve_coboundary(nv, rhs_p, Ring::Q, rat_vec_zero(x.n));
    if (!sp.ok) {
        res.obstruction_locus = "p";
        res.obstruction_q = sp;
        return res;
    }
    return finish_gauge_tdhalf(x, y, C, z, z_hat, sp.solution);
}

inline GaugeSolveTB1 solve_gauge_restricted(const CocycleTB1& x, const CocycleTB1& y,
                                            const Cochain<SkewIntMat>& C,
                                            const Cochain<IntVec>& z,
                                            const Cochain<IntVec>& z_hat) {
    GaugeSolveTB1 res;
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        SkewIntMat lb = C.at(nv, vtx(j)) + x.B.at(nv, s);
        SkewIntMat rb = y.B.at(nv, s) + C.at(nv, vtx(i));
        if (lb != rb) {
            res.error = Report::fail("coc:F1:6", s, "fixed C incompatible with B-classes");
            return res;
        }
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        IntVec lm = y.m.at(nv, s) + z.at(nv, ij) + z.at(nv, jk);
        IntVec rm = z.at(nv, ik) + x.m.at(nv, s);
        if (lm != rm) {
            res.error = Report::fail("coc:F1:9", s, "fixed z incompatible with m-data");
            return res;
        }
        // winding part of the eps-equation
        IntVec lw = y.tau.at(nv, s).winding + z_hat.at(nv, ij) + z_hat.at(nv, jk) +
                    y.B.at(nv, jk).mul(z.at(nv, ij));
        IntVec rw = z_hat.at(nv, ik) + x.tau.at(nv, s).winding +
                    C.at(nv, vtx(s[2])).mul(x.m.at(nv, s));
        if (lw != rw) {
            res.error = Report::fail("coc:F1:8", s, "fixed winding incompatible with tau-data");
            return res;
        }
    }

    Cochain<RatVec> rhs_p = zero_cochain(nv, 1, rat_vec_zero(x.n));
    for (const Simplex& s : nv.simplices(1))
        rhs_p.at(nv, s) = y.a.at(nv, s) - x.a.at(nv, s) - to_rat_vec(z.at(nv, s));
    SolveOutcome<RatVec> sp = solve_coboundary(nv, rhs_p, Ring::Q, rat_vec_zero(x.n));
    if (!sp.ok) {
        res.obstruction_locus = "p";
        res.obstruction_q = sp;
        return res;
    }
    Cochain<RatVec> p = sp.solution;

    // constants of eps over Q/Z
    Cochain<Circle> rhs_c = zero_cochain(nv, 2, Circle());
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        int k = s[2];
        const SkewIntMat& Bp_jk = y.B.at(nv, jk);
        const SkewIntMat& C_k = C.at(nv, vtx(k));
        const IntVec& z_ij = z.at(nv, ij);
        rhs_c.at(nv, s) =
            x.tau.at(nv, s).constant - y.tau.at(nv, s).constant -
            Circle(dot(x.tau.at(nv, s).winding, p.at(nv, vtx(k)))) +
            Circle(bracket(to_rat_vec(x.m.at(nv, s)), C_k, p.at(nv, vtx(k)))) -
            Circle(bracket_low(x.a.at(nv, ik), C_k, x.m.at(nv, s))) -
            Circle(bracket_low(x.a.at(nv, ij), C_k, x.a.at(nv, jk))) -
            Circle(bracket_low(p.at(nv, vtx(s[0])), Bp_jk, y.a.at(nv, ij))) +
            Circle(bracket_low(p.at(nv, vtx(s[1])) + x.a.at(nv, ij), Bp_jk, z_ij)) +
            Circle(dot(z_hat.at(nv, ij), y.a.at(nv, jk))) -
            Circle(bracket(to_rat_vec(z_ij), Bp_jk, y.a.at(nv, jk))) +
            Circle(bracket_low(x.a.at(nv, ij), Bp_jk, p.at(nv, vtx(s[1]))));
    }
    SolveOutcome<Circle> sc = solve_coboundary(nv, rhs_c, Ring::Circle, Circle());
    if (!sc.ok) {
        res.obstruction_locus = "eps";
        res.obstruction_circle = sc;
        return res;
    }

    GaugeTB1 g{C, z, p, zero_cochain(nv, 1, AffChar::zero(x.n))};
    for (const Simplex& s : nv.simplices(1))
        g.eps.at(nv, s) = AffChar(sc.solution.at(nv, s), z_hat.at(nv, s));
    res.ok = true;
    res.gauge = g;
    return res;
}

}  // namespace tdc
