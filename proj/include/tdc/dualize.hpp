#pragma once

#include "tdc/maps.hpp"

namespace tdc {

// Record of the intermediate solves; serialized alongside results for audit.
struct DualizeTrace {
    Cochain<IntVec> m_hat;    // winding numbers of tau
    Cochain<RatVec> m_tilde;  // m_hat + B_jk a_ij
    Cochain<RatVec> a_hat;    // solved against -m_tilde
    Cochain<Rat> delta3;      // alternating sum of the lifted constants
    Cochain<Rat> omega;       // solved against -delta3
    Cochain<Circle> beta;     // lifted constants + omega
};

struct DualizeResult {
    bool ok = false;
    CocycleTDhalf dual;
    GaugeTB1 witness;  // relates the input to leftleg(dual)
    DualizeTrace trace;

    std::string obstruction_locus;  // "a_hat" | "omega" | "epsilon"
    SolveOutcome<RatVec> obstruction_vec;
    SolveOutcome<Rat> obstruction_rat;
    SolveOutcome<Circle> obstruction_circle;
};

// Builds a half-geometric pre-image of a TB1-cocycle and the equivalence
// witnessing that its left leg is the input:
//   (1) read off m_hat as the winding of tau,
//   (2) solve a_hat against the twisted cocycle m_hat + B_jk a_ij,
//   (3) solve omega against the coboundary of the lifted tau-constants and
//       set t = -omega + a.a_hat + m_hat.a,
//   (4) solve the residual constants for the witness over Q/Z.
// In the constant model the partition-of-unity steps become exact coboundary
// solves; when a solve fails on the nerve the obstruction is reported with
// its locus instead.
inline DualizeResult dualize(const CocycleTB1& x) {
    Report valid = validate(x);
    if (!valid.ok) throw std::invalid_argument("dualize: input invalid: " + valid.to_string());
    const Nerve& nv = x.nerve;
    const int n = x.n;
    DualizeResult res;

    // Step 1a: m_hat and the necessary integrality of its twisted class.
    res.trace.m_hat = zero_cochain(nv, 2, int_vec_zero(n));
    for (const Simplex& s : nv.simplices(2))
        res.trace.m_hat.at(nv, s) = x.tau.at(nv, s).winding;
    for (const Simplex& s : nv.simplices(3)) {
        IntVec lhs = res.trace.m_hat.at(nv, sub3(s, 0, 2, 3)) +
                     res.trace.m_hat.at(nv, sub3(s, 0, 1, 2)) +
                     x.B.at(nv, tri_edge(s, 2, 3)).mul(x.m.at(nv, sub3(s, 0, 1, 2)));
        IntVec rhs = res.trace.m_hat.at(nv, sub3(s, 0, 1, 3)) +
                     res.trace.m_hat.at(nv, sub3(s, 1, 2, 3));
        if (lhs != rhs) throw std::logic_error("dualize: winding class violates validity");
    }

    // Step 1b: a_hat from the twisted Z-class.
    res.trace.m_tilde = zero_cochain(nv, 2, rat_vec_zero(n));
    for (const Simplex& s : nv.simplices(2))
        res.trace.m_tilde.at(nv, s) =
            to_rat_vec(res.trace.m_hat.at(nv, s)) +
            x.B.at(nv, tri_edge(s, 1, 2)).mul(x.a.at(nv, tri_edge(s, 0, 1)));
    SolveOutcome<RatVec> sa =
        solve_coboundary(nv, cochain_neg(res.trace.m_tilde), Ring::Q, rat_vec_zero(n));
    if (!sa.ok) {
        res.obstruction_locus = "a_hat";
        res.obstruction_vec = sa;
        return res;
    }
    res.trace.a_hat = sa.solution;

    // Step 1c: omega from the lifted constants, then t.
    Cochain<Rat> lifted = zero_cochain(nv, 2, Rat(0));
    for (const Simplex& s : nv.simplices(2)) lifted.at(nv, s) = x.tau.at(nv, s).constant.v;
    res.trace.delta3 = coboundary(nv, lifted, Rat(0));
    SolveOutcome<Rat> so = solve_coboundary(nv, cochain_neg(res.trace.delta3), Ring::Q, Rat(0));
    if (!so.ok) {
        res.obstruction_locus = "omega";
        res.obstruction_rat = so;
        return res;
    }
    res.trace.omega = so.solution;

    CocycleTDhalf dual = zero_tdhalf(n, nv);
    dual.B = x.B;
    dual.a = x.a;
    dual.a_hat = res.trace.a_hat;
    dual.m = x.m;
    dual.m_hat = res.trace.m_hat;
    for (const Simplex& s : nv.simplices(2)) {
        dual.t.at(nv, s) = Circle(
            -res.trace.omega.at(nv, s) +
            dot(x.a.at(nv, tri_edge(s, 0, 1)), res.trace.a_hat.at(nv, tri_edge(s, 1, 2))) +
            dot(res.trace.m_hat.at(nv, s), x.a.at(nv, tri_edge(s, 0, 2))));
    }
    Report dv = validate(dual);
    if (!dv.ok) throw std::logic_error("dualize: candidate fails validation: " + dv.to_string());

    // Step 2: witness. The left-leg tau' has constants -omega, so the
    // difference tau - tau' has zero winding and constants lifted + omega.
    res.trace.beta = zero_cochain(nv, 2, Circle());
    for (const Simplex& s : nv.simplices(2))
        res.trace.beta.at(nv, s) = Circle(lifted.at(nv, s) + res.trace.omega.at(nv, s));
    SolveOutcome<Circle> se = solve_coboundary(nv, res.trace.beta, Ring::Circle, Circle());
    if (!se.ok) {
        res.obstruction_locus = "epsilon";
        res.obstruction_circle = se;
        return res;
    }
    GaugeTB1 witness = zero_gauge_tb1(n, nv);
    for (const Simplex& s : nv.simplices(1))
        witness.eps.at(nv, s) = AffChar(se.solution.at(nv, s), int_vec_zero(n));

    CocycleTB1 ll = leftleg(dual);
    Report vr = verify_gauge(x, ll, witness);
    if (!vr.ok) throw std::logic_error("dualize: witness fails verification: " + vr.to_string());

    res.ok = true;
    res.dual = dual;
    res.witness = witness;
    return res;
}

inline Report roundtrip_check(const CocycleTB1& x) {
    DualizeResult d = dualize(x);
    if (!d.ok) return Report::fail("obstruction", {}, d.obstruction_locus);
    CocycleTB1 ll = leftleg(d.dual);
    Report dv = validate(d.dual);
    if (!dv.ok) return dv;
    return verify_gauge(x, ll, d.witness);
}

// B = 0 specialization: the same construction lands in TD-cocycles.
struct DualizeResultTD {
    bool ok = false;
    CocycleTD dual;
    GaugeTB1 witness;
    std::string obstruction_locus;
};

inline DualizeResultTD dualize(const CocycleTB2R& x) {
    DualizeResult d = dualize(i_push(x));
    DualizeResultTD r;
    r.witness = d.witness;
    r.obstruction_locus = d.obstruction_locus;
    if (!d.ok) return r;
    for (const auto& b : d.dual.B.vals)
        if (!b.is_zero()) throw std::logic_error("dualize: B = 0 not preserved");
    r.dual = CocycleTD{d.dual.n, d.dual.nerve, d.dual.a, d.dual.a_hat,
                       d.dual.m, d.dual.m_hat, d.dual.t};
    Report dv = validate(r.dual);
    if (!dv.ok) throw std::logic_error("dualize: TD candidate fails validation");
    r.ok = true;
    return r;
}

// ---------------------------------------------------------------------------
// Step 3: lift a gauge between left legs to a gauge upstairs.
// ---------------------------------------------------------------------------

struct LiftGaugeResult {
    bool ok = false;
    GaugeTDhalf gauge;
    std::string obstruction_locus;  // "p_hat" | "e"
    SolveOutcome<RatVec> obstruction_vec;
    SolveOutcome<Circle> obstruction_circle;
};

// Given TDhalf cocycles x, y and a TB1-gauge g between their left legs,
// produce a TDhalf-gauge from x to y: z_hat is the winding of eps, p_hat
// solves the R^n-cocycle beta, and e solves the rearranged t-equation; C, z,
// p are taken from g unchanged.
inline LiftGaugeResult lift_gauge(const CocycleTDhalf& x, const CocycleTDhalf& y,
                                  const GaugeTB1& g) {
    Report pre = verify_gauge(leftleg(x), leftleg(y), g);
    if (!pre.ok)
        throw std::invalid_argument("lift_gauge: left-leg gauge fails: " + pre.to_string());
    const Nerve& nv = x.nerve;
    Cochain<IntVec> z_hat = zero_cochain(nv, 1, int_vec_zero(x.n));
    for (const Simplex& s : nv.simplices(1)) z_hat.at(nv, s) = g.eps.at(nv, s).winding;

    GaugeSolveTDhalf fin = finish_gauge_tdhalf(x, y, g.C, g.z, z_hat, g.p);
    LiftGaugeResult res;
    if (!fin.ok) {
        res.obstruction_locus = fin.obstruction_locus;
        res.obstruction_vec = fin.obstruction_q;
        res.obstruction_circle = fin.obstruction_circle;
        return res;
    }
    Report vr = verify_gauge(x, y, fin.gauge);
    if (!vr.ok) throw std::logic_error("lift_gauge: lifted gauge fails: " + vr.to_string());
    res.ok = true;
    res.gauge = fin.gauge;
    return res;
}

}  // namespace tdc
