#pragma once

#include <sstream>
#include <string>

#include "tdc/nerve.hpp"
#include "tdc/solve.hpp"

namespace tdc {

struct Report {
    bool ok = true;
    std::string equation;  // condition code, e.g. "coc:TFgeo:4"
    Simplex where;
    std::string message;

    static Report pass() { return {}; }
    static Report fail(std::string eq, Simplex s, std::string msg = "") {
        return {false, std::move(eq), std::move(s), std::move(msg)};
    }

    std::string to_string() const {
        if (ok) return "OK";
        std::ostringstream os;
        os << "FAIL " << equation << " at (";
        for (std::size_t i = 0; i < where.size(); ++i) os << (i ? "," : "") << where[i];
        os << ")";
        if (!message.empty()) os << ": " << message;
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// Typed cocycles
// ---------------------------------------------------------------------------

struct CocycleTB2 {
    int n = 1;
    Nerve nerve;
    Cochain<RatVec> g;     // degree 1, T^n represented by [0,1) vectors
    Cochain<AffChar> tau;  // degree 2
};

struct CocycleTB2R {
    int n = 1;
    Nerve nerve;
    Cochain<RatVec> a;     // degree 1
    Cochain<IntVec> m;     // degree 2
    Cochain<AffChar> tau;  // degree 2
};

struct CocycleTB1 {
    int n = 1;
    Nerve nerve;
    Cochain<SkewIntMat> B;  // degree 1
    Cochain<RatVec> a;
    Cochain<IntVec> m;
    Cochain<AffChar> tau;
};

struct CocycleTD {
    int n = 1;
    Nerve nerve;
    Cochain<RatVec> a, a_hat;    // degree 1
    Cochain<IntVec> m, m_hat;    // degree 2
    Cochain<Circle> t;           // degree 2
};

struct CocycleTDhalf {
    int n = 1;
    Nerve nerve;
    Cochain<SkewIntMat> B;  // degree 1
    Cochain<RatVec> a, a_hat;
    Cochain<IntVec> m, m_hat;
    Cochain<Circle> t;
};

// so(n,Z)-valued 1-cocycle (the "non-geometric gluing" datum on its own).
struct CocycleSO {
    int n = 1;
    Nerve nerve;
    Cochain<SkewIntMat> B;  // degree 1
};

template <class T>
Cochain<T> zero_cochain(const Nerve& nv, int deg, const T& zero) {
    return Cochain<T>::zero_like(nv, deg, zero);
}

inline CocycleTB2R zero_tb2r(int n, const Nerve& nv) {
    return {n, nv, zero_cochain(nv, 1, rat_vec_zero(n)), zero_cochain(nv, 2, int_vec_zero(n)),
            zero_cochain(nv, 2, AffChar::zero(n))};
}
inline CocycleTB1 zero_tb1(int n, const Nerve& nv) {
    return {n, nv, zero_cochain(nv, 1, SkewIntMat::zero(n)), zero_cochain(nv, 1, rat_vec_zero(n)),
            zero_cochain(nv, 2, int_vec_zero(n)), zero_cochain(nv, 2, AffChar::zero(n))};
}
inline CocycleTD zero_td(int n, const Nerve& nv) {
    return {n,  nv, zero_cochain(nv, 1, rat_vec_zero(n)), zero_cochain(nv, 1, rat_vec_zero(n)),
            zero_cochain(nv, 2, int_vec_zero(n)), zero_cochain(nv, 2, int_vec_zero(n)),
            zero_cochain(nv, 2, Circle())};
}
inline CocycleTDhalf zero_tdhalf(int n, const Nerve& nv) {
    return {n,
            nv,
            zero_cochain(nv, 1, SkewIntMat::zero(n)),
            zero_cochain(nv, 1, rat_vec_zero(n)),
            zero_cochain(nv, 1, rat_vec_zero(n)),
            zero_cochain(nv, 2, int_vec_zero(n)),
            zero_cochain(nv, 2, int_vec_zero(n)),
            zero_cochain(nv, 2, Circle())};
}

inline bool operator==(const CocycleTB2R& x, const CocycleTB2R& y) {
    return x.n == y.n && x.nerve.same_as(y.nerve) && x.a == y.a && x.m == y.m && x.tau == y.tau;
}
inline bool operator==(const CocycleTB1& x, const CocycleTB1& y) {
    return x.n == y.n && x.nerve.same_as(y.nerve) && x.B == y.B && x.a == y.a && x.m == y.m &&
           x.tau == y.tau;
}
inline bool operator==(const CocycleTD& x, const CocycleTD& y) {
    return x.n == y.n && x.nerve.same_as(y.nerve) && x.a == y.a && x.a_hat == y.a_hat &&
           x.m == y.m && x.m_hat == y.m_hat && x.t == y.t;
}
inline bool operator==(const CocycleTDhalf& x, const CocycleTDhalf& y) {
    return x.n == y.n && x.nerve.same_as(y.nerve) && x.B == y.B && x.a == y.a &&
           x.a_hat == y.a_hat && x.m == y.m && x.m_hat == y.m_hat && x.t == y.t;
}

// ---------------------------------------------------------------------------
// Validators. Conditions are swept per-triangle first, then per-tetrahedron,
// each in displayed order; the first failing (tuple, equation) is reported.
// ---------------------------------------------------------------------------

inline Simplex tri_edge(const Simplex& s, int a, int b) { return {s[a], s[b]}; }
inline Simplex sub3(const Simplex& s, int a, int b, int c) { return {s[a], s[b], s[c]}; }

inline Report validate(const CocycleTB2& x) {
    for (const Simplex& s : x.nerve.simplices(2)) {
        RatVec lhs = x.g.at(x.nerve, tri_edge(s, 0, 2));
        RatVec rhs = x.g.at(x.nerve, tri_edge(s, 1, 2)) + x.g.at(x.nerve, tri_edge(s, 0, 1));
        if (mod1(lhs) != mod1(rhs)) return Report::fail("coc:F2:1", s);
    }
    for (const Simplex& s : x.nerve.simplices(3)) {
        const AffChar& t_ijk = x.tau.at(x.nerve, sub3(s, 0, 1, 2));
        const AffChar& t_ijl = x.tau.at(x.nerve, sub3(s, 0, 1, 3));
        const AffChar& t_ikl = x.tau.at(x.nerve, sub3(s, 0, 2, 3));
        const AffChar& t_jkl = x.tau.at(x.nerve, sub3(s, 1, 2, 3));
        const RatVec& g_kl = x.g.at(x.nerve, tri_edge(s, 2, 3));
        if (t_ikl + aff_translate(g_kl, t_ijk) != t_ijl + t_jkl) return Report::fail("coc:F2:2", s);
    }
    return Report::pass();
}

inline Report validate(const CocycleTB2R& x) {
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(2)) {
        RatVec lhs = x.a.at(nv, tri_edge(s, 0, 2));
        RatVec rhs = x.a.at(nv, tri_edge(s, 1, 2)) + x.a.at(nv, tri_edge(s, 0, 1)) +
                     to_rat_vec(x.m.at(nv, s));
        if (lhs != rhs) return Report::fail("coc:F2R:1", s);
    }
    for (const Simplex& s : nv.simplices(3)) {
        const AffChar& t_ijk = x.tau.at(nv, sub3(s, 0, 1, 2));
        const AffChar& t_ijl = x.tau.at(nv, sub3(s, 0, 1, 3));
        const AffChar& t_ikl = x.tau.at(nv, sub3(s, 0, 2, 3));
        const AffChar& t_jkl = x.tau.at(nv, sub3(s, 1, 2, 3));
        const RatVec& a_kl = x.a.at(nv, tri_edge(s, 2, 3));
        if (t_ikl + aff_translate(a_kl, t_ijk) != t_ijl + t_jkl)
            return Report::fail("coc:F2R:2", s);
        IntVec lm = x.m.at(nv, sub3(s, 0, 2, 3)) + x.m.at(nv, sub3(s, 0, 1, 2));
        IntVec rm = x.m.at(nv, sub3(s, 0, 1, 3)) + x.m.at(nv, sub3(s, 1, 2, 3));
        if (lm != rm) return Report::fail("coc:F2R:3", s);
    }
    return Report::pass();
}

inline Report validate(const CocycleTB1& x) {
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(2)) {
        SkewIntMat lb = x.B.at(nv, tri_edge(s, 0, 2));
        SkewIntMat rb = x.B.at(nv, tri_edge(s, 1, 2)) + x.B.at(nv, tri_edge(s, 0, 1));
        if (lb != rb) return Report::fail("coc:F1:1", s);
        RatVec la = x.a.at(nv, tri_edge(s, 0, 2));
        RatVec ra = x.a.at(nv, tri_edge(s, 1, 2)) + x.a.at(nv, tri_edge(s, 0, 1)) +
                    to_rat_vec(x.m.at(nv, s));
        if (la != ra) return Report::fail("coc:F1:2", s);
    }
    for (const Simplex& s : nv.simplices(3)) {
        const AffChar& t_ijk = x.tau.at(nv, sub3(s, 0, 1, 2));
        const AffChar& t_ijl = x.tau.at(nv, sub3(s, 0, 1, 3));
        const AffChar& t_ikl = x.tau.at(nv, sub3(s, 0, 2, 3));
        const AffChar& t_jkl = x.tau.at(nv, sub3(s, 1, 2, 3));
        const RatVec& a_kl = x.a.at(nv, tri_edge(s, 2, 3));
        const RatVec& a_ik = x.a.at(nv, tri_edge(s, 0, 2));
        const RatVec& a_ij = x.a.at(nv, tri_edge(s, 0, 1));
        const RatVec& a_jk = x.a.at(nv, tri_edge(s, 1, 2));
        const IntVec& m_ijk = x.m.at(nv, sub3(s, 0, 1, 2));
        const SkewIntMat& B_kl = x.B.at(nv, tri_edge(s, 2, 3));
        AffChar lhs =
            t_ikl + aff_translate(a_kl, t_ijk) - aff_translate(a_kl, aff_of_bra(m_ijk, B_kl));
        AffChar rhs = AffChar::constant_char(bracket_low(a_ik, B_kl, m_ijk), x.n) +
                      AffChar::constant_char(bracket_low(a_ij, B_kl, a_jk), x.n) + t_ijl + t_jkl;
        if (lhs != rhs) return Report::fail("coc:F1:3", s);
        IntVec lm = x.m.at(nv, sub3(s, 0, 2, 3)) + x.m.at(nv, sub3(s, 0, 1, 2));
        IntVec rm = x.m.at(nv, sub3(s, 0, 1, 3)) + x.m.at(nv, sub3(s, 1, 2, 3));
        if (lm != rm) return Report::fail("coc:F1:5", s);
    }
    return Report::pass();
}

inline Report validate(const CocycleTD& x) {
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(2)) {
        RatVec la = x.a.at(nv, tri_edge(s, 0, 2));
        RatVec ra = to_rat_vec(x.m.at(nv, s)) + x.a.at(nv, tri_edge(s, 1, 2)) +
                    x.a.at(nv, tri_edge(s, 0, 1));
        if (la != ra) return Report::fail("coc:TD:1", s);
        RatVec lah = x.a_hat.at(nv, tri_edge(s, 0, 2));
        RatVec rah = to_rat_vec(x.m_hat.at(nv, s)) + x.a_hat.at(nv, tri_edge(s, 1, 2)) +
                     x.a_hat.at(nv, tri_edge(s, 0, 1));
        if (lah != rah) return Report::fail("coc:TD:2", s);
    }
    for (const Simplex& s : nv.simplices(3)) {
        IntVec lm = x.m.at(nv, sub3(s, 0, 2, 3)) + x.m.at(nv, sub3(s, 0, 1, 2));
        IntVec rm = x.m.at(nv, sub3(s, 0, 1, 3)) + x.m.at(nv, sub3(s, 1, 2, 3));
        if (lm != rm) return Report::fail("coc:TD:3", s);
        IntVec lmh = x.m_hat.at(nv, sub3(s, 0, 2, 3)) + x.m_hat.at(nv, sub3(s, 0, 1, 2));
        IntVec rmh = x.m_hat.at(nv, sub3(s, 0, 1, 3)) + x.m_hat.at(nv, sub3(s, 1, 2, 3));
        if (lmh != rmh) return Report::fail("coc:TD:4", s);
        Circle lt = x.t.at(nv, sub3(s, 0, 2, 3)) + x.t.at(nv, sub3(s, 0, 1, 2)) -
                    Circle(dot(x.m.at(nv, sub3(s, 0, 1, 2)), x.a_hat.at(nv, tri_edge(s, 2, 3))));
        Circle rt = x.t.at(nv, sub3(s, 0, 1, 3)) + x.t.at(nv, sub3(s, 1, 2, 3));
        if (lt != rt) return Report::fail("coc:TD:5", s);
    }
    return Report::pass();
}

inline Report validate(const CocycleTDhalf& x) {
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(2)) {
        SkewIntMat lb = x.B.at(nv, tri_edge(s, 0, 2));
        SkewIntMat rb = x.B.at(nv, tri_edge(s, 1, 2)) + x.B.at(nv, tri_edge(s, 0, 1));
        if (lb != rb) return Report::fail("coc:TFgeo:1", s);
        RatVec la = x.a.at(nv, tri_edge(s, 0, 2));
        RatVec ra = to_rat_vec(x.m.at(nv, s)) + x.a.at(nv, tri_edge(s, 1, 2)) +
                    x.a.at(nv, tri_edge(s, 0, 1));
        if (la != ra) return Report::fail("coc:TFgeo:2", s);
        RatVec lah = x.a_hat.at(nv, tri_edge(s, 0, 2));
        RatVec rah = to_rat_vec(x.m_hat.at(nv, s)) + x.a_hat.at(nv, tri_edge(s, 1, 2)) +
                     x.a_hat.at(nv, tri_edge(s, 0, 1)) +
                     x.B.at(nv, tri_edge(s, 1, 2)).mul(x.a.at(nv, tri_edge(s, 0, 1)));
        if (lah != rah) return Report::fail("coc:TFgeo:3", s);
    }
    for (const Simplex& s : nv.simplices(3)) {
        const IntVec& m_ijk = x.m.at(nv, sub3(s, 0, 1, 2));
        const SkewIntMat& B_kl = x.B.at(nv, tri_edge(s, 2, 3));
        Circle lt = x.t.at(nv, sub3(s, 0, 2, 3)) + x.t.at(nv, sub3(s, 0, 1, 2));
        Circle rt = Circle(dot(x.a_hat.at(nv, tri_edge(s, 2, 3)), m_ijk)) +
                    Circle(bracket_low(m_ijk, B_kl, x.a.at(nv, tri_edge(s, 0, 2)))) +
                    Circle(bracket_low(x.a.at(nv, tri_edge(s, 1, 2)), B_kl,
                                       x.a.at(nv, tri_edge(s, 0, 1)))) +
                    x.t.at(nv, sub3(s, 0, 1, 3)) + x.t.at(nv, sub3(s, 1, 2, 3));
        if (lt != rt) return Report::fail("coc:TFgeo:4", s);
        IntVec lmh = x.m_hat.at(nv, sub3(s, 0, 2, 3)) + x.m_hat.at(nv, sub3(s, 0, 1, 2)) +
                     B_kl.mul(m_ijk);
        IntVec rmh = x.m_hat.at(nv, sub3(s, 0, 1, 3)) + x.m_hat.at(nv, sub3(s, 1, 2, 3));
        if (lmh != rmh) return Report::fail("coc:TFgeo:5", s);
    }
    return Report::pass();
}

inline Report validate(const CocycleSO& x) {
    const Nerve& nv = x.nerve;
    for (const Simplex& s : nv.simplices(2)) {
        SkewIntMat lb = x.B.at(nv, tri_edge(s, 0, 2));
        SkewIntMat rb = x.B.at(nv, tri_edge(s, 1, 2)) + x.B.at(nv, tri_edge(s, 0, 1));
        if (lb != rb) return Report::fail("coc:SO:1", s);
    }
    return Report::pass();
}

// ---------------------------------------------------------------------------
// Gauges (equivalence data)
// ---------------------------------------------------------------------------

struct GaugeTB1 {
    Cochain<SkewIntMat> C;  // degree 0
    Cochain<IntVec> z;      // degree 1
    Cochain<RatVec> p;      // degree 0
    Cochain<AffChar> eps;   // degree 1
};

struct GaugeTDhalf {
    Cochain<SkewIntMat> C;          // degree 0
    Cochain<IntVec> z, z_hat;       // degree 1
    Cochain<RatVec> p, p_hat;       // degree 0
    Cochain<Circle> e;              // degree 1
};

inline GaugeTB1 zero_gauge_tb1(int n, const Nerve& nv) {
    return {zero_cochain(nv, 0, SkewIntMat::zero(n)), zero_cochain(nv, 1, int_vec_zero(n)),
            zero_cochain(nv, 0, rat_vec_zero(n)), zero_cochain(nv, 1, AffChar::zero(n))};
}
inline GaugeTDhalf zero_gauge_tdhalf(int n, const Nerve& nv) {
    return {zero_cochain(nv, 0, SkewIntMat::zero(n)), zero_cochain(nv, 1, int_vec_zero(n)),
            zero_cochain(nv, 1, int_vec_zero(n)),     zero_cochain(nv, 0, rat_vec_zero(n)),
            zero_cochain(nv, 0, rat_vec_zero(n)),     zero_cochain(nv, 1, Circle())};
}

inline Simplex vtx(int i) { return {i}; }

// verify_gauge(x, y, g): checks that g exhibits y as equivalent to x, the
// primed cocycle of the displayed equations being y.
inline Report verify_gauge(const CocycleTB1& x, const CocycleTB1& y, const GaugeTB1& g) {
    const Nerve& nv = x.nerve;
    if (!nv.same_as(y.nerve) || x.n != y.n) return Report::fail("shape", {}, "nerve/n mismatch");
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        SkewIntMat lb = g.C.at(nv, vtx(j)) + x.B.at(nv, s);
        SkewIntMat rb = y.B.at(nv, s) + g.C.at(nv, vtx(i));
        if (lb != rb) return Report::fail("coc:F1:6", s);
        RatVec la = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s);
        RatVec ra = y.a.at(nv, s) + g.p.at(nv, vtx(i));
        if (la != ra) return Report::fail("coc:F1:7", s);
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        int i = s[0], k = s[2];
        (void)i;
        IntVec lm = y.m.at(nv, s) + g.z.at(nv, ij) + g.z.at(nv, jk);
        IntVec rm = g.z.at(nv, ik) + x.m.at(nv, s);
        if (lm != rm) return Report::fail("coc:F1:9", s);

        const SkewIntMat& Bp_jk = y.B.at(nv, jk);
        const SkewIntMat& C_k = g.C.at(nv, vtx(k));
        const RatVec& p_i = g.p.at(nv, vtx(s[0]));
        const RatVec& p_j = g.p.at(nv, vtx(s[1]));
        const RatVec& p_k = g.p.at(nv, vtx(k));
        const IntVec& z_ij = g.z.at(nv, ij);
        AffChar lhs = y.tau.at(nv, s) +
                      AffChar::constant_char(bracket_low(p_i, Bp_jk, y.a.at(nv, ij)), x.n) -
                      AffChar::constant_char(
                          bracket_low(p_j + x.a.at(nv, ij), Bp_jk, z_ij), x.n) +
                      aff_translate(y.a.at(nv, jk), g.eps.at(nv, ij)) -
                      aff_translate(y.a.at(nv, jk), aff_of_bra(z_ij, Bp_jk)) -
                      AffChar::constant_char(bracket_low(x.a.at(nv, ij), Bp_jk, p_j), x.n) +
                      g.eps.at(nv, jk);
        AffChar rhs = g.eps.at(nv, ik) -
                      AffChar::constant_char(
                          bracket_low(x.a.at(nv, ik), C_k, x.m.at(nv, s)), x.n) +
                      aff_translate(p_k, x.tau.at(nv, s)) -
                      aff_translate(p_k, aff_of_bra(x.m.at(nv, s), C_k)) -
                      AffChar::constant_char(
                          bracket_low(x.a.at(nv, ij), C_k, x.a.at(nv, jk)), x.n);
        if (lhs != rhs) return Report::fail("coc:F1:8", s);
    }
    return Report::pass();
}

inline Report verify_gauge(const CocycleTB2R& x, const CocycleTB2R& y, const GaugeTB1& g) {
    const Nerve& nv = x.nerve;
    for (const auto& c : g.C.vals)
        if (!c.is_zero()) return Report::fail("shape", {}, "TB2R gauge must have C = 0");
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        RatVec la = y.a.at(nv, s) + g.p.at(nv, vtx(i));
        RatVec ra = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s);
        if (la != ra) return Report::fail("coc:F2R:4", s);
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        IntVec lm = y.m.at(nv, s) + g.z.at(nv, ij) + g.z.at(nv, jk);
        IntVec rm = g.z.at(nv, ik) + x.m.at(nv, s);
        if (lm != rm) return Report::fail("coc:F2R:6", s);
        AffChar lhs = y.tau.at(nv, s) + aff_translate(y.a.at(nv, jk), g.eps.at(nv, ij)) +
                      g.eps.at(nv, jk);
        AffChar rhs = g.eps.at(nv, ik) +
                      aff_translate(g.p.at(nv, vtx(s[2])), x.tau.at(nv, s));
        if (lhs != rhs) return Report::fail("coc:F2R:5", s);
    }
    return Report::pass();
}

inline Report verify_gauge(const CocycleTDhalf& x, const CocycleTDhalf& y, const GaugeTDhalf& g) {
    const Nerve& nv = x.nerve;
    if (!nv.same_as(y.nerve) || x.n != y.n) return Report::fail("shape", {}, "nerve/n mismatch");
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        SkewIntMat lb = g.C.at(nv, vtx(j)) + x.B.at(nv, s);
        SkewIntMat rb = y.B.at(nv, s) + g.C.at(nv, vtx(i));
        if (lb != rb) return Report::fail("coc:TFgeo:6", s);
        RatVec la = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s);
        RatVec ra = y.a.at(nv, s) + g.p.at(nv, vtx(i));
        if (la != ra) return Report::fail("coc:TFgeo:7", s);
        RatVec lah = to_rat_vec(g.z_hat.at(nv, s)) + g.p_hat.at(nv, vtx(j)) +
                     g.C.at(nv, vtx(j)).mul(x.a.at(nv, s)) + x.a_hat.at(nv, s);
        RatVec rah = y.a_hat.at(nv, s) + y.B.at(nv, s).mul(g.p.at(nv, vtx(i))) +
                     g.p_hat.at(nv, vtx(i));
        if (lah != rah) return Report::fail("coc:TFgeo:8", s);
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        int k = s[2];
        IntVec lm = y.m.at(nv, s) + g.z.at(nv, ij) + g.z.at(nv, jk);
        IntVec rm = g.z.at(nv, ik) + x.m.at(nv, s);
        if (lm != rm) return Report::fail("re:coc:TFgeo:7", s);
        IntVec lmh = y.m_hat.at(nv, s) + g.z_hat.at(nv, ij) + g.z_hat.at(nv, jk) +
                     y.B.at(nv, jk).mul(g.z.at(nv, ij));
        IntVec rmh = x.m_hat.at(nv, s) + g.z_hat.at(nv, ik) +
                     g.C.at(nv, vtx(k)).mul(x.m.at(nv, s));
        if (lmh != rmh) return Report::fail("re:coc:TFgeo:8", s);

        const SkewIntMat& Bp_jk = y.B.at(nv, jk);
        const SkewIntMat& C_k = g.C.at(nv, vtx(k));
        Circle lhs = y.t.at(nv, s) +
                     Circle(bracket_low(y.a.at(nv, ij), Bp_jk, g.p.at(nv, vtx(s[0])))) -
                     Circle(bracket_low(to_rat_vec(g.z.at(nv, ij)), Bp_jk,
                                        g.p.at(nv, vtx(s[1])) + x.a.at(nv, ij))) +
                     g.e.at(nv, ij) - Circle(dot(y.a_hat.at(nv, jk), g.z.at(nv, ij))) -
                     Circle(bracket_low(g.p.at(nv, vtx(s[1])), Bp_jk, x.a.at(nv, ij))) +
                     g.e.at(nv, jk);
        Circle rhs = g.e.at(nv, ik) -
                     Circle(bracket_low(to_rat_vec(x.m.at(nv, s)), C_k, x.a.at(nv, ik))) +
                     x.t.at(nv, s) - Circle(dot(g.p_hat.at(nv, vtx(k)), x.m.at(nv, s))) -
                     Circle(bracket_low(x.a.at(nv, jk), C_k, x.a.at(nv, ij)));
        if (lhs != rhs) return Report::fail("coc:TFgeo:9", s);
    }
    return Report::pass();
}

inline Report verify_gauge(const CocycleTD& x, const CocycleTD& y, const GaugeTDhalf& g) {
    const Nerve& nv = x.nerve;
    for (const auto& c : g.C.vals)
        if (!c.is_zero()) return Report::fail("shape", {}, "TD gauge must have C = 0");
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        RatVec la = y.a.at(nv, s) + g.p.at(nv, vtx(i));
        RatVec ra = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s);
        if (la != ra) return Report::fail("coc:TD:6", s);
        RatVec lah = y.a_hat.at(nv, s) + g.p_hat.at(nv, vtx(i));
        RatVec rah = to_rat_vec(g.z_hat.at(nv, s)) + g.p_hat.at(nv, vtx(j)) + x.a_hat.at(nv, s);
        if (lah != rah) return Report::fail("coc:TD:7", s);
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        IntVec lm = y.m.at(nv, s) + g.z.at(nv, ij) + g.z.at(nv, jk);
        IntVec rm = g.z.at(nv, ik) + x.m.at(nv, s);
        if (lm != rm) return Report::fail("coc:TD:8", s);
        IntVec lmh = y.m_hat.at(nv, s) + g.z_hat.at(nv, ij) + g.z_hat.at(nv, jk);
        IntVec rmh = g.z_hat.at(nv, ik) + x.m_hat.at(nv, s);
        if (lmh != rmh) return Report::fail("coc:TD:9", s);
        Circle lhs = y.t.at(nv, s) + g.e.at(nv, ij) -
                     Circle(dot(y.a_hat.at(nv, jk), g.z.at(nv, ij))) + g.e.at(nv, jk);
        Circle rhs = g.e.at(nv, ik) + x.t.at(nv, s) -
                     Circle(dot(g.p_hat.at(nv, vtx(s[2])), x.m.at(nv, s)));
        if (lhs != rhs) return Report::fail("coc:TD:10", s);
    }
    return Report::pass();
}

// ---------------------------------------------------------------------------
// apply_gauge: the equivalence equations determine the primed cocycle
// uniquely from (x, g); the result always validates.
// ---------------------------------------------------------------------------

inline IntVec to_int_vec_checked(const RatVec& v, const char* what) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integer(v[i])) throw std::invalid_argument(std::string("non-integer ") + what);
        r[i] = v[i].get_num();
    }
    return r;
}

inline CocycleTDhalf apply_gauge(const CocycleTDhalf& x, const GaugeTDhalf& g) {
    const Nerve& nv = x.nerve;
    CocycleTDhalf y = zero_tdhalf(x.n, nv);
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        y.B.at(nv, s) = g.C.at(nv, vtx(j)) + x.B.at(nv, s) - g.C.at(nv, vtx(i));
        y.a.at(nv, s) = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s) -
                        g.p.at(nv, vtx(i));
        y.a_hat.at(nv, s) = to_rat_vec(g.z_hat.at(nv, s)) + g.p_hat.at(nv, vtx(j)) +
                            g.C.at(nv, vtx(j)).mul(x.a.at(nv, s)) + x.a_hat.at(nv, s) -
                            y.B.at(nv, s).mul(g.p.at(nv, vtx(i))) - g.p_hat.at(nv, vtx(i));
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        int k = s[2];
        y.m.at(nv, s) = to_int_vec_checked(
            y.a.at(nv, ik) - y.a.at(nv, jk) - y.a.at(nv, ij), "m'");
        y.m_hat.at(nv, s) = to_int_vec_checked(
            y.a_hat.at(nv, ik) - y.a_hat.at(nv, jk) - y.a_hat.at(nv, ij) -
                y.B.at(nv, jk).mul(y.a.at(nv, ij)),
            "m_hat'");
        const SkewIntMat& Bp_jk = y.B.at(nv, jk);
        const SkewIntMat& C_k = g.C.at(nv, vtx(k));
        y.t.at(nv, s) =
            g.e.at(nv, ik) -
            Circle(bracket_low(to_rat_vec(x.m.at(nv, s)), C_k, x.a.at(nv, ik))) + x.t.at(nv, s) -
            Circle(dot(g.p_hat.at(nv, vtx(k)), x.m.at(nv, s))) -
            Circle(bracket_low(x.a.at(nv, jk), C_k, x.a.at(nv, ij))) -
            Circle(bracket_low(y.a.at(nv, ij), Bp_jk, g.p.at(nv, vtx(s[0])))) +
            Circle(bracket_low(to_rat_vec(g.z.at(nv, ij)), Bp_jk,
                               g.p.at(nv, vtx(s[1])) + x.a.at(nv, ij))) -
            g.e.at(nv, ij) + Circle(dot(y.a_hat.at(nv, jk), g.z.at(nv, ij))) +
            Circle(bracket_low(g.p.at(nv, vtx(s[1])), Bp_jk, x.a.at(nv, ij))) - g.e.at(nv, jk);
    }
    return y;
}

inline CocycleTB1 apply_gauge(const CocycleTB1& x, const GaugeTB1& g) {
    const Nerve& nv = x.nerve;
    CocycleTB1 y = zero_tb1(x.n, nv);
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        y.B.at(nv, s) = g.C.at(nv, vtx(j)) + x.B.at(nv, s) - g.C.at(nv, vtx(i));
        y.a.at(nv, s) = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s) -
                        g.p.at(nv, vtx(i));
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        int k = s[2];
        y.m.at(nv, s) = to_int_vec_checked(
            y.a.at(nv, ik) - y.a.at(nv, jk) - y.a.at(nv, ij), "m'");
        const SkewIntMat& Bp_jk = y.B.at(nv, jk);
        const SkewIntMat& C_k = g.C.at(nv, vtx(k));
        const IntVec& z_ij = g.z.at(nv, ij);
        y.tau.at(nv, s) =
            g.eps.at(nv, ik) -
            AffChar::constant_char(bracket_low(x.a.at(nv, ik), C_k, x.m.at(nv, s)), x.n) +
            aff_translate(g.p.at(nv, vtx(k)), x.tau.at(nv, s)) -
            aff_translate(g.p.at(nv, vtx(k)), aff_of_bra(x.m.at(nv, s), C_k)) -
            AffChar::constant_char(bracket_low(x.a.at(nv, ij), C_k, x.a.at(nv, jk)), x.n) -
            AffChar::constant_char(bracket_low(g.p.at(nv, vtx(s[0])), Bp_jk, y.a.at(nv, ij)),
                                   x.n) +
            AffChar::constant_char(
                bracket_low(g.p.at(nv, vtx(s[1])) + x.a.at(nv, ij), Bp_jk, z_ij), x.n) -
            aff_translate(y.a.at(nv, jk), g.eps.at(nv, ij)) +
            aff_translate(y.a.at(nv, jk), aff_of_bra(z_ij, Bp_jk)) +
            AffChar::constant_char(bracket_low(x.a.at(nv, ij), Bp_jk, g.p.at(nv, vtx(s[1]))),
                                   x.n) -
            g.eps.at(nv, jk);
    }
    return y;
}

inline CocycleTD apply_gauge(const CocycleTD& x, const GaugeTDhalf& g) {
    const Nerve& nv = x.nerve;
    CocycleTD y = zero_td(x.n, nv);
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        y.a.at(nv, s) = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s) -
                        g.p.at(nv, vtx(i));
        y.a_hat.at(nv, s) = to_rat_vec(g.z_hat.at(nv, s)) + g.p_hat.at(nv, vtx(j)) +
                            x.a_hat.at(nv, s) - g.p_hat.at(nv, vtx(i));
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        y.m.at(nv, s) = to_int_vec_checked(
            y.a.at(nv, ik) - y.a.at(nv, jk) - y.a.at(nv, ij), "m'");
        y.m_hat.at(nv, s) = to_int_vec_checked(
            y.a_hat.at(nv, ik) - y.a_hat.at(nv, jk) - y.a_hat.at(nv, ij), "m_hat'");
        y.t.at(nv, s) = g.e.at(nv, ik) + x.t.at(nv, s) -
                        Circle(dot(g.p_hat.at(nv, vtx(s[2])), x.m.at(nv, s))) - g.e.at(nv, ij) +
                        Circle(dot(y.a_hat.at(nv, jk), g.z.at(nv, ij))) - g.e.at(nv, jk);
    }
    return y;
}

inline CocycleTB2R apply_gauge(const CocycleTB2R& x, const GaugeTB1& g) {
    const Nerve& nv = x.nerve;
    CocycleTB2R y = zero_tb2r(x.n, nv);
    for (const Simplex& s : nv.simplices(1)) {
        int i = s[0], j = s[1];
        y.a.at(nv, s) = to_rat_vec(g.z.at(nv, s)) + g.p.at(nv, vtx(j)) + x.a.at(nv, s) -
                        g.p.at(nv, vtx(i));
    }
    for (const Simplex& s : nv.simplices(2)) {
        Simplex ij = tri_edge(s, 0, 1), jk = tri_edge(s, 1, 2), ik = tri_edge(s, 0, 2);
        y.m.at(nv, s) = to_int_vec_checked(
            y.a.at(nv, ik) - y.a.at(nv, jk) - y.a.at(nv, ij), "m'");
        y.tau.at(nv, s) = g.eps.at(nv, ik) +
                          aff_translate(g.p.at(nv, vtx(s[2])), x.tau.at(nv, s)) -
                          aff_translate(y.a.at(nv, jk), g.eps.at(nv, ij)) - g.eps.at(nv, jk);
    }
    return y;
}

}  // namespace tdc
