#pragma once

#include "tdc/crossed.hpp"

namespace tdc {

// Semi-direct product of a crossed module with so(n,Z) acting by crossed
// intertwiners: TB1 = TB2R x| so(n,Z) via F_B, TDhalf = TD x| so(n,Z) via F_eB.
struct SdDesc {
    CMDesc base;

    CI action(const SkewIntMat& u) const {
        switch (base.kind) {
            case CMKind::TB2R: return ci_FB(u);
            case CMKind::TD: return ci_FeB(u);
            default: throw std::invalid_argument("no so(n,Z)-action on this carrier");
        }
    }
};

inline SdDesc sd_tb1(int n) { return SdDesc{cm_tb2r(n)}; }
inline SdDesc sd_tdhalf(int n) { return SdDesc{cm_td(n)}; }

struct SdObj {
    RatVec g;
    SkewIntMat u;
};

// Morphism (h, g, u): source (g, u), target (t(h) + g, u).
struct SdMor {
    HV h;
    RatVec g;
    SkewIntMat u;
};

inline SdObj sd_source(const SdMor& m) { return {m.g, m.u}; }
inline SdObj sd_target(const SdDesc& sd, const SdMor& m) { return {sd.base.t_of(m.h) + m.g, m.u}; }
inline SdMor sd_id(const SdObj& o, const SdDesc& sd) { return {sd.base.h_zero(), o.g, o.u}; }

inline bool sd_obj_eq(const SdDesc& sd, const SdObj& a, const SdObj& b) {
    return sd.base.g_eq(a.g, b.g) && a.u == b.u;
}
inline bool sd_mor_eq(const SdDesc& sd, const SdMor& a, const SdMor& b) {
    return sd.base.h_eq(a.h, b.h) && sd.base.g_eq(a.g, b.g) && a.u == b.u;
}

// The functor of the crossed intertwiner F_u on a base morphism (h, g):
// F(h, g) = (eta(t(h), g)^{-1} . f(h), phi(g)).
inline SdMor apply_functor(const CI& F, const HV& h, const RatVec& g, const SkewIntMat& u) {
    const CMDesc& C = F.cod;
    HV hh = C.h_add(C.h_neg(F.eta(F.dom.t_of(h), g)), F.f(h));
    return {hh, F.phi(g), u};
}

// (g2,u2).(g1,u1) = (g2 + phi_{u2}(g1), u2 + u1)
inline SdObj sd_mult_obj(const SdObj& a2, const SdObj& a1, const SdDesc& sd) {
    CI F = sd.action(a2.u);
    return {a2.g + F.phi(a1.g), a2.u + a1.u};
}

// (m2,u2).(m1,u1) = (m2 . F_{u2}(m1), u2 + u1), the base product being
// (h2,g2).(h1,g1) = (h2 + act(g2,h1), g2 + g1).
inline SdMor sd_mult_mor(const SdMor& m2, const SdMor& m1, const SdDesc& sd) {
    CI F = sd.action(m2.u);
    SdMor fm1 = apply_functor(F, m1.h, m1.g, m1.u);
    HV h = sd.base.h_add(m2.h, sd.base.act(m2.g, fm1.h));
    return {h, m2.g + fm1.g, m2.u + m1.u};
}

// Vertical composition m2 o m1 (requires source(m2) = target(m1)).
inline SdMor sd_compose(const SdDesc& sd, const SdMor& m2, const SdMor& m1) {
    if (!sd_obj_eq(sd, sd_source(m2), sd_target(sd, m1)))
        throw std::invalid_argument("morphisms not composable");
    return {sd.base.h_add(m2.h, m1.h), m1.g, m1.u};
}

// Associator endomorphism of (g3,u3).(g2,u2).(g1,u1):
// lambda = (id_{g3} . chi_{u3}(g2, F_{u2}(g1))^{-1}, u3 u2 u1).
inline SdMor sd_associator(const SdObj& a3, const SdObj& a2, const SdObj& a1, const SdDesc& sd) {
    CI F3 = sd.action(a3.u);
    CI F2 = sd.action(a2.u);
    RatVec g1p = F2.phi(a1.g);
    HV h = sd.base.act(a3.g, sd.base.h_neg(F3.eta(a2.g, g1p)));
    RatVec g = a3.g + F3.phi(a2.g + g1p);
    return {h, g, a3.u + a2.u + a1.u};
}

}  // namespace tdc
