#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "tdc/rng.hpp"
#include "tdc/scalars.hpp"

namespace tdc {

// The three crossed modules in play:
//   TB2  : G = T^n,   H = AffChar,            t = 0,      act = translation
//   TB2R : G = R^n,   H = AffChar x Z^n,      t(tau,m)=m, act = translation
//   TD   : G = R^2n,  H = Z^2n x U(1),        t(z,t)=z,   act(x,(z,t))=(z,t-[x,z])
enum class CMKind { TB2, TB2R, TD };

inline std::string cm_name(CMKind k) {
    switch (k) {
        case CMKind::TB2: return "TB2";
        case CMKind::TB2R: return "TB2R";
        case CMKind::TD: return "TD";
    }
    return "?";
}

// Arrow-group element; live fields depend on the crossed module kind.
struct HV {
    AffChar tau;  // TB2, TB2R
    IntVec z;     // TB2R (Z^n), TD (Z^2n)
    Circle t;     // TD
};

struct CMDesc {
    CMKind kind = CMKind::TB2R;
    int n = 1;

    int gdim() const { return kind == CMKind::TD ? 2 * n : n; }
    int hzdim() const { return kind == CMKind::TD ? 2 * n : (kind == CMKind::TB2R ? n : 0); }

    RatVec g_zero() const { return rat_vec_zero(gdim()); }
    bool g_eq(const RatVec& a, const RatVec& b) const {
        if (kind == CMKind::TB2) return mod1(a) == mod1(b);
        return a == b;
    }

    HV h_zero() const {
        HV h;
        h.tau = AffChar::zero(kind == CMKind::TD ? 0 : n);
        h.z = int_vec_zero(hzdim());
        return h;
    }
    HV h_add(const HV& a, const HV& b) const {
        HV r;
        r.tau = a.tau + b.tau;
        r.z = a.z + b.z;
        r.t = a.t + b.t;
        return r;
    }
    HV h_neg(const HV& a) const {
        HV r;
        r.tau = -a.tau;
        r.z = -a.z;
        r.t = -a.t;
        return r;
    }
    bool h_eq(const HV& a, const HV& b) const {
        switch (kind) {
            case CMKind::TB2: return a.tau == b.tau;
            case CMKind::TB2R: return a.tau == b.tau && a.z == b.z;
            case CMKind::TD: return a.z == b.z && a.t == b.t;
        }
        return false;
    }

    RatVec t_of(const HV& h) const {
        if (kind == CMKind::TB2) return g_zero();
        return to_rat_vec(h.z);
    }

    HV act(const RatVec& g, const HV& h) const {
        HV r = h;
        switch (kind) {
            case CMKind::TB2:
            case CMKind::TB2R:
                r.tau = aff_translate(g, h.tau);
                break;
            case CMKind::TD:
                r.t = h.t - Circle(pairing(g, to_rat_vec(h.z)));
                break;
        }
        return r;
    }

    friend bool operator==(const CMDesc& a, const CMDesc& b) {
        return a.kind == b.kind && a.n == b.n;
    }
};

inline CMDesc cm_tb2(int n) { return CMDesc{CMKind::TB2, n}; }
inline CMDesc cm_tb2r(int n) { return CMDesc{CMKind::TB2R, n}; }
inline CMDesc cm_td(int n) { return CMDesc{CMKind::TD, n}; }

// Crossed intertwiner (phi, f, eta) with eta valued in ker t' of the
// codomain. All eta maps are closed-form evaluators keyed by instance name;
// composites evaluate through the composition formula
//   (phi2 o phi1, f2 o f1, eta2 o (phi1 x phi1) + f2 o eta1).
struct CI {
    enum class Kind { Id, Flip, Rele, Lele, ReleR, LeleR, FB, FeB, ToTB2, Compose, NegEta };

    Kind kind = Kind::Id;
    CMDesc dom, cod;
    SkewIntMat B;  // FB / FeB parameter
    std::shared_ptr<const CI> lhs, rhs;

    std::string name() const {
        switch (kind) {
            case Kind::Id: return "id";
            case Kind::Flip: return "flip";
            case Kind::Rele: return "rele";
            case Kind::Lele: return "lele";
            case Kind::ReleR: return "releR";
            case Kind::LeleR: return "leleR";
            case Kind::FB: return "F_B";
            case Kind::FeB: return "F_eB";
            case Kind::ToTB2: return "toTB2";
            case Kind::Compose: return lhs->name() + "." + rhs->name();
            case Kind::NegEta: return lhs->name() + "[-eta]";
        }
        return "?";
    }

    RatVec phi(const RatVec& g) const {
        switch (kind) {
            case Kind::Id: return g;
            case Kind::Flip: return concat(second_half(g), first_half(g));
            case Kind::Rele:
            case Kind::ReleR: return second_half(g);
            case Kind::Lele:
            case Kind::LeleR: return first_half(g);
            case Kind::FB: return g;
            case Kind::FeB: {
                RatVec a = first_half(g), ah = second_half(g);
                return concat(a, B.mul(a) + ah);
            }
            case Kind::ToTB2: return g;
            case Kind::Compose: return lhs->phi(rhs->phi(g));
            case Kind::NegEta: return lhs->phi(g);
        }
        throw std::logic_error("phi");
    }

    HV f(const HV& h) const {
        switch (kind) {
            case Kind::Id: return h;
            case Kind::Flip: {
                HV r = h;
                r.z = concat(second_half(h.z), first_half(h.z));
                return r;
            }
            case Kind::Rele: {
                HV r = cod.h_zero();
                r.tau = AffChar(h.t, first_half(h.z));
                return r;
            }
            case Kind::Lele: {
                HV r = cod.h_zero();
                r.tau = AffChar(h.t, second_half(h.z));
                return r;
            }
            case Kind::ReleR: {
                HV r = cod.h_zero();
                r.tau = AffChar(h.t, first_half(h.z));
                r.z = second_half(h.z);
                return r;
            }
            case Kind::LeleR: {
                HV r = cod.h_zero();
                r.tau = AffChar(h.t, second_half(h.z));
                r.z = first_half(h.z);
                return r;
            }
            case Kind::FB: {
                HV r = h;
                r.tau = h.tau - aff_of_bra(h.z, B);
                return r;
            }
            case Kind::FeB: {
                HV r = h;
                IntVec m = first_half(h.z), mh = second_half(h.z);
                r.z = concat(m, B.mul(m) + mh);
                return r;
            }
            case Kind::ToTB2: {
                HV r = cod.h_zero();
                r.tau = h.tau;
                return r;
            }
            case Kind::Compose: return lhs->f(rhs->f(h));
            case Kind::NegEta: return lhs->f(h);
        }
        throw std::logic_error("f");
    }

    HV eta(const RatVec& g1, const RatVec& g2) const {
        switch (kind) {
            case Kind::Id:
            case Kind::Rele:
            case Kind::ReleR:
            case Kind::ToTB2:
                return cod.h_zero();
            case Kind::Flip: {
                HV r = cod.h_zero();
                r.t = Circle(pairing(g1, g2));
                return r;
            }
            case Kind::Lele:
            case Kind::LeleR: {
                // eta(a + ahat, a' + ahat')(c) = ahat . a', a constant character
                HV r = cod.h_zero();
                r.tau = AffChar::constant_char(dot(second_half(g1), first_half(g2)), cod.n);
                return r;
            }
            case Kind::FB: {
                // eta_B(a, a') = <a'|B|a>_low
                HV r = cod.h_zero();
                r.tau = AffChar::constant_char(bracket_low(g2, B, g1), cod.n);
                return r;
            }
            case Kind::FeB: {
                // eta_{e^B}(a + ahat, b + bhat) = <a|B|b>_low
                HV r = cod.h_zero();
                r.t = Circle(bracket_low(first_half(g1), B, first_half(g2)));
                return r;
            }
            case Kind::Compose:
                return cod.h_add(lhs->eta(rhs->phi(g1), rhs->phi(g2)), lhs->f(rhs->eta(g1, g2)));
            case Kind::NegEta: return cod.h_neg(lhs->eta(g1, g2));
        }
        throw std::logic_error("eta");
    }
};

inline CI ci_identity(const CMDesc& d) { return CI{CI::Kind::Id, d, d, SkewIntMat(), nullptr, nullptr}; }
inline CI ci_flip(int n) { return CI{CI::Kind::Flip, cm_td(n), cm_td(n), SkewIntMat(), nullptr, nullptr}; }
inline CI ci_rele(int n) { return CI{CI::Kind::Rele, cm_td(n), cm_tb2(n), SkewIntMat(), nullptr, nullptr}; }
inline CI ci_lele(int n) { return CI{CI::Kind::Lele, cm_td(n), cm_tb2(n), SkewIntMat(), nullptr, nullptr}; }
inline CI ci_releR(int n) { return CI{CI::Kind::ReleR, cm_td(n), cm_tb2r(n), SkewIntMat(), nullptr, nullptr}; }
inline CI ci_leleR(int n) { return CI{CI::Kind::LeleR, cm_td(n), cm_tb2r(n), SkewIntMat(), nullptr, nullptr}; }
inline CI ci_FB(const SkewIntMat& B) {
    return CI{CI::Kind::FB, cm_tb2r(B.n), cm_tb2r(B.n), B, nullptr, nullptr};
}
inline CI ci_FeB(const SkewIntMat& B) {
    return CI{CI::Kind::FeB, cm_td(B.n), cm_td(B.n), B, nullptr, nullptr};
}
inline CI ci_toTB2(int n) { return CI{CI::Kind::ToTB2, cm_tb2r(n), cm_tb2(n), SkewIntMat(), nullptr, nullptr}; }

inline CI ci_compose(const CI& f2, const CI& f1) {
    if (!(f1.cod == f2.dom)) throw std::invalid_argument("crossed intertwiner domain mismatch");
    return CI{CI::Kind::Compose, f1.dom, f2.cod, SkewIntMat(),
              std::make_shared<const CI>(f2), std::make_shared<const CI>(f1)};
}

inline CI with_negated_eta(const CI& f) {
    return CI{CI::Kind::NegEta, f.dom, f.cod, SkewIntMat(), std::make_shared<const CI>(f), nullptr};
}

struct CheckReport {
    bool ok = true;
    std::string what;  // first violated identity, empty when ok
};

inline HV random_h(const CMDesc& d, Rng& rng, long bound = 7) {
    HV h = d.h_zero();
    switch (d.kind) {
        case CMKind::TB2:
            h.tau = rng.aff_char(d.n, bound);
            break;
        case CMKind::TB2R:
            h.tau = rng.aff_char(d.n, bound);
            h.z = rng.int_vec(d.n, bound);
            break;
        case CMKind::TD:
            h.z = rng.int_vec(2 * d.n, bound);
            h.t = rng.circle(bound);
            break;
    }
    return h;
}

// Samples the four crossed-intertwiner axioms on random rational inputs.
inline CheckReport ci_check_axioms(const CI& F, int samples, Rng& rng, long bound = 7) {
    const CMDesc& D = F.dom;
    const CMDesc& C = F.cod;
    for (int s = 0; s < samples; ++s) {
        RatVec g = rng.rat_vec(D.gdim(), bound);
        RatVec g2 = rng.rat_vec(D.gdim(), bound);
        RatVec g3 = rng.rat_vec(D.gdim(), bound);
        HV h = random_h(D, rng, bound);
        HV h2 = random_h(D, rng, bound);

        if (!C.g_eq(F.phi(D.t_of(h)), C.t_of(F.f(h)))) return {false, "CI1"};
        if (!C.h_eq(F.eta(D.t_of(h), D.t_of(h2)), C.h_zero())) return {false, "CI2"};
        {
            RatVec th_minus_g = D.t_of(h) - g;
            HV lhsv = C.h_add(F.eta(g, th_minus_g), F.f(D.act(g, h)));
            HV rhsv = C.h_add(C.act(F.phi(g), F.eta(th_minus_g, g)), C.act(F.phi(g), F.f(h)));
            if (!C.h_eq(lhsv, rhsv)) return {false, "CI4"};
        }
        {
            HV lhsv = C.h_add(F.eta(g, g2), F.eta(g + g2, g3));
            HV rhsv = C.h_add(C.act(F.phi(g), F.eta(g2, g3)), F.eta(g, g2 + g3));
            if (!C.h_eq(lhsv, rhsv)) return {false, "CI5"};
        }
    }
    return {};
}

// Samples the three strict-equivariance conditions of F against the two
// so(n,Z)-actions u |-> act_dom(u), act_cod(u).
inline CheckReport ci_check_equivariance(const CI& F,
                                         const std::function<CI(const SkewIntMat&)>& act_dom,
                                         const std::function<CI(const SkewIntMat&)>& act_cod,
                                         int samples, Rng& rng, long bound = 7) {
    const CMDesc& D = F.dom;
    const CMDesc& C = F.cod;
    for (int s = 0; s < samples; ++s) {
        SkewIntMat u = rng.skew(D.n, bound);
        CI Fu = act_dom(u);
        CI Fu2 = act_cod(u);
        RatVec g1 = rng.rat_vec(D.gdim(), bound);
        RatVec g2 = rng.rat_vec(D.gdim(), bound);
        HV h = random_h(D, rng, bound);

        if (!C.g_eq(Fu2.phi(F.phi(g1)), F.phi(Fu.phi(g1)))) return {false, "phi-equivariance"};
        if (!C.h_eq(Fu2.f(F.f(h)), F.f(Fu.f(h)))) return {false, "f-equivariance"};
        HV lhsv = C.h_add(Fu2.eta(F.phi(g1), F.phi(g2)), Fu2.f(F.eta(g1, g2)));
        HV rhsv = C.h_add(F.eta(Fu.phi(g1), Fu.phi(g2)), F.f(Fu.eta(g1, g2)));
        if (!C.h_eq(lhsv, rhsv)) return {false, "eta-compatibility"};
    }
    return {};
}

// Symbolic (pi_0, pi_1) of the named 2-groups, with n substituted.
inline std::pair<std::string, std::string> pi_invariants(const std::string& name, int n) {
    auto num = std::to_string(n);
    auto num2 = std::to_string(2 * n);
    if (name == "TB2" || name == "TB2R") return {"T^" + num, "AffChar(T^" + num + ")"};
    if (name == "TD") return {"T^" + num2, "U(1)"};
    if (name == "TB1") return {"T^" + num + " x so(" + num + ",Z)", "AffChar(T^" + num + ")"};
    if (name == "TDhalf") return {"T^" + num2 + " |x so(" + num + ",Z)", "U(1)"};
    throw std::invalid_argument("unknown 2-group: " + name);
}

}  // namespace tdc
