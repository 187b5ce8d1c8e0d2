#pragma once

#include "tdc/dualize.hpp"
#include "tdc/json_io.hpp"
#include "tdc/rng.hpp"

namespace tdc {

// so(2,Z)-generator embedded in the top-left block of so(n,Z).
inline SkewIntMat so_generator(int n) {
    SkewIntMat B(n);
    if (n >= 2) {
        B.at(0, 1) = -1;
        B.at(1, 0) = 1;
    }
    return B;
}

// delta of a random 0-/1-cochain: cheap source of exact cocycles.
inline Cochain<SkewIntMat> random_so_coboundary(int n, const Nerve& nv, Rng& rng) {
    Cochain<SkewIntMat> D = zero_cochain(nv, 0, SkewIntMat::zero(n));
    for (auto& v : D.vals) v = rng.skew(n, 3);
    return coboundary(nv, D, SkewIntMat::zero(n));
}

inline Cochain<IntVec> random_z2cocycle(int n, const Nerve& nv, Rng& rng) {
    Cochain<IntVec> w = zero_cochain(nv, 1, int_vec_zero(n));
    for (auto& v : w.vals) v = rng.int_vec(n, 3);
    return coboundary(nv, w, int_vec_zero(n));
}

inline Cochain<Circle> random_circle2cocycle(const Nerve& nv, Rng& rng) {
    Cochain<Circle> w = zero_cochain(nv, 1, Circle());
    for (auto& v : w.vals) v = rng.circle(5);
    return coboundary(nv, w, Circle());
}

inline GaugeTB1 random_gauge_tb1(int n, const Nerve& nv, Rng& rng, bool zero_C = false) {
    GaugeTB1 g = zero_gauge_tb1(n, nv);
    if (!zero_C)
        for (auto& v : g.C.vals) v = rng.skew(n, 2);
    for (auto& v : g.z.vals) v = rng.int_vec(n, 3);
    for (auto& v : g.p.vals) v = rng.rat_vec(n, 5);
    for (auto& v : g.eps.vals) v = rng.aff_char(n, 5);
    return g;
}

inline GaugeTDhalf random_gauge_tdhalf(int n, const Nerve& nv, Rng& rng, bool zero_C = false) {
    GaugeTDhalf g = zero_gauge_tdhalf(n, nv);
    if (!zero_C)
        for (auto& v : g.C.vals) v = rng.skew(n, 2);
    for (auto& v : g.z.vals) v = rng.int_vec(n, 3);
    for (auto& v : g.z_hat.vals) v = rng.int_vec(n, 3);
    for (auto& v : g.p.vals) v = rng.rat_vec(n, 5);
    for (auto& v : g.p_hat.vals) v = rng.rat_vec(n, 5);
    for (auto& v : g.e.vals) v = rng.circle(5);
    return g;
}

// Random valid cocycles: a trivial-torus image moved by a random gauge.
// apply_gauge lands on valid cocycles by construction.
inline CocycleTB1 random_tb1(int n, const Nerve& nv, Rng& rng) {
    CocycleSO so{n, nv, random_so_coboundary(n, nv, rng)};
    CocycleTB1 base = trivial_I(so, random_z2cocycle(n, nv, rng), random_circle2cocycle(nv, rng));
    return apply_gauge(base, random_gauge_tb1(n, nv, rng));
}

inline CocycleTB2R random_tb2r(int n, const Nerve& nv, Rng& rng) {
    CocycleSO so{n, nv, zero_cochain(nv, 1, SkewIntMat::zero(n))};
    CocycleTB1 base = trivial_I(so, random_z2cocycle(n, nv, rng), random_circle2cocycle(nv, rng));
    CocycleTB2R stripped{base.n, base.nerve, base.a, base.m, base.tau};
    return apply_gauge(stripped, random_gauge_tb1(n, nv, rng, /*zero_C=*/true));
}

inline CocycleTDhalf random_tdhalf(int n, const Nerve& nv, Rng& rng) {
    CocycleSO so{n, nv, random_so_coboundary(n, nv, rng)};
    Cochain<RatVec> q = zero_cochain(nv, 0, rat_vec_zero(n));
    for (auto& v : q.vals) v = rng.rat_vec(n, 5);
    Cochain<IntVec> w = zero_cochain(nv, 1, int_vec_zero(n));
    for (auto& v : w.vals) v = rng.int_vec(n, 3);
    Cochain<RatVec> b = zero_cochain(nv, 1, rat_vec_zero(n));
    Cochain<IntVec> m_hat = zero_cochain(nv, 2, int_vec_zero(n));
    for (const Simplex& s : nv.simplices(1)) {
        b.at(nv, s) = q.at(nv, vtx(s[1])) - q.at(nv, vtx(s[0])) + to_rat_vec(w.at(nv, s));
    }
    for (const Simplex& s : nv.simplices(2)) {
        m_hat.at(nv, s) = w.at(nv, tri_edge(s, 0, 2)) - w.at(nv, tri_edge(s, 1, 2)) -
                          w.at(nv, tri_edge(s, 0, 1));
    }
    CocycleTDhalf base = trivial_Itilde(so, b, m_hat, random_circle2cocycle(nv, rng));
    return apply_gauge(base, random_gauge_tdhalf(n, nv, rng));
}

inline CocycleTD random_td(int n, const Nerve& nv, Rng& rng) {
    CocycleTDhalf h = random_tdhalf(n, nv, rng);
    // rebuild with B = 0: zero out the so-part before the gauge is applied
    CocycleSO so{n, nv, zero_cochain(nv, 1, SkewIntMat::zero(n))};
    Rng rng2(rng.next());
    Cochain<RatVec> q = zero_cochain(nv, 0, rat_vec_zero(n));
    for (auto& v : q.vals) v = rng2.rat_vec(n, 5);
    Cochain<IntVec> w = zero_cochain(nv, 1, int_vec_zero(n));
    for (auto& v : w.vals) v = rng2.int_vec(n, 3);
    Cochain<RatVec> b = zero_cochain(nv, 1, rat_vec_zero(n));
    Cochain<IntVec> m_hat = zero_cochain(nv, 2, int_vec_zero(n));
    for (const Simplex& s : nv.simplices(1))
        b.at(nv, s) = q.at(nv, vtx(s[1])) - q.at(nv, vtx(s[0])) + to_rat_vec(w.at(nv, s));
    for (const Simplex& s : nv.simplices(2))
        m_hat.at(nv, s) = w.at(nv, tri_edge(s, 0, 2)) - w.at(nv, tri_edge(s, 1, 2)) -
                          w.at(nv, tri_edge(s, 0, 1));
    CocycleTDhalf base = trivial_Itilde(so, b, m_hat, random_circle2cocycle(nv, rng2));
    CocycleTDhalf moved = apply_gauge(base, random_gauge_tdhalf(n, nv, rng2, /*zero_C=*/true));
    return CocycleTD{moved.n, moved.nerve, moved.a, moved.a_hat, moved.m, moved.m_hat, moved.t};
}

// The half-geometric correspondence whose only data are the gluing matrices:
// B_02 the so(2,Z)-generator on the minimal circle nerve.
inline CocycleTDhalf example_CB(int n) {
    Nerve nv = nerve_circle3();
    CocycleTDhalf x = zero_tdhalf(n, nv);
    x.B.at(nv, {0, 2}) = so_generator(n);
    return x;
}

// F1-background whose tau winds a generator of the sphere's degree-2 class;
// its a_hat-solve is genuinely obstructed.
inline CocycleTB1 example_sphere_obstruction(int n) {
    Nerve nv = nerve_sphere();
    CocycleTB1 x = zero_tb1(n, nv);
    IntVec gen = int_vec_zero(n);
    gen[0] = 1;
    x.tau.at(nv, {0, 1, 2}) = AffChar(Circle(), gen);
    return x;
}

inline AnyCocycle gen_example(const std::string& name, int n, std::uint64_t seed,
                              const std::string& type = "TB1") {
    if (name == "zero") {
        Nerve nv = nerve_cone();
        if (type == "TB1") return zero_tb1(n, nv);
        if (type == "TB2R") return zero_tb2r(n, nv);
        if (type == "TD") return zero_td(n, nv);
        if (type == "TDhalf") return zero_tdhalf(n, nv);
        throw std::invalid_argument("unknown type for zero example: " + type);
    }
    if (name == "C_B") return example_CB(n);
    if (name == "sphere-obstruction") return example_sphere_obstruction(n);
    if (name == "random-cone") {
        Nerve nv = nerve_cone();
        Rng rng(seed);
        if (type == "TB1") return random_tb1(n, nv, rng);
        if (type == "TB2R") return random_tb2r(n, nv, rng);
        if (type == "TD") return random_td(n, nv, rng);
        if (type == "TDhalf") return random_tdhalf(n, nv, rng);
        throw std::invalid_argument("unknown type for random-cone example: " + type);
    }
    throw std::invalid_argument("unknown example: " + name);
}

}  // namespace tdc
