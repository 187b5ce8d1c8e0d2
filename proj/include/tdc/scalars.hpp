#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdc/rational.hpp"

namespace tdc {

// Element of U(1) = Q/Z, stored by its representative in [0,1).
struct Circle {
    Rat v;

    Circle() : v(0) {}
    explicit Circle(const Rat& r) : v(mod1(r)) {}

    friend Circle operator+(const Circle& a, const Circle& b) { return Circle(a.v + b.v); }
    friend Circle operator-(const Circle& a, const Circle& b) { return Circle(a.v - b.v); }
    Circle operator-() const { return Circle(-v); }
    friend bool operator==(const Circle& a, const Circle& b) { return a.v == b.v; }
    friend bool operator!=(const Circle& a, const Circle& b) { return !(a == b); }
    bool is_zero() const { return v == 0; }
};

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline IntVec int_vec_zero(std::size_t n) { return IntVec(n, Int(0)); }
inline RatVec rat_vec_zero(std::size_t n) { return RatVec(n, Rat(0)); }

inline void check_len(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string("length mismatch in ") + what);
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    check_len(a.size(), b.size(), "IntVec+");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
    check_len(a.size(), b.size(), "IntVec-");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline IntVec operator-(const IntVec& a) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
    check_len(a.size(), b.size(), "RatVec+");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
inline RatVec operator-(const RatVec& a, const RatVec& b) {
    check_len(a.size(), b.size(), "RatVec-");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
inline RatVec operator-(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline RatVec to_rat_vec(const IntVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

inline RatVec mod1(const RatVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mod1(a[i]);
    return r;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    check_len(a.size(), b.size(), "dot");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Rat dot(const IntVec& a, const RatVec& b) { return dot(to_rat_vec(a), b); }
inline Rat dot(const RatVec& a, const IntVec& b) { return dot(a, to_rat_vec(b)); }
inline Int dot(const IntVec& a, const IntVec& b) {
    check_len(a.size(), b.size(), "dot");
    Int s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec first_half(const RatVec& x) { return RatVec(x.begin(), x.begin() + x.size() / 2); }
inline RatVec second_half(const RatVec& x) { return RatVec(x.begin() + x.size() / 2, x.end()); }
inline IntVec first_half(const IntVec& x) { return IntVec(x.begin(), x.begin() + x.size() / 2); }
inline IntVec second_half(const IntVec& x) { return IntVec(x.begin() + x.size() / 2, x.end()); }
inline RatVec concat(const RatVec& a, const RatVec& b) {
    RatVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}
inline IntVec concat(const IntVec& a, const IntVec& b) {
    IntVec r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

// Element of so(n,Z): integer skew-symmetric n x n matrix.
struct SkewIntMat {
    int n = 0;
    std::vector<Int> e;  // row-major, n*n

    SkewIntMat() = default;
    explicit SkewIntMat(int dim) : n(dim), e(static_cast<std::size_t>(dim) * dim, Int(0)) {}

    static SkewIntMat zero(int dim) { return SkewIntMat(dim); }

    static SkewIntMat from_rows(const std::vector<std::vector<Int>>& rows) {
        SkewIntMat m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n; ++i) {
            if (rows[i].size() != static_cast<std::size_t>(m.n))
                throw std::invalid_argument("skew matrix is not square");
            for (int j = 0; j < m.n; ++j) m.at(i, j) = rows[i][j];
        }
        m.check_skew();
        return m;
    }

    Int& at(int i, int j) { return e[static_cast<std::size_t>(i) * n + j]; }
    const Int& at(int i, int j) const { return e[static_cast<std::size_t>(i) * n + j]; }

    void check_skew() const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j)
                if (at(i, j) != -at(j, i))
                    throw std::invalid_argument("matrix is not skew-symmetric");
    }

    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](const Int& x) { return x == 0; });
    }

    // Entry (i,j) with i>j, the strictly lower-triangular part B_low.
    Int low(int i, int j) const { return i > j ? at(i, j) : Int(0); }

    IntVec mul(const IntVec& v) const {
        check_len(v.size(), static_cast<std::size_t>(n), "SkewIntMat*IntVec");
        IntVec r(n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
        return r;
    }
    RatVec mul(const RatVec& v) const {
        check_len(v.size(), static_cast<std::size_t>(n), "SkewIntMat*RatVec");
        RatVec r(n, Rat(0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r[i] += Rat(at(i, j)) * v[j];
        return r;
    }

    friend SkewIntMat operator+(const SkewIntMat& a, const SkewIntMat& b) {
        if (a.n != b.n) throw std::invalid_argument("skew matrix dimension mismatch");
        SkewIntMat r(a.n);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
        return r;
    }
    friend SkewIntMat operator-(const SkewIntMat& a, const SkewIntMat& b) {
        if (a.n != b.n) throw std::invalid_argument("skew matrix dimension mismatch");
        SkewIntMat r(a.n);
        for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] - b.e[i];
        return r;
    }
    SkewIntMat operator-() const {
        SkewIntMat r(n);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = -e[i];
        return r;
    }
    friend bool operator==(const SkewIntMat& a, const SkewIntMat& b) {
        return a.n == b.n && a.e == b.e;
    }
    friend bool operator!=(const SkewIntMat& a, const SkewIntMat& b) { return !(a == b); }
};

// <v|B|w> = sum_{i,j} B_ij v_i w_j
inline Rat bracket(const RatVec& v, const SkewIntMat& B, const RatVec& w) {
    check_len(v.size(), static_cast<std::size_t>(B.n), "bracket");
    check_len(w.size(), static_cast<std::size_t>(B.n), "bracket");
    Rat s(0);
    for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) s += Rat(B.at(i, j)) * v[i] * w[j];
    return s;
}
inline Rat bracket(const IntVec& v, const SkewIntMat& B, const RatVec& w) {
    return bracket(to_rat_vec(v), B, w);
}
inline Rat bracket(const RatVec& v, const SkewIntMat& B, const IntVec& w) {
    return bracket(v, B, to_rat_vec(w));
}

// <v|B|w>_low = <v|B_low|w> = sum_{i>j} B_ij v_i w_j, where B = B_low - B_low^tr.
inline Rat bracket_low(const RatVec& v, const SkewIntMat& B, const RatVec& w) {
    check_len(v.size(), static_cast<std::size_t>(B.n), "bracket_low");
    check_len(w.size(), static_cast<std::size_t>(B.n), "bracket_low");
    Rat s(0);
    for (int i = 1; i < B.n; ++i)
        for (int j = 0; j < i; ++j) s += Rat(B.at(i, j)) * v[i] * w[j];
    return s;
}
inline Rat bracket_low(const IntVec& v, const SkewIntMat& B, const RatVec& w) {
    return bracket_low(to_rat_vec(v), B, w);
}
inline Rat bracket_low(const RatVec& v, const SkewIntMat& B, const IntVec& w) {
    return bracket_low(v, B, to_rat_vec(w));
}
inline Rat bracket_low(const IntVec& v, const SkewIntMat& B, const IntVec& w) {
    return bracket_low(to_rat_vec(v), B, to_rat_vec(w));
}

// [x,y] = sum_i x_{n+i} y_i on R^{2n}.
inline Rat pairing(const RatVec& x, const RatVec& y) {
    check_len(x.size(), y.size(), "pairing");
    if (x.size() % 2 != 0) throw std::invalid_argument("pairing needs even length");
    std::size_t n = x.size() / 2;
    Rat s(0);
    for (std::size_t i = 0; i < n; ++i) s += x[n + i] * y[i];
    return s;
}

// Affine character of T^n: a |-> constant + winding . a  in U(1).
struct AffChar {
    Circle constant;
    IntVec winding;

    AffChar() = default;
    AffChar(const Circle& c, const IntVec& w) : constant(c), winding(w) {}
    explicit AffChar(std::size_t n) : constant(), winding(int_vec_zero(n)) {}

    static AffChar zero(std::size_t n) { return AffChar(n); }
    static AffChar constant_char(const Rat& c, std::size_t n) {
        return AffChar(Circle(c), int_vec_zero(n));
    }

    Circle eval(const RatVec& a) const {
        check_len(a.size(), winding.size(), "AffChar::eval");
        return constant + Circle(dot(winding, a));
    }

    friend AffChar operator+(const AffChar& a, const AffChar& b) {
        return AffChar(a.constant + b.constant, a.winding + b.winding);
    }
    friend AffChar operator-(const AffChar& a, const AffChar& b) {
        return AffChar(a.constant - b.constant, a.winding - b.winding);
    }
    AffChar operator-() const { return AffChar(-constant, -winding); }
    friend bool operator==(const AffChar& a, const AffChar& b) {
        return a.constant == b.constant && a.winding == b.winding;
    }
    friend bool operator!=(const AffChar& a, const AffChar& b) { return !(a == b); }
    bool is_zero() const {
        return constant.is_zero() &&
               std::all_of(winding.begin(), winding.end(), [](const Int& x) { return x == 0; });
    }
};

// (l_g tau)(a) = tau(a - g): constant drops by winding . g.
inline AffChar aff_translate(const RatVec& g, const AffChar& tau) {
    check_len(g.size(), tau.winding.size(), "aff_translate");
    return AffChar(tau.constant - Circle(dot(tau.winding, g)), tau.winding);
}

// The character a |-> <m|B|a>, i.e. winding -B.m and zero constant.
inline AffChar aff_of_bra(const IntVec& m, const SkewIntMat& B) {
    check_len(m.size(), static_cast<std::size_t>(B.n), "aff_of_bra");
    return AffChar(Circle(), -B.mul(m));
}

}  // namespace tdc
