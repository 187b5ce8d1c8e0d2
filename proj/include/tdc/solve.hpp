#pragma once

#include <string>
#include <vector>

#include "tdc/nerve.hpp"

namespace tdc {

enum class Ring { Q, Z, Circle };

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

// Matrix of delta: C^{k-1} -> C^k. Rows indexed by k-simplices, columns by
// (k-1)-simplices, entries the alternating face signs.
inline IntMat delta_matrix(const Nerve& nv, int k) {
    const auto& rows = nv.simplices(k);
    const auto& cols = nv.simplices(k - 1);
    IntMat m(rows.size(), std::vector<Int>(cols.size(), Int(0)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Simplex& t = rows[r];
        for (std::size_t d = 0; d < t.size(); ++d) {
            Simplex face;
            for (std::size_t q = 0; q < t.size(); ++q)
                if (q != d) face.push_back(t[q]);
            int c = nv.index_of(k - 1, face);
            m[r][c] += (d % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

inline std::size_t mat_rank_q(const IntMat& m) {
    if (m.empty()) return 0;
    RatMat a(m.size(), std::vector<Rat>(m[0].size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) a[i][j] = Rat(m[i][j]);
    std::size_t rank = 0;
    std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Free rank of H^degree of the nerve's cochain complex. Over Z this is the
// free rank (torsion is not counted).
inline int cohomology_rank(const Nerve& nv, int degree, Ring ring = Ring::Q) {
    (void)ring;
    std::size_t dim = nv.simplices(degree).size();
    std::size_t rank_out = degree < 3 ? mat_rank_q(delta_matrix(nv, degree + 1)) : 0;
    std::size_t rank_in = degree > 0 ? mat_rank_q(delta_matrix(nv, degree)) : 0;
    return static_cast<int>(dim - rank_out - rank_in);
}

// ---------------------------------------------------------------------------
// Scalar solvers for M x = b. All pivoting is lexicographic so that results
// are reproducible byte for byte.
// ---------------------------------------------------------------------------

struct ScalarSolution {
    bool ok = true;
    std::vector<Rat> x;         // candidate solution (exact when ok)
    std::vector<Rat> residual;  // b - M x, zero when ok
    int violated = 0;           // independent inconsistent constraints
};

inline std::vector<Rat> mat_apply(const IntMat& m, const std::vector<Rat>& x) {
    std::vector<Rat> r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (m[i][j] != 0) r[i] += Rat(m[i][j]) * x[j];
    return r;
}

inline ScalarSolution solve_scalar_q(const IntMat& m, const std::vector<Rat>& b,
                                     std::size_t cols) {
    std::size_t rows = m.size();
    ScalarSolution out;
    if (rows == 0) {
        out.x.assign(cols, Rat(0));
        return out;
    }
    RatMat a(rows, std::vector<Rat>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = Rat(m[i][j]);
    std::vector<Rat> rhs = b;

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t cur = 0;
    for (std::size_t col = 0; col < cols && cur < rows; ++col) {
        std::size_t piv = cur;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[cur]);
        std::swap(rhs[piv], rhs[cur]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == cur || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[cur][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[cur][j];
            rhs[i] -= f * rhs[cur];
        }
        pivots.emplace_back(cur, col);
        ++cur;
    }
    out.x.assign(cols, Rat(0));
    for (auto [r, c] : pivots) out.x[c] = rhs[r] / a[r][c];
    for (std::size_t r = cur; r < rows; ++r)
        if (rhs[r] != 0) ++out.violated;
    out.ok = out.violated == 0;
    out.residual = b;
    std::vector<Rat> mx = mat_apply(m, out.x);
    for (std::size_t i = 0; i < rows; ++i) out.residual[i] -= mx[i];
    return out;
}

// Diagonalization D = U M V with U, V unimodular and D diagonal (Smith-style
// pivoting by minimal absolute value; no divisibility normalization, which a
// linear solve does not need).
struct Diagonalization {
    IntMat u, v, d;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

inline IntMat identity_mat(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Diagonalization diagonalize_z(const IntMat& mat) {
    Diagonalization res;
    res.d = mat;
    std::size_t rows = mat.size();
    std::size_t cols = rows == 0 ? 0 : mat[0].size();
    res.u = identity_mat(rows);
    res.v = identity_mat(cols);
    IntMat& d = res.d;
    IntMat& u = res.u;
    IntMat& v = res.v;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate minimal nonzero |entry| in the trailing submatrix
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best(0);
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                Int a = abs(d[i][j]);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        std::swap(d[pi], d[t]);
        std::swap(u[pi], u[t]);
        if (pj != t)
            for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][pj], d[i][t]);
        if (pj != t)
            for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][pj], v[i][t]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) d[i][j] -= q * d[t][j];
                for (std::size_t j = 0; j < rows; ++j) u[i][j] -= q * u[t][j];
                if (d[i][t] != 0) {
                    std::swap(d[i], d[t]);
                    std::swap(u[i], u[t]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
                for (std::size_t i = 0; i < rows; ++i) d[i][j] -= q * d[i][t];
                for (std::size_t i = 0; i < cols; ++i) v[i][j] -= q * v[i][t];
                if (d[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(d[i][j], d[i][t]);
                    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][j], v[i][t]);
                    clean = false;
                }
            }
        }
        if (d[t][t] < 0) {
            for (std::size_t j = 0; j < cols; ++j) d[t][j] = -d[t][j];
            for (std::size_t j = 0; j < rows; ++j) u[t][j] = -u[t][j];
        }
        ++t;
    }
    res.rank = 0;
    for (std::size_t i = 0; i < rows && i < cols; ++i)
        if (d[i][i] != 0) ++res.rank;
    return res;
}

inline ScalarSolution solve_scalar_z(const IntMat& m, const std::vector<Int>& b,
                                     std::size_t cols) {
    std::size_t rows = m.size();
    ScalarSolution out;
    if (rows == 0) {
        out.x.assign(cols, Rat(0));
        return out;
    }
    Diagonalization dg = diagonalize_z(m);
    std::vector<Int> ub(rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ub[i] += dg.u[i][j] * b[j];
    std::vector<Int> y(cols, Int(0));
    for (std::size_t i = 0; i < rows; ++i) {
        Int di = (i < cols) ? dg.d[i][i] : Int(0);
        if (di != 0) {
            if (ub[i] % di != 0) {
                ++out.violated;
            } else {
                y[i] = ub[i] / di;
            }
        } else if (ub[i] != 0) {
            ++out.violated;
        }
    }
    out.x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < cols; ++i) {
        Int xi(0);
        for (std::size_t j = 0; j < cols; ++j) xi += dg.v[i][j] * y[j];
        out.x[i] = Rat(xi);
    }
    out.ok = out.violated == 0;
    std::vector<Rat> bq(rows);
    for (std::size_t i = 0; i < rows; ++i) bq[i] = Rat(b[i]);
    out.residual = bq;
    std::vector<Rat> mx = mat_apply(m, out.x);
    for (std::size_t i = 0; i < rows; ++i) out.residual[i] -= mx[i];
    return out;
}

// Solves M x = b mod 1 for x in (Q/Z)^cols. The integer ambiguity of the
// lift is absorbed by the unimodular row operations: with D = U M V the
// system becomes d_i y_i = (U b)_i mod 1, which pins y_i on nonzero pivots
// and leaves an integrality constraint on zero rows.
inline ScalarSolution solve_scalar_circle(const IntMat& m, const std::vector<Rat>& b_lifted,
                                          std::size_t cols) {
    std::size_t rows = m.size();
    ScalarSolution out;
    if (rows == 0) {
        out.x.assign(cols, Rat(0));
        return out;
    }
    Diagonalization dg = diagonalize_z(m);
    std::vector<Rat> ub(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ub[i] += Rat(dg.u[i][j]) * b_lifted[j];
    std::vector<Rat> y(cols, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) {
        Int di = (i < cols) ? dg.d[i][i] : Int(0);
        if (di != 0) {
            y[i] = ub[i] / Rat(di);
        } else if (!is_integer(ub[i])) {
            ++out.violated;
        }
    }
    out.x.assign(cols, Rat(0));
    for (std::size_t i = 0; i < cols; ++i) {
        Rat xi(0);
        for (std::size_t j = 0; j < cols; ++j) xi += Rat(dg.v[i][j]) * y[j];
        out.x[i] = mod1(xi);
    }
    out.ok = out.violated == 0;
    std::vector<Rat> mx = mat_apply(m, out.x);
    out.residual.assign(rows, Rat(0));
    for (std::size_t i = 0; i < rows; ++i) out.residual[i] = mod1(b_lifted[i] - mx[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Coefficient slots: every carrier decomposes into scalar components that are
// solved against the same coboundary matrix.
// ---------------------------------------------------------------------------

inline std::size_t slot_count(const Rat&) { return 1; }
inline Rat slot_get(const Rat& v, std::size_t) { return v; }
inline void slot_set(Rat& v, std::size_t, const Rat& x) { v = x; }

inline std::size_t slot_count(const Int&) { return 1; }
inline Rat slot_get(const Int& v, std::size_t) { return Rat(v); }
inline void slot_set(Int& v, std::size_t, const Rat& x) {
    if (!is_integer(x)) throw std::invalid_argument("non-integer value in integer slot");
    v = x.get_num();
}

inline std::size_t slot_count(const Circle&) { return 1; }
inline Rat slot_get(const Circle& v, std::size_t) { return v.v; }
inline void slot_set(Circle& v, std::size_t, const Rat& x) { v = Circle(x); }

inline std::size_t slot_count(const RatVec& v) { return v.size(); }
inline Rat slot_get(const RatVec& v, std::size_t i) { return v[i]; }
inline void slot_set(RatVec& v, std::size_t i, const Rat& x) { v[i] = x; }

inline std::size_t slot_count(const IntVec& v) { return v.size(); }
inline Rat slot_get(const IntVec& v, std::size_t i) { return Rat(v[i]); }
inline void slot_set(IntVec& v, std::size_t i, const Rat& x) {
    if (!is_integer(x)) throw std::invalid_argument("non-integer value in integer slot");
    v[i] = x.get_num();
}

// Strict lower triangle of a skew matrix, row-major.
inline std::size_t slot_count(const SkewIntMat& m) {
    return static_cast<std::size_t>(m.n) * (m.n - 1) / 2;
}
inline Rat slot_get(const SkewIntMat& m, std::size_t s) {
    std::size_t k = 0;
    for (int i = 1; i < m.n; ++i)
        for (int j = 0; j < i; ++j, ++k)
            if (k == s) return Rat(m.at(i, j));
    throw std::out_of_range("skew slot");
}
inline void slot_set(SkewIntMat& m, std::size_t s, const Rat& x) {
    if (!is_integer(x)) throw std::invalid_argument("non-integer value in skew slot");
    std::size_t k = 0;
    for (int i = 1; i < m.n; ++i)
        for (int j = 0; j < i; ++j, ++k)
            if (k == s) {
                m.at(i, j) = x.get_num();
                m.at(j, i) = -x.get_num();
                return;
            }
    throw std::out_of_range("skew slot");
}

template <class T>
struct SolveOutcome {
    bool ok = false;
    Cochain<T> solution;  // degree c.degree - 1, present when ok

    // obstruction payload, present when !ok
    int degree = 0;
    Cochain<T> representative;  // a cocycle not in the image of delta
    int rank = 0;               // independent violated constraints
    std::string note;
};

// Solve delta b = c over the requested ring. Input must be a cocycle.
template <class T>
SolveOutcome<T> solve_coboundary(const Nerve& nv, const Cochain<T>& c, Ring ring, const T& zero) {
    if (c.degree < 1 || c.degree > 3) throw std::invalid_argument("solve degree out of range");
    if (!is_cocycle(nv, c, zero)) throw std::invalid_argument("solve input is not a cocycle");
    IntMat m = delta_matrix(nv, c.degree);
    std::size_t rows = nv.simplices(c.degree).size();
    std::size_t cols = nv.simplices(c.degree - 1).size();

    SolveOutcome<T> out;
    out.solution = Cochain<T>(c.degree - 1, std::vector<T>(cols, zero));
    out.representative = Cochain<T>(c.degree, std::vector<T>(rows, zero));
    out.degree = c.degree;
    std::size_t nslots = slot_count(zero);
    int violated = 0;
    for (std::size_t s = 0; s < nslots; ++s) {
        ScalarSolution sol;
        if (ring == Ring::Q) {
            std::vector<Rat> b(rows);
            for (std::size_t r = 0; r < rows; ++r) b[r] = slot_get(c.vals[r], s);
            sol = solve_scalar_q(m, b, cols);
        } else if (ring == Ring::Z) {
            std::vector<Int> b(rows);
            for (std::size_t r = 0; r < rows; ++r) {
                Rat v = slot_get(c.vals[r], s);
                if (!is_integer(v)) throw std::invalid_argument("Z-solve on non-integer data");
                b[r] = v.get_num();
            }
            sol = solve_scalar_z(m, b, cols);
        } else {
            std::vector<Rat> b(rows);
            for (std::size_t r = 0; r < rows; ++r) b[r] = mod1(slot_get(c.vals[r], s));
            sol = solve_scalar_circle(m, b, cols);
        }
        violated += sol.violated;
        for (std::size_t col = 0; col < cols; ++col) slot_set(out.solution.vals[col], s, sol.x[col]);
        for (std::size_t r = 0; r < rows; ++r) slot_set(out.representative.vals[r], s, sol.residual[r]);
    }
    out.ok = violated == 0;
    out.rank = violated;
    return out;
}

}  // namespace tdc
