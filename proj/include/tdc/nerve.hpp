#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "tdc/scalars.hpp"

namespace tdc {

using Simplex = std::vector<int>;  // strictly ascending vertex ids

// Finite nerve of a cover: simplices of dimension <= 3, closed under faces.
// Only ascending tuples are stored; every equation in the engine is
// evaluated on ascending tuples.
struct Nerve {
    std::vector<int> vertices;                 // sorted ascending
    std::array<std::vector<Simplex>, 4> simp;  // simp[k]: k-simplices, lexicographic

    static Nerve build(std::vector<int> verts, const std::vector<Simplex>& cells) {
        Nerve nv;
        std::set<int> vs(verts.begin(), verts.end());
        std::array<std::set<Simplex>, 4> by_dim;
        for (const Simplex& raw : cells) {
            Simplex s = raw;
            std::sort(s.begin(), s.end());
            if (std::adjacent_find(s.begin(), s.end()) != s.end())
                throw std::invalid_argument("simplex with repeated vertex");
            if (s.size() < 1 || s.size() > 4)
                throw std::invalid_argument("nerve dimension capped at 3 (tetrahedra)");
            for (int v : s) vs.insert(v);
            // close under faces
            std::size_t k = s.size();
            for (std::size_t mask = 1; mask < (1u << k); ++mask) {
                Simplex f;
                for (std::size_t b = 0; b < k; ++b)
                    if (mask & (1u << b)) f.push_back(s[b]);
                if (f.size() >= 2) by_dim[f.size() - 1].insert(f);
            }
        }
        nv.vertices.assign(vs.begin(), vs.end());
        for (int v : nv.vertices) nv.simp[0].push_back({v});
        for (int k = 1; k <= 3; ++k) nv.simp[k].assign(by_dim[k].begin(), by_dim[k].end());
        return nv;
    }

    const std::vector<Simplex>& simplices(int k) const {
        if (k < 0 || k > 3) throw std::invalid_argument("degree out of range");
        return simp[k];
    }

    int index_of(int k, const Simplex& s) const {
        const auto& v = simplices(k);
        auto it = std::lower_bound(v.begin(), v.end(), s);
        if (it == v.end() || *it != s) throw std::invalid_argument("simplex not in nerve");
        return static_cast<int>(it - v.begin());
    }

    bool has(int k, const Simplex& s) const {
        const auto& v = simplices(k);
        auto it = std::lower_bound(v.begin(), v.end(), s);
        return it != v.end() && *it == s;
    }

    bool same_as(const Nerve& o) const { return vertices == o.vertices && simp == o.simp; }
};

inline Nerve nerve_circle3() { return Nerve::build({0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}); }
inline Nerve nerve_cone() { return Nerve::build({0, 1, 2, 3}, {{0, 1, 2, 3}}); }
inline Nerve nerve_sphere() {
    return Nerve::build({0, 1, 2, 3}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Degree-k data on the nerve's k-simplices, total, aligned with simplex order.
template <class T>
struct Cochain {
    int degree = 0;
    std::vector<T> vals;

    Cochain() = default;
    Cochain(int deg, std::vector<T> v) : degree(deg), vals(std::move(v)) {}

    static Cochain zero_like(const Nerve& nv, int deg, const T& zero) {
        return Cochain(deg, std::vector<T>(nv.simplices(deg).size(), zero));
    }

    const T& at(const Nerve& nv, const Simplex& s) const { return vals[nv.index_of(degree, s)]; }
    T& at(const Nerve& nv, const Simplex& s) { return vals[nv.index_of(degree, s)]; }

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree == b.degree && a.vals == b.vals;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }
};

template <class T>
Cochain<T> cochain_add(const Cochain<T>& a, const Cochain<T>& b) {
    if (a.degree != b.degree || a.vals.size() != b.vals.size())
        throw std::invalid_argument("cochain shape mismatch");
    Cochain<T> r = a;
    for (std::size_t i = 0; i < r.vals.size(); ++i) r.vals[i] = a.vals[i] + b.vals[i];
    return r;
}

template <class T>
Cochain<T> cochain_neg(const Cochain<T>& a) {
    Cochain<T> r = a;
    for (auto& v : r.vals) v = -v;
    return r;
}

template <class T>
Cochain<T> cochain_sub(const Cochain<T>& a, const Cochain<T>& b) {
    return cochain_add(a, cochain_neg(b));
}

// (delta c)_{i0..i_{k+1}} = sum_r (-1)^r c_{.. drop i_r ..}
template <class T>
Cochain<T> coboundary(const Nerve& nv, const Cochain<T>& c, const T& zero) {
    int k = c.degree;
    if (k >= 3) return Cochain<T>(k + 1, {});
    const auto& top = nv.simplices(k + 1);
    Cochain<T> out(k + 1, std::vector<T>(top.size(), zero));
    for (std::size_t s = 0; s < top.size(); ++s) {
        const Simplex& t = top[s];
        T acc = zero;
        for (std::size_t r = 0; r < t.size(); ++r) {
            Simplex face;
            for (std::size_t q = 0; q < t.size(); ++q)
                if (q != r) face.push_back(t[q]);
            const T& v = c.at(nv, face);
            if (r % 2 == 0)
                acc = acc + v;
            else
                acc = acc - v;
        }
        out.vals[s] = acc;
    }
    return out;
}

template <class T>
bool is_cocycle(const Nerve& nv, const Cochain<T>& c, const T& zero) {
    if (c.degree >= 3) return true;
    Cochain<T> d = coboundary(nv, c, zero);
    for (const auto& v : d.vals)
        if (!(v == zero)) return false;
    return true;
}

// Front-face/back-face cup product on ascending tuples:
// (a u b)_{i0..i_{k+l}} = a_{i0..ik} * b_{ik..i_{k+l}}.
template <class T>
Cochain<T> cup(const Nerve& nv, const Cochain<T>& a, const Cochain<T>& b) {
    int k = a.degree, l = b.degree;
    if (k + l > 3) throw std::invalid_argument("cup degree exceeds nerve dimension cap");
    const auto& top = nv.simplices(k + l);
    std::vector<T> vals;
    vals.reserve(top.size());
    for (const Simplex& s : top) {
        Simplex front(s.begin(), s.begin() + k + 1);
        Simplex back(s.begin() + k, s.end());
        vals.push_back(a.at(nv, front) * b.at(nv, back));
    }
    return Cochain<T>(k + l, std::move(vals));
}

}  // namespace tdc
