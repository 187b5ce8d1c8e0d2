#pragma once

#include <json.hpp>

#include <string>
#include <variant>

#include "tdc/cocycle.hpp"
#include "tdc/solve.hpp"

namespace tdc {

using nlohmann::json;  // object keys are kept sorted, so dumps are canonical

inline std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

// ----- scalars ---------------------------------------------------------

inline json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}
inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer");
}

inline json rat_to_json(const Rat& v) { return json(rat_str(v)); }
inline Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected rational string");
}

inline json value_to_json(const Rat& v) { return rat_to_json(v); }
inline json value_to_json(const Circle& v) { return rat_to_json(v.v); }
inline json value_to_json(const Int& v) { return int_to_json(v); }
inline json value_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}
inline json value_to_json(const RatVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
}
inline json value_to_json(const SkewIntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.n; ++i) {
        json row = json::array();
        for (int j = 0; j < m.n; ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}
inline json value_to_json(const AffChar& v) {
    return json{{"const", rat_to_json(v.constant.v)}, {"winding", value_to_json(v.winding)}};
}

inline void value_from_json(const json& j, Rat& out) { out = rat_from_json(j); }
inline void value_from_json(const json& j, Circle& out) { out = Circle(rat_from_json(j)); }
inline void value_from_json(const json& j, Int& out) { out = int_from_json(j); }
inline void value_from_json(const json& j, IntVec& out) {
    if (!j.is_array()) throw std::invalid_argument("expected integer vector");
    out.clear();
    for (const auto& e : j) out.push_back(int_from_json(e));
}
inline void value_from_json(const json& j, RatVec& out) {
    if (!j.is_array()) throw std::invalid_argument("expected rational vector");
    out.clear();
    for (const auto& e : j) out.push_back(rat_from_json(e));
}
inline void value_from_json(const json& j, SkewIntMat& out) {
    if (!j.is_array()) throw std::invalid_argument("expected matrix");
    std::vector<std::vector<Int>> rows;
    for (const auto& r : j) {
        std::vector<Int> row;
        for (const auto& e : r) row.push_back(int_from_json(e));
        rows.push_back(row);
    }
    out = SkewIntMat::from_rows(rows);
}
inline void value_from_json(const json& j, AffChar& out) {
    out.constant = Circle(rat_from_json(j.at("const")));
    value_from_json(j.at("winding"), out.winding);
}

// ----- nerve ------------------------------------------------------------

inline json nerve_to_json(const Nerve& nv) {
    json verts = json::array();
    for (int v : nv.vertices) verts.push_back(v);
    json cells = json::array();
    for (int k = 1; k <= 3; ++k)
        for (const Simplex& s : nv.simplices(k)) {
            json c = json::array();
            for (int v : s) c.push_back(v);
            cells.push_back(c);
        }
    return json{{"simplices", cells}, {"vertices", verts}};
}

inline Nerve nerve_from_json(const json& j) {
    std::vector<int> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(v.get<int>());
    std::vector<Simplex> cells;
    for (const auto& c : j.at("simplices")) {
        Simplex s;
        for (const auto& v : c) s.push_back(v.get<int>());
        cells.push_back(s);
    }
    return Nerve::build(verts, cells);
}

// ----- cochains ----------------------------------------------------------

inline std::string simplex_key(const Simplex& s) {
    std::string k;
    for (std::size_t i = 0; i < s.size(); ++i) k += (i ? "," : "") + std::to_string(s[i]);
    return k;
}
inline Simplex simplex_from_key(const std::string& key) {
    Simplex s;
    std::size_t pos = 0;
    while (pos < key.size()) {
        std::size_t e = key.find(',', pos);
        if (e == std::string::npos) e = key.size();
        s.push_back(std::stoi(key.substr(pos, e - pos)));
        pos = e + 1;
    }
    return s;
}

template <class T>
json cochain_to_json(const Nerve& nv, const Cochain<T>& c) {
    json obj = json::object();
    const auto& cells = nv.simplices(c.degree);
    for (std::size_t i = 0; i < cells.size(); ++i)
        obj[simplex_key(cells[i])] = value_to_json(c.vals[i]);
    return obj;
}

template <class T>
Cochain<T> cochain_from_json(const Nerve& nv, int degree, const json& obj, const T& zero) {
    Cochain<T> c = Cochain<T>::zero_like(nv, degree, zero);
    if (obj.is_null()) return c;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        Simplex s = simplex_from_key(it.key());
        if (static_cast<int>(s.size()) != degree + 1)
            throw std::invalid_argument("cochain key degree mismatch: " + it.key());
        T v = zero;
        value_from_json(it.value(), v);
        c.at(nv, s) = v;
    }
    return c;
}

// ----- cocycles -----------------------------------------------------------

using AnyCocycle =
    std::variant<CocycleTB2, CocycleTB2R, CocycleTB1, CocycleTD, CocycleTDhalf, CocycleSO>;

inline std::string cocycle_type(const AnyCocycle& c) {
    switch (c.index()) {
        case 0: return "TB2";
        case 1: return "TB2R";
        case 2: return "TB1";
        case 3: return "TD";
        case 4: return "TDhalf";
        case 5: return "SO";
    }
    return "?";
}

inline json cocycle_to_json(const AnyCocycle& any) {
    json data = json::object();
    json out;
    std::visit(
        [&](const auto& x) {
            using X = std::decay_t<decltype(x)>;
            out["n"] = x.n;
            out["nerve"] = nerve_to_json(x.nerve);
            if constexpr (std::is_same_v<X, CocycleTB2>) {
                data["g"] = cochain_to_json(x.nerve, x.g);
                data["tau"] = cochain_to_json(x.nerve, x.tau);
            } else if constexpr (std::is_same_v<X, CocycleTB2R>) {
                data["a"] = cochain_to_json(x.nerve, x.a);
                data["m"] = cochain_to_json(x.nerve, x.m);
                data["tau"] = cochain_to_json(x.nerve, x.tau);
            } else if constexpr (std::is_same_v<X, CocycleTB1>) {
                data["B"] = cochain_to_json(x.nerve, x.B);
                data["a"] = cochain_to_json(x.nerve, x.a);
                data["m"] = cochain_to_json(x.nerve, x.m);
                data["tau"] = cochain_to_json(x.nerve, x.tau);
            } else if constexpr (std::is_same_v<X, CocycleTD>) {
                data["a"] = cochain_to_json(x.nerve, x.a);
                data["a_hat"] = cochain_to_json(x.nerve, x.a_hat);
                data["m"] = cochain_to_json(x.nerve, x.m);
                data["m_hat"] = cochain_to_json(x.nerve, x.m_hat);
                data["t"] = cochain_to_json(x.nerve, x.t);
            } else if constexpr (std::is_same_v<X, CocycleTDhalf>) {
                data["B"] = cochain_to_json(x.nerve, x.B);
                data["a"] = cochain_to_json(x.nerve, x.a);
                data["a_hat"] = cochain_to_json(x.nerve, x.a_hat);
                data["m"] = cochain_to_json(x.nerve, x.m);
                data["m_hat"] = cochain_to_json(x.nerve, x.m_hat);
                data["t"] = cochain_to_json(x.nerve, x.t);
            } else if constexpr (std::is_same_v<X, CocycleSO>) {
                data["B"] = cochain_to_json(x.nerve, x.B);
            }
        },
        any);
    out["type"] = cocycle_type(any);
    out["data"] = data;
    return out;
}

inline const json* field(const json& data, const char* key) {
    auto it = data.find(key);
    return it == data.end() ? nullptr : &*it;
}

inline bool dim_ok(const RatVec& v, int n) { return v.size() == static_cast<std::size_t>(n); }
inline bool dim_ok(const IntVec& v, int n) { return v.size() == static_cast<std::size_t>(n); }
inline bool dim_ok(const SkewIntMat& v, int n) { return v.n == n; }
inline bool dim_ok(const AffChar& v, int n) {
    return v.winding.size() == static_cast<std::size_t>(n);
}
inline bool dim_ok(const Circle&, int) { return true; }

template <class T>
void check_dims(const Cochain<T>& c, int n, const char* what) {
    for (const T& v : c.vals)
        if (!dim_ok(v, n))
            throw std::invalid_argument(std::string("dimension mismatch in field ") + what);
}

template <class T>
Cochain<T> load_field(const Nerve& nv, const json& data, const char* key, int degree,
                      const T& zero) {
    const json* f = field(data, key);
    if (!f) return Cochain<T>::zero_like(nv, degree, zero);
    return cochain_from_json(nv, degree, *f, zero);
}

inline AnyCocycle cocycle_from_json(const json& j) {
    std::string type = j.at("type").get<std::string>();
    int n = j.at("n").get<int>();
    Nerve nv = nerve_from_json(j.at("nerve"));
    json data = j.value("data", json::object());
    if (type == "TB2") {
        CocycleTB2 x{n, nv, load_field(nv, data, "g", 1, rat_vec_zero(n)),
                     load_field(nv, data, "tau", 2, AffChar::zero(n))};
        check_dims(x.g, n, "g");
        check_dims(x.tau, n, "tau");
        return x;
    }
    if (type == "TB2R") {
        CocycleTB2R x{n, nv, load_field(nv, data, "a", 1, rat_vec_zero(n)),
                      load_field(nv, data, "m", 2, int_vec_zero(n)),
                      load_field(nv, data, "tau", 2, AffChar::zero(n))};
        check_dims(x.a, n, "a");
        check_dims(x.m, n, "m");
        check_dims(x.tau, n, "tau");
        return x;
    }
    if (type == "TB1") {
        CocycleTB1 x{n,
                     nv,
                     load_field(nv, data, "B", 1, SkewIntMat::zero(n)),
                     load_field(nv, data, "a", 1, rat_vec_zero(n)),
                     load_field(nv, data, "m", 2, int_vec_zero(n)),
                     load_field(nv, data, "tau", 2, AffChar::zero(n))};
        check_dims(x.B, n, "B");
        check_dims(x.a, n, "a");
        check_dims(x.m, n, "m");
        check_dims(x.tau, n, "tau");
        return x;
    }
    if (type == "TD") {
        CocycleTD x{n,
                    nv,
                    load_field(nv, data, "a", 1, rat_vec_zero(n)),
                    load_field(nv, data, "a_hat", 1, rat_vec_zero(n)),
                    load_field(nv, data, "m", 2, int_vec_zero(n)),
                    load_field(nv, data, "m_hat", 2, int_vec_zero(n)),
                    load_field(nv, data, "t", 2, Circle())};
        check_dims(x.a, n, "a");
        check_dims(x.a_hat, n, "a_hat");
        check_dims(x.m, n, "m");
        check_dims(x.m_hat, n, "m_hat");
        return x;
    }
    if (type == "TDhalf") {
        CocycleTDhalf x{n,
                        nv,
                        load_field(nv, data, "B", 1, SkewIntMat::zero(n)),
                        load_field(nv, data, "a", 1, rat_vec_zero(n)),
                        load_field(nv, data, "a_hat", 1, rat_vec_zero(n)),
                        load_field(nv, data, "m", 2, int_vec_zero(n)),
                        load_field(nv, data, "m_hat", 2, int_vec_zero(n)),
                        load_field(nv, data, "t", 2, Circle())};
        check_dims(x.B, n, "B");
        check_dims(x.a, n, "a");
        check_dims(x.a_hat, n, "a_hat");
        check_dims(x.m, n, "m");
        check_dims(x.m_hat, n, "m_hat");
        return x;
    }
    if (type == "SO") {
        CocycleSO x{n, nv, load_field(nv, data, "B", 1, SkewIntMat::zero(n))};
        check_dims(x.B, n, "B");
        return x;
    }
    throw std::invalid_argument("unknown cocycle type: " + type);
}

// ----- gauges --------------------------------------------------------------

inline json gauge_to_json(const Nerve& nv, int n, const GaugeTB1& g) {
    json data;
    data["C"] = cochain_to_json(nv, g.C);
    data["z"] = cochain_to_json(nv, g.z);
    data["p"] = cochain_to_json(nv, g.p);
    data["eps"] = cochain_to_json(nv, g.eps);
    return json{{"type", "gauge"}, {"for", "TB1"}, {"n", n},
                {"nerve", nerve_to_json(nv)}, {"data", data}};
}

inline json gauge_to_json(const Nerve& nv, int n, const GaugeTDhalf& g) {
    json data;
    data["C"] = cochain_to_json(nv, g.C);
    data["z"] = cochain_to_json(nv, g.z);
    data["z_hat"] = cochain_to_json(nv, g.z_hat);
    data["p"] = cochain_to_json(nv, g.p);
    data["p_hat"] = cochain_to_json(nv, g.p_hat);
    data["e"] = cochain_to_json(nv, g.e);
    return json{{"type", "gauge"}, {"for", "TDhalf"}, {"n", n},
                {"nerve", nerve_to_json(nv)}, {"data", data}};
}

inline GaugeTB1 gauge_tb1_from_json(const json& j, const Nerve& nv, int n) {
    json data = j.value("data", json::object());
    GaugeTB1 g{load_field(nv, data, "C", 0, SkewIntMat::zero(n)),
               load_field(nv, data, "z", 1, int_vec_zero(n)),
               load_field(nv, data, "p", 0, rat_vec_zero(n)),
               load_field(nv, data, "eps", 1, AffChar::zero(n))};
    check_dims(g.C, n, "C");
    check_dims(g.z, n, "z");
    check_dims(g.p, n, "p");
    check_dims(g.eps, n, "eps");
    return g;
}

inline GaugeTDhalf gauge_tdhalf_from_json(const json& j, const Nerve& nv, int n) {
    json data = j.value("data", json::object());
    GaugeTDhalf g{load_field(nv, data, "C", 0, SkewIntMat::zero(n)),
                  load_field(nv, data, "z", 1, int_vec_zero(n)),
                  load_field(nv, data, "z_hat", 1, int_vec_zero(n)),
                  load_field(nv, data, "p", 0, rat_vec_zero(n)),
                  load_field(nv, data, "p_hat", 0, rat_vec_zero(n)),
                  load_field(nv, data, "e", 1, Circle())};
    check_dims(g.C, n, "C");
    check_dims(g.z, n, "z");
    check_dims(g.z_hat, n, "z_hat");
    check_dims(g.p, n, "p");
    check_dims(g.p_hat, n, "p_hat");
    return g;
}

// ----- obstructions ----------------------------------------------------------

template <class T>
json obstruction_to_json(const Nerve& nv, const SolveOutcome<T>& o, const std::string& locus) {
    json rep = cochain_to_json(nv, o.representative);
    return json{{"type", "obstruction"}, {"locus", locus},   {"degree", o.degree},
                {"rank", o.rank},        {"note", o.note},   {"representative", rep}};
}

}  // namespace tdc
