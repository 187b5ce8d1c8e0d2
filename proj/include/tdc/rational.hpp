#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tdc {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat_of(const Int& num, const Int& den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p" or "p/q"; result is reduced with positive denominator.
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Representative of r mod 1 in [0,1).
inline Rat mod1(const Rat& r) {
    Rat out = r - Rat(rat_floor(r));
    out.canonicalize();
    return out;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("integer too large: " + v.get_str());
    return v.get_si();
}

}  // namespace tdc
