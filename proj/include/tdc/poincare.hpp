#pragma once

#include "tdc/scalars.hpp"

namespace tdc {

// Scalar calculus of the Poincare bundle: transition cocycles and the
// translation multipliers that feed the eta-maps elsewhere.

// (x+z, x) |-> [z, x] on the n-fold bundle over T^{2n}.
inline Circle poi_transition(const IntVec& z, const RatVec& x) {
    return Circle(pairing(to_rat_vec(z), x));
}

// (a+m, a) |-> <m|B|a>_low for the matrix bundle over T^n.
inline Circle poiB_transition(const IntVec& m, const RatVec& a, const SkewIntMat& B) {
    return Circle(bracket_low(m, B, a));
}

// Defect of composing the lifts of two translations:
// r_a^* R_B(a') o R_B(a) = R_B(a'+a) . <a|B|a'>_low.
inline Circle translation_defect(const SkewIntMat& B, const RatVec& a, const RatVec& a2) {
    return Circle(bracket_low(a, B, a2));
}

// The block matrix of the n-fold Poincare bundle inside so(2n,Z).
inline SkewIntMat poincare_block(int n) {
    SkewIntMat B(2 * n);
    for (int p = 0; p < n; ++p) {
        B.at(n + p, p) = 1;
        B.at(p, n + p) = -1;
    }
    return B;
}

// Character of the Z^{2n}-shift of the n-fold bundle:
// eta_{m,mhat,a}(x,y) = -x.mhat + m.y - a.mhat,
// i.e. winding (-mhat | m) and constant -a.mhat.
inline AffChar poincare_shift_char(const IntVec& m, const IntVec& m_hat, const RatVec& a) {
    IntVec winding = concat(-m_hat, m);
    return AffChar(Circle(-dot(m_hat, a)), winding);
}

}  // namespace tdc
