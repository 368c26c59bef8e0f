#pragma once

#include "qhc/curve.hpp"
#include "qhc/linear.hpp"
#include "qhc/poly.hpp"

#include <vector>

namespace qhc {

/// A derivation of k[x,y] given by its images of x and y. On A it is well
/// defined when it maps f into (f).
struct Derivation {
    BiPoly px;
    BiPoly py;
    int weight = 0;

    BiPoly apply(const BiPoly& h) const { return px * h.partial_x() + py * h.partial_y(); }
};

/// E = w_x x d/dx + w_y y d/dy, weight 0.
Derivation euler(const QuasiCurve& curve);
/// D = f_y d/dx - f_x d/dy, weight w_f - w_x - w_y.
Derivation koszul(const QuasiCurve& curve);

/// [P, Q] = PQ - QP on coordinates.
Derivation commutator(const Derivation& p, const Derivation& q);

/// True when P(f) is divisible by f.
bool preserves_ideal(const QuasiCurve& curve, const Derivation& p);

/// Normal form of h modulo (f).
BiPoly reduce_mod_f(const QuasiCurve& curve, const BiPoly& h);

/// Canonical extension to the normalization: on branch i the derivation is
/// delta_i(t_i) * d/dt_i.
struct ExtendedDerivation {
    std::vector<UniPoly> deltas;

    UniPoly apply(std::size_t branch, const UniPoly& h) const { return deltas.at(branch) * h.derivative(); }
};

/// Solves delta_i from the chain rule on n_i(y) for an x-axis branch and on
/// n_i(x) otherwise, by exact division, then checks the other coordinate.
/// Throws ConsistencyError("inconsistent extension") or InexactDivision.
ExtendedDerivation extend(const QuasiCurve& curve, const Derivation& p);

/// Extended Koszul derivation: delta_i = beta_i t_i^{c_i}.
struct KoszulData {
    std::vector<FieldElement> beta;
    std::vector<int> c;
};

/// Reads beta_i and c_i off extend(koszul) and checks c_i against the
/// conductor of gamma_formula. Throws ConsistencyError on any mismatch.
KoszulData koszul_data(const QuasiCurve& curve);

/// q = ((beta_1/d_1) t_1^{g_1}, ..., (beta_r/d_r) t_r^{g_r}).
struct QElement {
    std::vector<FieldElement> coeff;
    std::vector<int> exponent;

    UniPoly component(std::size_t branch) const
    {
        return UniPoly::monomial(coeff.at(branch), exponent.at(branch));
    }
};

QElement q_element(const KoszulData& kd, const QuasiCurve& curve);

/// Outcome of the checks behind q in (A:m).
struct QVerification {
    bool d_equals_q_e = false;
    std::optional<Vector> qx_combination; ///< over monomials_of_weight(kw + w_x)
    std::optional<Vector> qy_combination; ///< over monomials_of_weight(kw + w_y)

    bool ok() const noexcept { return d_equals_q_e && qx_combination && qy_combination; }
};

/// Checks extend(D) = q * extend(E) per branch and q*x, q*y in A.
QVerification verify_q(const QuasiCurve& curve, const QElement& q);

} // namespace qhc
