#include "qhc/derivation.hpp"

#include "qhc/error.hpp"
#include "qhc/semigroup.hpp"

namespace qhc {

Derivation euler(const QuasiCurve& curve)
{
    const Weights w = curve.weights();
    const FieldElement one = curve.field().one();
    return {BiPoly::monomial(one * FieldElement(static_cast<long>(w.x)), 1, 0),
            BiPoly::monomial(one * FieldElement(static_cast<long>(w.y)), 0, 1), 0};
}

Derivation koszul(const QuasiCurve& curve)
{
    return {curve.f().partial_y(), -curve.f().partial_x(), curve.koszul_weight()};
}

Derivation commutator(const Derivation& p, const Derivation& q)
{
    return {p.apply(q.px) - q.apply(p.px), p.apply(q.py) - q.apply(p.py), p.weight + q.weight};
}

bool preserves_ideal(const QuasiCurve& curve, const Derivation& p)
{
    return p.apply(curve.f()).div_rem(curve.f()).second.is_zero();
}

BiPoly reduce_mod_f(const QuasiCurve& curve, const BiPoly& h) { return h.div_rem(curve.f()).second; }

ExtendedDerivation extend(const QuasiCurve& curve, const Derivation& p)
{
    if (!preserves_ideal(curve, p))
        throw InputError("derivation does not preserve (f)");
    ExtendedDerivation out;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        const Branch& br = curve.branch(i);
        const UniPoly img_x = p.px.evaluate(br.nx, br.ny);
        const UniPoly img_y = p.py.evaluate(br.nx, br.ny);
        const bool use_y = br.kind == BranchKind::AxisX;
        const UniPoly& coord = use_y ? br.ny : br.nx;
        const UniPoly& image = use_y ? img_y : img_x;
        UniPoly delta = image.exact_div(coord.derivative());
        const UniPoly& other = use_y ? br.nx : br.ny;
        const UniPoly& other_image = use_y ? img_x : img_y;
        if (!(delta * other.derivative() == other_image))
            throw ConsistencyError("inconsistent extension on branch " + std::to_string(i + 1));
        out.deltas.push_back(std::move(delta));
    }
    return out;
}

KoszulData koszul_data(const QuasiCurve& curve)
{
    const ExtendedDerivation ext = extend(curve, koszul(curve));
    KoszulData kd;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        const UniPoly& delta = ext.deltas[i];
        if (!delta.is_monomial())
            throw ConsistencyError("extended Koszul derivation is not a monomial on branch " +
                                   std::to_string(i + 1) + ": " + delta.to_string());
        const auto& [e, c] = *delta.terms().begin();
        const int expected = gamma_formula(curve, i).conductor();
        if (e != expected)
            throw ConsistencyError("Koszul exponent " + std::to_string(e) + " differs from conductor " +
                                   std::to_string(expected) + " on branch " + std::to_string(i + 1));
        kd.beta.push_back(c);
        kd.c.push_back(e);
    }
    return kd;
}

QElement q_element(const KoszulData& kd, const QuasiCurve& curve)
{
    QElement q;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        q.coeff.push_back(kd.beta[i] / FieldElement(static_cast<long>(curve.branch(i).t_degree)));
        q.exponent.push_back(kd.c[i] - 1);
    }
    return q;
}

QVerification verify_q(const QuasiCurve& curve, const QElement& q)
{
    QVerification out;
    const ExtendedDerivation d = extend(curve, koszul(curve));
    const ExtendedDerivation e = extend(curve, euler(curve));
    out.d_equals_q_e = true;
    std::vector<UniPoly> qx;
    std::vector<UniPoly> qy;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        if (!(d.deltas[i] == q.component(i) * e.deltas[i]))
            out.d_equals_q_e = false;
        qx.push_back(q.component(i) * curve.branch(i).nx);
        qy.push_back(q.component(i) * curve.branch(i).ny);
    }
    const int kw = curve.koszul_weight();
    out.qx_combination = graded_member(curve, qx, kw + curve.weights().x);
    out.qy_combination = graded_member(curve, qy, kw + curve.weights().y);
    return out;
}

} // namespace qhc
