#include "qhc/curve.hpp"

#include "qhc/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace qhc {

std::string to_string(BranchKind kind)
{
    switch (kind) {
    case BranchKind::AxisX:
        return "axis_x";
    case BranchKind::AxisY:
        return "axis_y";
    case BranchKind::Binomial:
        return "binomial";
    }
    return "?";
}

Weights infer_weights(const BiPoly& f)
{
    if (f.is_zero())
        throw InputError("cannot infer weights of the zero polynomial");
    const auto& terms = f.terms();
    const auto first = terms.begin()->first;
    std::optional<std::pair<int, int>> diff;
    for (const auto& [e, c] : terms)
        if (e != first) {
            diff = std::make_pair(e.first - first.first, e.second - first.second);
            break;
        }
    if (!diff)
        throw InputError("ambiguous weights: f is a single monomial");
    const auto [da, db] = *diff;
    // da*w_x + db*w_y = 0 with positive weights needs opposite signs.
    if (da == 0 || db == 0 || (da > 0) == (db > 0))
        throw InputError("not quasi-homogeneous: no positive weights balance " + f.to_string());
    const int g = std::gcd(da, db);
    const Weights w{std::abs(db) / g, std::abs(da) / g};
    if (!weighted_degree(f, w).homogeneous())
        throw InputError("not quasi-homogeneous: " + f.to_string());
    return w;
}

int branch_conductor(BranchKind kind, Weights w)
{
    return kind == BranchKind::Binomial ? (w.x - 1) * (w.y - 1) : 0;
}

namespace {

std::string binomial_equation(const FieldElement& a, int wx)
{
    return "(" + a.to_string() + ")*b^" + std::to_string(wx) + " + 1";
}

// Deterministic rational b with a*b^{w_x} = -1, when -1/a is rational.
std::optional<FieldElement> solve_b(const FieldElement& a, Weights w)
{
    if (!a.is_rational())
        return std::nullopt;
    std::vector<Rational> eq(static_cast<std::size_t>(w.x) + 1);
    eq.back() = 1;
    eq.front() = Rational(1) / a.rational_part();
    const auto roots = rational_roots(eq);
    if (roots.empty())
        return std::nullopt;
    return FieldElement(roots.front().value);
}

} // namespace

Branch make_branch(const BranchSpec& spec, Weights w, const Field& field)
{
    Branch br;
    br.kind = spec.kind;
    br.conductor = branch_conductor(spec.kind, w);
    const FieldElement one = field.one();
    switch (spec.kind) {
    case BranchKind::AxisX:
        br.weight = w.x;
        br.t_degree = w.y;
        br.ny = UniPoly::monomial(one, 1);
        br.polynomial = BiPoly::monomial(one, 1, 0);
        break;
    case BranchKind::AxisY:
        br.weight = w.y;
        br.t_degree = w.x;
        br.nx = UniPoly::monomial(one, 1);
        br.polynomial = BiPoly::monomial(one, 0, 1);
        break;
    case BranchKind::Binomial: {
        if (spec.a.is_zero())
            throw InputError("binomial branch needs a != 0");
        br.a = spec.a * one;
        if (spec.b) {
            br.b = *spec.b * one;
        } else {
            auto b = solve_b(br.a, w);
            if (!b)
                throw InputError("b_i not in field: " + binomial_equation(br.a, w.x));
            br.b = *b * one;
        }
        if (!(br.a * br.b.pow(static_cast<unsigned long>(w.x)) == FieldElement(-1L)))
            throw InputError("binomial branch violates a*b^w_x = -1: " + binomial_equation(br.a, w.x) +
                             " at b = " + br.b.to_string());
        br.weight = w.x * w.y;
        br.t_degree = 1;
        br.nx = UniPoly::monomial(one, w.x);
        br.ny = UniPoly::monomial(br.b, w.y);
        br.polynomial = BiPoly::monomial(one, w.y, 0) + BiPoly::monomial(br.a, 0, w.x);
        break;
    }
    }
    return br;
}

Factorization factor(const BiPoly& f, Weights w, const Field& field)
{
    const auto wd = weighted_degree(f, w);
    if (!wd.homogeneous() || *wd.degree <= 0)
        throw InputError("factor: f must be homogeneous of positive weight");

    int ax = std::numeric_limits<int>::max();
    int by = std::numeric_limits<int>::max();
    for (const auto& [e, c] : f.terms()) {
        ax = std::min(ax, e.first);
        by = std::min(by, e.second);
    }
    if (ax > 1 || by > 1)
        throw InputError("not reduced: f has a repeated axis factor");

    Factorization out;
    if (ax == 1)
        out.branches.push_back({BranchKind::AxisX, FieldElement(), std::nullopt});
    if (by == 1)
        out.branches.push_back({BranchKind::AxisY, FieldElement(), std::nullopt});

    // g = f / (x^ax y^by) = y^{s w_x} P(x^{w_y} / y^{w_x}).
    BiPoly g;
    for (const auto& [e, c] : f.terms())
        g += BiPoly::monomial(c, e.first - ax, e.second - by);
    const int W = *weighted_degree(g, w).degree;
    if (W == 0) {
        out.unit = g.coeff(0, 0) * field.one();
        return out;
    }
    const int s = W / (w.x * w.y);
    UniPoly P;
    for (const auto& [e, c] : g.terms())
        P += UniPoly::monomial(c, e.first / w.y);

    const FieldElement lead = P.terms().rbegin()->second;
    out.unit = lead * field.one();
    const bool rational_p =
        std::all_of(P.terms().begin(), P.terms().end(), [](const auto& t) { return t.second.is_rational(); });
    UniPoly residual = P * lead.inverse();
    std::vector<FieldElement> roots;
    if (rational_p) {
        std::vector<Rational> dense(static_cast<std::size_t>(s) + 1);
        for (const auto& [e, c] : P.terms())
            dense[static_cast<std::size_t>(e)] = c.rational_part();
        for (const auto& root : rational_roots(dense)) {
            if (root.multiplicity > 1)
                throw InputError("not reduced: repeated branch x^" + std::to_string(w.y) + " + (" +
                                 rational_to_string(-root.value) + ")*y^" + std::to_string(w.x));
            roots.emplace_back(root.value);
            UniPoly lin = UniPoly::monomial(FieldElement(1L), 1) - UniPoly::constant(FieldElement(root.value));
            residual = residual.exact_div(lin);
        }
    }
    if (static_cast<int>(roots.size()) < s)
        throw InputError("root not in field: " + residual.to_string("u"));

    std::vector<FieldElement> as;
    for (const auto& rho : roots)
        as.push_back(-rho);
    std::sort(as.begin(), as.end(), [](const FieldElement& l, const FieldElement& r) {
        return rational_root_less(l.rational_part(), r.rational_part());
    });
    for (const auto& a : as) {
        auto b = solve_b(a, w);
        if (!b)
            throw InputError("b_i not in field: " + binomial_equation(a, w.x));
        out.branches.push_back({BranchKind::Binomial, a * field.one(), *b * field.one()});
    }
    return out;
}

QuasiCurve::QuasiCurve(Field field, BiPoly f, std::optional<Weights> weights,
                       std::optional<std::vector<BranchSpec>> branches)
    : field_(std::move(field)), f_(std::move(f))
{
    if (f_.is_zero())
        throw InputError("f must be nonzero");
    weights_ = weights ? *weights : infer_weights(f_);
    if (weights_.x <= 0 || weights_.y <= 0 || std::gcd(weights_.x, weights_.y) != 1)
        throw InputError("weights must be positive and coprime");
    const auto wd = weighted_degree(f_, weights_);
    if (!wd.homogeneous()) {
        std::ostringstream degs;
        for (int d : wd.occurring)
            degs << (degs.tellp() > 0 ? "," : "") << d;
        throw InputError("not quasi-homogeneous for weights (" + std::to_string(weights_.x) + "," +
                         std::to_string(weights_.y) + "): degrees {" + degs.str() + "}");
    }
    wf_ = *wd.degree;
    if (wf_ <= 0)
        throw InputError("f must have positive weight");

    const bool supplied = branches.has_value();
    std::vector<BranchSpec> specs;
    if (supplied) {
        specs = std::move(*branches);
    } else {
        Factorization fac = factor(f_, weights_, field_);
        specs = std::move(fac.branches);
        unit_ = fac.unit;
    }
    if (specs.empty())
        throw InputError("a curve needs at least one branch");
    for (const auto& spec : specs)
        branches_.push_back(make_branch(spec, weights_, field_));

    for (std::size_t i = 0; i < branches_.size(); ++i)
        for (std::size_t j = i + 1; j < branches_.size(); ++j)
            if (branches_[i].polynomial == branches_[j].polynomial)
                throw InputError("not reduced: branch " + branches_[i].polynomial.to_string() + " repeats");

    BiPoly product = BiPoly::constant(field_.one());
    for (const auto& br : branches_)
        product *= br.polynomial;
    if (supplied) {
        const auto& [lead_exp, lead_c] = *f_.terms().rbegin();
        const FieldElement pc = product.coeff(lead_exp.first, lead_exp.second);
        if (pc.is_zero())
            throw InputError("branch product does not match f");
        unit_ = lead_c / pc;
    }
    if (!(product * unit_ == f_)) {
        const std::string msg = "branch product u*prod(f_i) = " + (product * unit_).to_string() +
                                " differs from f = " + f_.to_string();
        if (supplied)
            throw InputError(msg);
        throw ConsistencyError(msg);
    }
    for (std::size_t i = 0; i < branches_.size(); ++i)
        if (!f_.evaluate(branches_[i].nx, branches_[i].ny).is_zero())
            throw ConsistencyError("normalization of branch " + std::to_string(i + 1) + " does not kill f");
}

std::vector<int> QuasiCurve::t_degrees() const
{
    std::vector<int> out;
    for (const auto& br : branches_)
        out.push_back(br.t_degree);
    return out;
}

std::vector<BranchSpec> QuasiCurve::branch_specs() const
{
    std::vector<BranchSpec> out;
    for (const auto& br : branches_) {
        BranchSpec spec{br.kind, br.a, std::nullopt};
        if (br.kind == BranchKind::Binomial)
            spec.b = br.b;
        out.push_back(spec);
    }
    return out;
}

std::vector<UniPoly> normalization_image(const QuasiCurve& curve, const BiPoly& h)
{
    std::vector<UniPoly> out;
    out.reserve(curve.r());
    for (const auto& br : curve.branches())
        out.push_back(h.evaluate(br.nx, br.ny));
    return out;
}

std::optional<Vector> graded_member(const QuasiCurve& curve, const std::vector<UniPoly>& target, int degree)
{
    const bool target_zero =
        std::all_of(target.begin(), target.end(), [](const UniPoly& p) { return p.is_zero(); });
    const auto monos = monomials_of_weight(curve.weights(), degree);
    if (monos.empty()) {
        if (target_zero)
            return Vector{};
        return std::nullopt;
    }
    // Each branch image of a weight-`degree` monomial is c * t_i^{degree/d_i};
    // a tuple outside that shape cannot be a member.
    const std::size_t r = curve.r();
    for (std::size_t i = 0; i < r; ++i) {
        const int d = curve.branch(i).t_degree;
        for (const auto& [e, c] : target[i].terms())
            if (e * d != degree)
                return std::nullopt;
    }
    Matrix A(r, monos.size());
    for (std::size_t k = 0; k < monos.size(); ++k) {
        const auto img = normalization_image(curve, BiPoly::monomial(curve.field().one(), monos[k].first,
                                                                     monos[k].second));
        for (std::size_t i = 0; i < r; ++i)
            if (!img[i].is_zero())
                A(i, k) = img[i].terms().begin()->second;
    }
    Vector rhs(r);
    for (std::size_t i = 0; i < r; ++i)
        if (!target[i].is_zero())
            rhs[i] = target[i].terms().begin()->second;
    auto sol = linear_solve(A, rhs);
    return sol.solution;
}

} // namespace qhc
