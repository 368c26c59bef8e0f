#include "qhc/connection.hpp"

#include "qhc/error.hpp"

#include <random>

namespace qhc {

std::string to_string(ConnectionPath path)
{
    switch (path) {
    case ConnectionPath::C2:
        return "C2-path";
    case ConnectionPath::C3Shift:
        return "C3-shift-path";
    case ConnectionPath::DirectStability:
        return "direct-stability";
    case ConnectionPath::None:
        return "none";
    }
    return "?";
}

ModuleElement apply_nabla_E(const FreeCover& cover, const ModuleElement& v)
{
    ModuleElement out;
    for (const auto& [w, part] : v.components(cover))
        out += part * FieldElement(static_cast<long>(w));
    return out;
}

ModuleElement apply_nabla_D(const FreeCover& cover, const QElement& q, const ModuleElement& v)
{
    std::vector<UniPoly> qs;
    for (std::size_t i = 0; i < q.coeff.size(); ++i)
        qs.push_back(q.component(i));
    return apply_nabla_E(cover, v).act(qs);
}

StabilityResult check_stability(const QuasiCurve& curve, const GradedSubmodule& m, const QElement& q)
{
    StabilityResult out;
    out.stable = true;
    for (std::size_t l = 0; l < m.generators.size(); ++l) {
        StabilityEntry entry;
        entry.generator = l;
        entry.image = apply_nabla_D(m.cover, q, m.generators[l]);
        entry.membership = contains(curve, m, entry.image);
        if (entry.membership.member && !(recombine(curve, m, entry.membership.witness) == entry.image))
            throw ConsistencyError("membership witness does not reproduce nabla_D(m_" + std::to_string(l + 1) + ")");
        out.stable = out.stable && entry.membership.member;
        out.entries.push_back(std::move(entry));
    }
    return out;
}

ConnectionReport natural_connection(const QuasiCurve& curve, const GradedSubmodule& m)
{
    check_compatible(curve, m);
    ConnectionReport report;
    report.embedded = canonical_embedding(curve, m);
    report.c1 = check_C1(curve, report.embedded);
    report.c2 = check_C2(curve, report.embedded);
    report.c3 = check_C3(report.embedded);
    report.koszul = koszul_data(curve);
    report.q = q_element(report.koszul, curve);
    if (!verify_q(curve, report.q).ok())
        throw ConsistencyError("q fails D = qE or q*(x, y) in A");

    const bool c1 = all_hold(report.c1);
    if (c1 && all_hold(report.c2)) {
        report.path = ConnectionPath::C2;
        report.working = report.embedded;
    } else if (c1 && report.c3.holds) {
        report.path = ConnectionPath::C3Shift;
        report.lambda = report.c3.lambda;
        report.working = shift(report.embedded, -report.c3.lambda);
    } else {
        report.working = report.embedded;
    }
    report.stability = check_stability(curve, report.working, report.q);
    if (report.path == ConnectionPath::None) {
        if (report.stability.stable)
            report.path = ConnectionPath::DirectStability;
    } else if (!report.stability.stable) {
        throw ConsistencyError(to_string(report.path) + " conditions hold but nabla_D(M) is not inside M");
    }
    return report;
}

namespace {

std::string describe(const char* what, int w, const ModuleElement& v)
{
    return std::string(what) + " fails in degree " + std::to_string(w) + " on " + v.to_string();
}

} // namespace

VerificationSummary verify_properties(const QuasiCurve& curve, const ConnectionReport& report, int degree_bound,
                                      int samples, std::uint64_t seed)
{
    if (!report.success())
        throw InputError("verify_properties needs a report with a connection");
    const GradedSubmodule& m = report.working;
    const FreeCover& cover = m.cover;
    const QElement& q = report.q;
    const int kw = curve.koszul_weight();
    const int lo = min_degree(m);

    VerificationSummary summary;
    summary.degree_bound = degree_bound;
    summary.samples = samples;
    summary.seed = seed;

    // Gradedness and the commutator identity on graded-piece bases.
    for (int w = lo; w <= degree_bound; ++w) {
        for (const auto& b : graded_piece(curve, m, w).basis) {
            const ModuleElement e_img = apply_nabla_E(cover, b);
            if (!(e_img == b * FieldElement(static_cast<long>(w))))
                throw ConsistencyError(describe("nabla_E = w*id", w, b));
            const ModuleElement d_img = apply_nabla_D(cover, q, b);
            if (!d_img.is_zero() && d_img.degree(cover) != std::optional<int>(w + kw))
                throw ConsistencyError(describe("degree shift of nabla_D", w, b));
            if (!contains(curve, m, d_img).member)
                throw ConsistencyError(describe("nabla_D(M_w) in M", w, b));
            ++summary.graded;

            const ModuleElement lhs =
                apply_nabla_E(cover, d_img) - apply_nabla_D(cover, q, e_img);
            if (!(lhs == d_img * FieldElement(static_cast<long>(kw))))
                throw ConsistencyError(describe("[nabla_E, nabla_D] = kw*nabla_D", w, b));
            ++summary.integrable;
        }
    }

    // Leibniz rule on random homogeneous pairs.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(-3, 3);
    const Derivation E = euler(curve);
    const Derivation D = koszul(curve);
    std::vector<int> a_weights;
    for (int a = 0; a <= degree_bound; ++a)
        if (!monomials_of_weight(curve.weights(), a).empty())
            a_weights.push_back(a);
    std::vector<int> v_weights;
    for (int w = lo; w <= degree_bound; ++w)
        if (!spanning_set(curve, m, w).empty())
            v_weights.push_back(w);
    if (v_weights.empty())
        return summary;
    auto pick = [&](const std::vector<int>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };

    for (int s = 0; s < samples; ++s) {
        const int aw = pick(a_weights);
        BiPoly a;
        for (const auto& [i, j] : monomials_of_weight(curve.weights(), aw))
            a += BiPoly::monomial(curve.field().one() * FieldElement(static_cast<long>(coeff(rng))), i, j);
        const int vw = pick(v_weights);
        ModuleElement v;
        for (const auto& sv : spanning_set(curve, m, vw))
            v += sv.value * FieldElement(static_cast<long>(coeff(rng)));

        const auto na = normalization_image(curve, a);
        const ModuleElement av = v.act(na);
        for (const Derivation* P : {&E, &D}) {
            const bool is_d = P == &D;
            auto nabla = [&](const ModuleElement& x) {
                return is_d ? apply_nabla_D(cover, q, x) : apply_nabla_E(cover, x);
            };
            const ModuleElement lhs = nabla(av);
            const ModuleElement rhs = nabla(v).act(na) + v.act(normalization_image(curve, P->apply(a)));
            if (!(lhs == rhs))
                throw ConsistencyError(std::string("Leibniz rule for ") + (is_d ? "D" : "E") + " fails at a = " +
                                       a.to_string() + ", v = " + v.to_string());
        }
        ++summary.leibniz;
    }
    return summary;
}

} // namespace qhc
