#pragma once

#include "qhc/derivation.hpp"
#include "qhc/module.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qhc {

/// Which route produced the connection.
enum class ConnectionPath {
    C2,              ///< (C1) and (C2) hold on the embedded module
    C3Shift,         ///< (C1) and (C3) hold; the connection lives on M(-lambda)
    DirectStability, ///< neither condition, but nabla_D(M) is inside M anyway
    None,
};

std::string to_string(ConnectionPath path);

/// nabla_E scales the weight-w component by w.
ModuleElement apply_nabla_E(const FreeCover& cover, const ModuleElement& v);

/// nabla_D = q * nabla_E: the weight-w component is scaled by w and its
/// branch-i entries multiplied by (beta_i/d_i) t_i^{g_i}.
ModuleElement apply_nabla_D(const FreeCover& cover, const QElement& q, const ModuleElement& v);

struct StabilityEntry {
    std::size_t generator = 0;
    ModuleElement image; ///< nabla_D(m_l)
    Membership membership;
};

struct StabilityResult {
    bool stable = false;
    std::vector<StabilityEntry> entries;
};

/// Tests nabla_D(m_l) in M for every generator. Generators suffice because
/// nabla_D(a m) = a nabla_D(m) + D(a) m with D(a) in A.
StabilityResult check_stability(const QuasiCurve& curve, const GradedSubmodule& m, const QElement& q);

struct VerificationSummary {
    int leibniz = 0;    ///< samples passing the Leibniz rule for E and D
    int graded = 0;     ///< graded-piece basis vectors checked for gradedness
    int integrable = 0; ///< basis vectors checked for [nabla_E, nabla_D] = kw nabla_D
    int degree_bound = 0;
    int samples = 0;
    std::uint64_t seed = 0;
};

struct ConnectionReport {
    ConnectionPath path = ConnectionPath::None;
    std::optional<int> lambda;
    GradedSubmodule embedded; ///< after canonical_embedding
    GradedSubmodule working;  ///< the module carrying nabla
    std::vector<ConditionVerdict> c1;
    std::vector<ConditionVerdict> c2;
    C3Verdict c3;
    KoszulData koszul;
    QElement q;
    StabilityResult stability; ///< on `working`
    std::optional<VerificationSummary> verified;

    bool success() const noexcept { return path != ConnectionPath::None; }
};

/// canonical_embedding, then (C1)+(C2), else (C1)+(C3) on M(-lambda), else a
/// direct stability check. Failure to find a connection is a report outcome;
/// ConsistencyError signals a broken identity.
ConnectionReport natural_connection(const QuasiCurve& curve, const GradedSubmodule& m);

/// Exact checks on the connection of a successful report: the Leibniz rule
/// for E and D on `samples` random pairs (a, v), gradedness and the
/// commutator identity on every graded-piece basis vector up to
/// `degree_bound`. Throws ConsistencyError naming the first failing sample.
VerificationSummary verify_properties(const QuasiCurve& curve, const ConnectionReport& report, int degree_bound,
                                      int samples, std::uint64_t seed);

} // namespace qhc
