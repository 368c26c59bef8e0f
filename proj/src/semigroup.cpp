#include "qhc/semigroup.hpp"

#include "qhc/curve.hpp"
#include "qhc/error.hpp"

#include <algorithm>
#include <numeric>

namespace qhc {

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> generators)
{
    if (generators.empty())
        throw InputError("a numerical semigroup needs at least one generator");
    int g = 0;
    for (int x : generators) {
        if (x <= 0)
            throw InputError("semigroup generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1)
        throw InputError("semigroup generators have gcd " + std::to_string(g) + ", expected 1");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    NumericalSemigroup s;
    s.generators_ = generators;
    // Schur: the conductor is at most (min - 1)(max - 1).
    const int lo = generators.front();
    const int hi = generators.back();
    const int limit = (lo - 1) * (hi - 1) + lo;
    std::vector<char> member(static_cast<std::size_t>(limit) + 1, 0);
    member[0] = 1;
    for (int n = 1; n <= limit; ++n)
        for (int x : generators)
            if (x <= n && member[static_cast<std::size_t>(n - x)]) {
                member[static_cast<std::size_t>(n)] = 1;
                break;
            }
    for (int n = 0; n <= limit; ++n)
        if (!member[static_cast<std::size_t>(n)])
            s.gaps_.push_back(n);
    s.conductor_ = s.gaps_.empty() ? 0 : s.gaps_.back() + 1;
    return s;
}

bool NumericalSemigroup::contains(long n) const
{
    if (n < 0)
        return false;
    if (n >= conductor_)
        return true;
    return !std::binary_search(gaps_.begin(), gaps_.end(), static_cast<int>(n));
}

bool is_symmetric(const NumericalSemigroup& s)
{
    const int g = s.frobenius();
    for (int gamma = 0; gamma <= g; ++gamma)
        if (s.contains(gamma) == s.contains(g - gamma))
            return false;
    return true;
}

ShiftedSemigroup gamma_formula(const QuasiCurve& curve, std::size_t branch)
{
    const Branch& br = curve.branch(branch);
    const int num = curve.wf() - br.weight;
    if (num % br.t_degree != 0)
        throw ConsistencyError("shift (w_f - w_i)/d_i is not integral on branch " + std::to_string(branch + 1));
    const Weights w = curve.weights();
    NumericalSemigroup base = br.kind == BranchKind::Binomial ? NumericalSemigroup::from_generators({w.x, w.y})
                                                              : NumericalSemigroup::naturals();
    return {num / br.t_degree, std::move(base)};
}

std::vector<bool> gamma_oracle(const QuasiCurve& curve, std::size_t branch, int bound)
{
    const int d = curve.branch(branch).t_degree;
    std::vector<bool> member;
    member.reserve(static_cast<std::size_t>(std::max(bound + 1, 0)));
    for (int gamma = 0; gamma <= bound; ++gamma) {
        std::vector<UniPoly> target(curve.r());
        target[branch] = UniPoly::monomial(curve.field().one(), gamma);
        member.push_back(graded_member(curve, target, gamma * d).has_value());
    }
    return member;
}

} // namespace qhc
