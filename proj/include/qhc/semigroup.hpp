#pragma once

#include <vector>

namespace qhc {

class QuasiCurve;

/// A numerical semigroup <g_1, ..., g_k> (contains 0, cofinite in N_0).
class NumericalSemigroup {
public:
    /// Throws InputError unless the generators are positive with gcd 1.
    static NumericalSemigroup from_generators(std::vector<int> generators);
    /// N_0 = <1>.
    static NumericalSemigroup naturals() { return from_generators({1}); }

    const std::vector<int>& generators() const noexcept { return generators_; }
    const std::vector<int>& gaps() const noexcept { return gaps_; }
    int conductor() const noexcept { return conductor_; }
    int frobenius() const noexcept { return conductor_ - 1; }
    bool contains(long n) const;

private:
    std::vector<int> generators_;
    std::vector<int> gaps_;
    int conductor_ = 0;
};

/// gamma in S <=> g - gamma not in S for 0 <= gamma <= g; vacuous for N_0.
bool is_symmetric(const NumericalSemigroup& s);

/// Gamma_i = shift + value semigroup of the branch.
class ShiftedSemigroup {
public:
    ShiftedSemigroup(int shift, NumericalSemigroup base) : shift_(shift), base_(std::move(base)) {}

    int shift() const noexcept { return shift_; }
    const NumericalSemigroup& base() const noexcept { return base_; }
    int conductor() const noexcept { return shift_ + base_.conductor(); }
    int frobenius() const noexcept { return conductor() - 1; }
    bool contains(long gamma) const { return base_.contains(gamma - shift_); }

private:
    int shift_;
    NumericalSemigroup base_;
};

/// Gamma_i from the closed form: shift (w_f - w_i)/d_i over N_0 for an axis
/// branch or <w_x, w_y> for a binomial one. `branch` is 0-based.
ShiftedSemigroup gamma_formula(const QuasiCurve& curve, std::size_t branch);

/// Brute-force membership of t_i^gamma (zero on every other branch) in the
/// image of k[x,y], for gamma in [0, bound], by linear algebra degree by
/// degree. Independent of gamma_formula.
std::vector<bool> gamma_oracle(const QuasiCurve& curve, std::size_t branch, int bound);

} // namespace qhc
