#pragma once

#include "qhc/field.hpp"
#include "qhc/linear.hpp"
#include "qhc/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhc {

enum class BranchKind { AxisX, AxisY, Binomial };

std::string to_string(BranchKind kind);

/// A branch as supplied by a caller or produced by factorization:
/// x, y, or x^{w_y} + a*y^{w_x}. `b` may be left empty and is then solved
/// for over the rationals.
struct BranchSpec {
    BranchKind kind = BranchKind::AxisX;
    FieldElement a;
    std::optional<FieldElement> b;
};

/// One irreducible factor f_i together with its normalization k[t_i].
struct Branch {
    BranchKind kind = BranchKind::AxisX;
    FieldElement a; ///< Binomial only.
    FieldElement b; ///< Binomial only; a * b^{w_x} = -1.
    int weight = 0;    ///< w_i = deg f_i
    int t_degree = 1;  ///< d_i = deg t_i
    int conductor = 0; ///< c(A_i)
    UniPoly nx;        ///< n_i(x)
    UniPoly ny;        ///< n_i(y)
    BiPoly polynomial; ///< f_i
};

Weights infer_weights(const BiPoly& f);

/// 0 for the axes, (w_x - 1)(w_y - 1) for a binomial branch.
int branch_conductor(BranchKind kind, Weights w);

/// Builds the normalization data of a single branch and checks
/// a != 0 and a * b^{w_x} = -1.
Branch make_branch(const BranchSpec& spec, Weights w, const Field& field);

struct Factorization {
    FieldElement unit;
    std::vector<BranchSpec> branches;
};

/// Splits a quasi-homogeneous f into u * f_1 ... f_r. Axis factors come from
/// exponent minima; the binomial factors from the rational roots of the
/// substitution polynomial P(u) with u = x^{w_y} / y^{w_x}. Branch order is
/// x, y, then binomials by their a_i.
Factorization factor(const BiPoly& f, Weights w, const Field& field);

/// A reduced quasi-homogeneous plane curve k[x,y]/(f) with its branches.
class QuasiCurve {
public:
    /// Factors f automatically (weights inferred when absent), or validates
    /// the supplied branch list against f.
    QuasiCurve(Field field, BiPoly f, std::optional<Weights> weights = std::nullopt,
               std::optional<std::vector<BranchSpec>> branches = std::nullopt);

    const Field& field() const noexcept { return field_; }
    Weights weights() const noexcept { return weights_; }
    const BiPoly& f() const noexcept { return f_; }
    int wf() const noexcept { return wf_; }
    const FieldElement& unit() const noexcept { return unit_; }
    const std::vector<Branch>& branches() const noexcept { return branches_; }
    const Branch& branch(std::size_t i) const { return branches_.at(i); }
    std::size_t r() const noexcept { return branches_.size(); }

    /// Weight of the Koszul derivation, w_f - w_x - w_y.
    int koszul_weight() const noexcept { return wf_ - weights_.x - weights_.y; }

    std::vector<int> t_degrees() const;
    std::vector<BranchSpec> branch_specs() const;

private:
    Field field_;
    BiPoly f_;
    Weights weights_;
    int wf_ = 0;
    FieldElement unit_;
    std::vector<Branch> branches_;
};

/// Component i is h(n_i(x), n_i(y)).
std::vector<UniPoly> normalization_image(const QuasiCurve& curve, const BiPoly& h);

/// Decides whether the tuple `target` lies in the degree-`degree` piece of
/// n(k[x,y]). On success returns coefficients over monomials_of_weight().
std::optional<Vector> graded_member(const QuasiCurve& curve, const std::vector<UniPoly>& target, int degree);

} // namespace qhc
