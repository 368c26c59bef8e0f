#pragma once

#include "qhc/curve.hpp"
#include "qhc/poly.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qhc {

/// Basis element e_ij of the free cover; both indices are 0-based.
struct BasisIndex {
    int branch = 0;
    int index = 0;
    auto operator<=>(const BasisIndex&) const = default;
};

/// The ambient graded module k[t_1]^{s_1} + ... + k[t_r]^{s_r} with
/// deg e_ij = f_ij and deg t_i = d_i.
class FreeCover {
public:
    FreeCover() = default;
    FreeCover(std::vector<int> t_degrees, std::vector<std::vector<int>> shifts);

    std::size_t num_branches() const noexcept { return shifts_.size(); }
    int rank(std::size_t branch) const { return static_cast<int>(shifts_.at(branch).size()); }
    int total_rank() const noexcept;
    int shift(BasisIndex e) const;
    int t_degree(std::size_t branch) const { return t_degrees_.at(branch); }
    const std::vector<int>& t_degrees() const noexcept { return t_degrees_; }
    const std::vector<std::vector<int>>& shifts() const noexcept { return shifts_; }
    bool contains(BasisIndex e) const noexcept;

    /// All e_ij, branch-major.
    std::vector<BasisIndex> basis() const;
    /// Position of e in basis().
    std::size_t position(BasisIndex e) const;

    /// deg(t_i^e e_ij) = f_ij + e d_i.
    int degree(BasisIndex e, int exponent) const { return shift(e) + exponent * t_degree(static_cast<std::size_t>(e.branch)); }

    friend bool operator==(const FreeCover&, const FreeCover&) = default;

private:
    std::vector<int> t_degrees_;
    std::vector<std::vector<int>> shifts_;
};

/// An element sum a_ij e_ij of the free cover.
class ModuleElement {
public:
    using Entries = std::map<BasisIndex, UniPoly>;

    ModuleElement() = default;
    static ModuleElement term(BasisIndex e, const FieldElement& c, int exponent);

    bool is_zero() const noexcept { return entries_.empty(); }
    const Entries& entries() const noexcept { return entries_; }
    UniPoly entry(BasisIndex e) const;
    void add(BasisIndex e, const UniPoly& p);

    /// Multiplication by an element of the normalization, branch by branch.
    ModuleElement act(const std::vector<UniPoly>& a) const;
    /// The part supported on one branch.
    ModuleElement projection(int branch) const;

    /// Common degree of every term; nullopt for zero or mixed degrees.
    std::optional<int> degree(const FreeCover& cover) const;
    /// Homogeneous components keyed by degree.
    std::map<int, ModuleElement> components(const FreeCover& cover) const;

    ModuleElement& operator+=(const ModuleElement& rhs);
    ModuleElement& operator-=(const ModuleElement& rhs);
    ModuleElement& operator*=(const FieldElement& c);
    friend ModuleElement operator+(ModuleElement l, const ModuleElement& r) { return l += r; }
    friend ModuleElement operator-(ModuleElement l, const ModuleElement& r) { return l -= r; }
    friend ModuleElement operator*(ModuleElement l, const FieldElement& c) { return l *= c; }
    friend ModuleElement operator*(const FieldElement& c, ModuleElement r) { return r *= c; }
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

    /// e.g. "t1^2*e[1,1] - 3*t2*e[2,1]" with 1-based indices.
    std::string to_string() const;

private:
    Entries entries_;
};

/// A graded A-submodule of a free cover, given by homogeneous generators.
struct GradedSubmodule {
    FreeCover cover;
    std::vector<ModuleElement> generators;
    std::vector<int> weights; ///< w_l = deg m_l
};

/// Validates generators (nonzero, homogeneous, inside the cover, no negative
/// exponents) and records their weights. Throws InputError.
GradedSubmodule make_submodule(FreeCover cover, std::vector<ModuleElement> generators);

/// Checks that the cover matches the curve's branch count and t-degrees.
void check_compatible(const QuasiCurve& curve, const GradedSubmodule& m);

/// n(h) * m_l for a monomial h = x^a y^b of weight w - w_l.
struct SpanVector {
    std::size_t generator = 0;
    BiPoly::Exponent monomial{0, 0};
    ModuleElement value;
};

/// The k-spanning set of M_w.
std::vector<SpanVector> spanning_set(const QuasiCurve& curve, const GradedSubmodule& m, int w);

struct GradedPiece {
    int degree = 0;
    std::vector<ModuleElement> basis;
    std::size_t dimension() const noexcept { return basis.size(); }
};

/// Basis of M_w (reduced echelon form over the cover coordinates).
GradedPiece graded_piece(const QuasiCurve& curve, const GradedSubmodule& m, int w);

/// One summand coeff * x^{x_exp} y^{y_exp} * m_generator of a witness.
struct WitnessTerm {
    FieldElement coeff;
    std::size_t generator = 0;
    int x_exp = 0;
    int y_exp = 0;
};

struct Membership {
    bool member = false;
    std::vector<WitnessTerm> witness;
};

/// Membership of a homogeneous v in M with an explicit witness. Throws
/// InputError for non-homogeneous v.
Membership contains(const QuasiCurve& curve, const GradedSubmodule& m, const ModuleElement& v);

/// sum coeff * n(x^a y^b) * m_l over the witness.
ModuleElement recombine(const QuasiCurve& curve, const GradedSubmodule& m, const std::vector<WitnessTerm>& witness);

/// Re-embeds M so that on every branch the cover basis is a minimal
/// homogeneous basis of the k[t_i]-module spanned by the branch projections
/// (greedy by ascending degree, ties by generator order). Idempotent.
GradedSubmodule canonical_embedding(const QuasiCurve& curve, const GradedSubmodule& m);

struct ConditionVerdict {
    BasisIndex index;
    bool holds = false;
};

bool all_hold(const std::vector<ConditionVerdict>& v);

/// Some u in M_{f_ij} has branch-i component exactly e_ij.
std::vector<ConditionVerdict> check_C1(const QuasiCurve& curve, const GradedSubmodule& m);
/// t_i^{g_i} e_ij lies in M.
std::vector<ConditionVerdict> check_C2(const QuasiCurve& curve, const GradedSubmodule& m);

struct C3Verdict {
    bool holds = false;
    int lambda = 0;
};

/// All shifts f_ij equal a common lambda.
C3Verdict check_C3(const GradedSubmodule& m);

/// M(lambda): every shift and generator weight increased by lambda.
GradedSubmodule shift(const GradedSubmodule& m, int lambda);

/// max(w_l) + (w_f - w_x - w_y) + max_i(c_i d_i) + 2 max(w_x, w_y).
int default_degree_bound(const QuasiCurve& curve, const GradedSubmodule& m);

/// Lowest degree that can carry a nonzero element: min(w_l).
int min_degree(const GradedSubmodule& m);

} // namespace qhc
