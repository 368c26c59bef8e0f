#pragma once

#include "qhc/field.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qhc {

/// Sparse univariate (Laurent) polynomial in t over a Field.
///
/// Elements of the normalization k[t_i] use nonnegative exponents only; the
/// element q lives in the fraction field and may carry t^{-1} on a smooth
/// branch, hence the signed exponent. Zero coefficients are never stored.
class UniPoly {
public:
    using Terms = std::map<int, FieldElement>;

    UniPoly() = default;
    static UniPoly monomial(const FieldElement& c, int e);
    static UniPoly constant(const FieldElement& c) { return monomial(c, 0); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    const Terms& terms() const noexcept { return terms_; }
    /// Highest exponent; nullopt for zero.
    std::optional<int> degree() const;
    /// Lowest exponent; nullopt for zero.
    std::optional<int> low_degree() const;
    FieldElement coeff(int e) const;

    UniPoly derivative() const;
    UniPoly pow(unsigned e) const;

    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const FieldElement& c);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(UniPoly lhs, const FieldElement& c) { return lhs *= c; }
    friend UniPoly operator*(const FieldElement& c, UniPoly rhs) { return rhs *= c; }
    UniPoly operator-() const;

    friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) { return lhs.terms_ == rhs.terms_; }

    /// Polynomial long division by a nonzero divisor.
    std::pair<UniPoly, UniPoly> div_rem(const UniPoly& divisor) const;
    /// Throws InexactDivision carrying the remainder when it is nonzero.
    UniPoly exact_div(const UniPoly& divisor) const;

    std::string to_string(const std::string& var = "t") const;

private:
    void add_term(int e, const FieldElement& c);
    Terms terms_;
};

/// (w_x, w_y): positive coprime weights of x and y.
struct Weights {
    int x = 1;
    int y = 1;
    friend bool operator==(const Weights&, const Weights&) = default;
};

/// Outcome of weighted_degree: `degree` is set iff every term shares it.
struct WeightedDegree {
    std::optional<int> degree;
    std::set<int> occurring;
    bool homogeneous() const noexcept { return degree.has_value(); }
};

/// Sparse polynomial in k[x,y]; keys are (x-exponent, y-exponent).
class BiPoly {
public:
    using Exponent = std::pair<int, int>;
    using Terms = std::map<Exponent, FieldElement>;

    BiPoly() = default;
    static BiPoly monomial(const FieldElement& c, int a, int b);
    static BiPoly constant(const FieldElement& c) { return monomial(c, 0, 0); }
    static BiPoly x() { return monomial(FieldElement(1L), 1, 0); }
    static BiPoly y() { return monomial(FieldElement(1L), 0, 1); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const Terms& terms() const noexcept { return terms_; }
    FieldElement coeff(int a, int b) const;

    BiPoly partial_x() const;
    BiPoly partial_y() const;
    BiPoly pow(unsigned e) const;

    /// h(X, Y) for univariate substitutes X, Y.
    UniPoly evaluate(const UniPoly& X, const UniPoly& Y) const;

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);
    BiPoly& operator*=(const BiPoly& rhs);
    BiPoly& operator*=(const FieldElement& c);

    friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
    friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
    friend BiPoly operator*(BiPoly lhs, const BiPoly& rhs) { return lhs *= rhs; }
    friend BiPoly operator*(BiPoly lhs, const FieldElement& c) { return lhs *= c; }
    friend BiPoly operator*(const FieldElement& c, BiPoly rhs) { return rhs *= c; }
    BiPoly operator-() const;

    friend bool operator==(const BiPoly& lhs, const BiPoly& rhs) { return lhs.terms_ == rhs.terms_; }

    /// Division with remainder by a single divisor, lex order x > y. The
    /// remainder is the normal form modulo (divisor) since {divisor} is a
    /// Groebner basis of the principal ideal it generates.
    std::pair<BiPoly, BiPoly> div_rem(const BiPoly& divisor) const;
    BiPoly exact_div(const BiPoly& divisor) const;

    std::string to_string() const;

private:
    void add_term(const Exponent& e, const FieldElement& c);
    Terms terms_;
};

/// Weighted degree of every term under `w`. Throws InputError on zero.
WeightedDegree weighted_degree(const BiPoly& p, Weights w);

/// All (a, b) >= 0 with a*w.x + b*w.y == total, ordered by ascending a.
std::vector<BiPoly::Exponent> monomials_of_weight(Weights w, int total);

/// A rational root together with its multiplicity.
struct RationalRoot {
    Rational value;
    int multiplicity = 1;
};

/// Orders rationals for deterministic root choice: ascending |numerator|,
/// then ascending denominator, positive before negative.
bool rational_root_less(const Rational& a, const Rational& b);

/// Rational roots of sum coeffs[j] u^j (rational coefficients, not all zero),
/// sorted by rational_root_less.
std::vector<RationalRoot> rational_roots(const std::vector<Rational>& coeffs);

/// Pretty-prints a dense rational polynomial in `var`.
std::string dense_to_string(const std::vector<Rational>& coeffs, const std::string& var);

} // namespace qhc
