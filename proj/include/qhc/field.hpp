#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace qhc {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws InputError.
Rational parse_rational(const std::string& text);

/// Canonical "p/q" spelling used by the JSON encoding (den > 0, gcd 1).
std::string rational_to_fraction(const Rational& q);

/// Short human spelling: "p" for integers, "p/q" otherwise.
std::string rational_to_string(const Rational& q);

class FieldElement;

/// The coefficient field k, realized as Q or Q[a]/(p) for a monic p.
///
/// The minimal polynomial is stored with ascending coefficients and a
/// trailing 1. Its irreducibility is trusted input; a reducible p surfaces
/// as a ConsistencyError the first time a zero divisor is inverted.
/// Field is a cheap handle; copies share the polynomial.
class Field {
public:
    /// The rationals.
    Field();
    explicit Field(std::vector<Rational> min_poly);

    int degree() const noexcept { return static_cast<int>(poly_->size()) - 1; }
    bool is_rational() const noexcept { return degree() == 1; }
    const std::vector<Rational>& min_poly() const noexcept { return *poly_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(const Rational& q) const;
    /// The class of the indeterminate a (equals -p_0 when the degree is 1).
    FieldElement generator() const;
    FieldElement element(std::vector<Rational> coords) const;

    friend bool operator==(const Field& lhs, const Field& rhs);

private:
    std::shared_ptr<const std::vector<Rational>> poly_;
};

/// An exact element of a Field, stored as coordinates on 1, a, ..., a^{d-1}.
///
/// Elements of the rationals embed in every field: mixing a rational-context
/// element with an extension-context element promotes the former. Mixing two
/// different extensions throws ConsistencyError.
class FieldElement {
public:
    /// Zero of the rationals.
    FieldElement();
    FieldElement(const Rational& q); // NOLINT(google-explicit-constructor)
    FieldElement(long n);            // NOLINT(google-explicit-constructor)

    const Field& field() const noexcept { return field_; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when only the constant coordinate may be nonzero.
    bool is_rational() const;
    /// The constant coordinate; meaningful when is_rational().
    const Rational& rational_part() const { return coords_.front(); }

    FieldElement inverse() const;
    FieldElement pow(unsigned long e) const;

    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

    /// e.g. "5/6", "-1 + 3*a^2", "(1/2)*a".
    std::string to_string() const;

private:
    friend class Field;
    FieldElement(Field field, std::vector<Rational> coords);

    /// Brings *this into the context of `other` if *this is a plain rational.
    void unify(const FieldElement& other);

    Field field_;
    std::vector<Rational> coords_;
};

} // namespace qhc
