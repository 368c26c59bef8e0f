#include "qhc/field.hpp"

#include "qhc/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qhc {

Rational parse_rational(const std::string& text)
{
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
    if (s.empty())
        throw InputError("empty rational");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& part, bool allow_sign) {
        std::size_t k = 0;
        if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+'))
            k = 1;
        if (k == part.size())
            return false;
        return std::all_of(part.begin() + static_cast<long>(k), part.end(),
                           [](unsigned char ch) { return std::isdigit(ch); });
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false))
        throw InputError("malformed rational '" + text + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0)
        throw InputError("zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string rational_to_fraction(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return rational_to_fraction(q);
}

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// Remainder of a modulo the monic p, in place.
void reduce_mod(Dense& a, const Dense& p)
{
    const std::size_t d = p.size() - 1;
    for (std::size_t k = a.size(); k-- > d;) {
        const Rational c = a[k];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= d; ++j)
            a[k - d + j] -= c * p[j];
    }
    a.resize(std::min(a.size(), d));
}

Dense mul_dense(const Dense& a, const Dense& b)
{
    if (a.empty() || b.empty())
        return {};
    Dense out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Quotient and remainder for nonzero b (trimmed).
std::pair<Dense, Dense> divmod_dense(Dense a, const Dense& b)
{
    trim(a);
    Dense q;
    if (a.size() < b.size())
        return {q, a};
    q.assign(a.size() - b.size() + 1, 0);
    const Rational lead = b.back();
    const std::size_t shift_max = a.size() - b.size();
    for (std::size_t s = shift_max + 1; s-- > 0;) {
        const Rational c = a[s + b.size() - 1] / lead;
        q[s] = c;
        if (c != 0)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[s + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Dense sub_dense(Dense a, const Dense& b)
{
    if (a.size() < b.size())
        a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] -= b[i];
    trim(a);
    return a;
}

const std::shared_ptr<const std::vector<Rational>>& rationals_poly()
{
    static const auto q = std::make_shared<const std::vector<Rational>>(std::vector<Rational>{0, 1});
    return q;
}

} // namespace

Field::Field() : poly_(rationals_poly()) {}

Field::Field(std::vector<Rational> min_poly)
{
    trim(min_poly);
    if (min_poly.size() < 2)
        throw InputError("minimal polynomial must have degree >= 1");
    if (min_poly.back() != 1)
        throw InputError("minimal polynomial must be monic");
    // Q[a]/(a - c) is Q itself; the polynomial is kept so that a = c.
    poly_ = std::make_shared<const std::vector<Rational>>(std::move(min_poly));
}

bool operator==(const Field& lhs, const Field& rhs)
{
    return lhs.poly_ == rhs.poly_ || (lhs.is_rational() && rhs.is_rational()) || *lhs.poly_ == *rhs.poly_;
}

FieldElement Field::zero() const
{
    return FieldElement(*this, std::vector<Rational>(static_cast<std::size_t>(degree())));
}

FieldElement Field::one() const { return element(Rational(1)); }

FieldElement Field::element(const Rational& q) const
{
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    c[0] = q;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::generator() const
{
    if (degree() == 1)
        return element(-min_poly()[0]);
    std::vector<Rational> c(static_cast<std::size_t>(degree()));
    c[1] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::element(std::vector<Rational> coords) const
{
    if (coords.size() > static_cast<std::size_t>(degree())) {
        reduce_mod(coords, min_poly());
    }
    coords.resize(static_cast<std::size_t>(degree()));
    return FieldElement(*this, std::move(coords));
}

FieldElement::FieldElement() : FieldElement(Rational(0)) {}

FieldElement::FieldElement(const Rational& q) : coords_{q} {}

FieldElement::FieldElement(long n) : coords_{Rational(n)} {}

FieldElement::FieldElement(Field field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords))
{}

bool FieldElement::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_one() const { return is_rational() && coords_.front() == 1; }

void FieldElement::unify(const FieldElement& other)
{
    if (field_ == other.field_)
        return;
    if (field_.is_rational()) {
        std::vector<Rational> c(static_cast<std::size_t>(other.field_.degree()));
        c[0] = coords_.front();
        field_ = other.field_;
        coords_ = std::move(c);
        return;
    }
    if (other.field_.is_rational())
        return;
    throw ConsistencyError("field elements from different number fields");
}

namespace {

// Copy of rhs viewed in lhs's field (rhs rational or same field).
FieldElement promoted(const FieldElement& rhs, const Field& target)
{
    if (rhs.field() == target)
        return rhs;
    if (rhs.field().is_rational())
        return target.element(rhs.rational_part());
    throw ConsistencyError("field elements from different number fields");
}

} // namespace

FieldElement& FieldElement::operator+=(const FieldElement& rhs)
{
    unify(rhs);
    const FieldElement r = promoted(rhs, field_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += r.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs)
{
    unify(rhs);
    const FieldElement r = promoted(rhs, field_);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= r.coords_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs)
{
    unify(rhs);
    const FieldElement r = promoted(rhs, field_);
    if (coords_.size() == 1) {
        coords_[0] *= r.coords_[0];
        return *this;
    }
    Dense prod = mul_dense(coords_, r.coords_);
    reduce_mod(prod, field_.min_poly());
    prod.resize(coords_.size());
    coords_ = std::move(prod);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

FieldElement FieldElement::operator-() const
{
    FieldElement out = *this;
    for (auto& c : out.coords_)
        c = -c;
    return out;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero())
        throw InputError("inversion of zero");
    if (coords_.size() == 1)
        return FieldElement(field_, {1 / coords_[0]});

    // Extended Euclid on (a, p): track s with s*a = r (mod p).
    Dense r0 = field_.min_poly();
    Dense r1 = coords_;
    trim(r1);
    Dense s0;
    Dense s1{1};
    while (!r1.empty()) {
        auto [q, rem] = divmod_dense(r0, r1);
        Dense s2 = sub_dense(s0, mul_dense(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw ConsistencyError("element is a zero divisor; minimal polynomial is reducible");
    const Rational g = r0[0];
    for (auto& c : s0)
        c /= g;
    reduce_mod(s0, field_.min_poly());
    s0.resize(coords_.size());
    FieldElement out(field_, std::move(s0));
    return out;
}

FieldElement FieldElement::pow(unsigned long e) const
{
    FieldElement result = field_.one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1UL)
            result *= base;
        e >>= 1U;
        if (e > 0)
            base *= base;
    }
    return result;
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs)
{
    if (lhs.field_ == rhs.field_)
        return lhs.coords_ == rhs.coords_;
    if (lhs.field_.is_rational() && rhs.is_rational())
        return lhs.coords_[0] == rhs.coords_[0];
    if (rhs.field_.is_rational() && lhs.is_rational())
        return lhs.coords_[0] == rhs.coords_[0];
    if (lhs.field_.is_rational() || rhs.field_.is_rational())
        return false;
    throw ConsistencyError("field elements from different number fields");
}

std::string FieldElement::to_string() const
{
    if (is_rational())
        return rational_to_string(coords_[0]);
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const Rational& c = coords_[k];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        first = false;
        if (k == 0) {
            out << rational_to_string(mag);
            continue;
        }
        if (mag != 1)
            out << (mag.get_den() == 1 ? rational_to_string(mag) : "(" + rational_to_string(mag) + ")") << "*";
        out << "a";
        if (k > 1)
            out << "^" << k;
    }
    return out.str();
}

} // namespace qhc
