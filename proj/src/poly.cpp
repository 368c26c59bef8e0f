#include "qhc/poly.hpp"

#include "qhc/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhc {

namespace {

// Coefficient printing shared by both polynomial kinds. Returns the sign to
// print in front and the magnitude text (empty when the magnitude is 1 and a
// monomial follows).
std::string coeff_text(const FieldElement& c, bool has_monomial, bool& negative)
{
    if (c.is_rational()) {
        negative = c.rational_part() < 0;
        const Rational mag = abs(c.rational_part());
        if (mag == 1 && has_monomial)
            return "";
        return rational_to_string(mag);
    }
    negative = false;
    return "(" + c.to_string() + ")";
}

void append_term(std::ostringstream& out, bool first, const FieldElement& c, const std::string& mono)
{
    bool negative = false;
    const std::string ct = coeff_text(c, !mono.empty(), negative);
    if (first)
        out << (negative ? "-" : "");
    else
        out << (negative ? " - " : " + ");
    out << ct;
    if (!ct.empty() && !mono.empty())
        out << "*";
    out << mono;
}

std::string power_text(const std::string& var, int e)
{
    if (e == 0)
        return "";
    if (e == 1)
        return var;
    return var + "^" + std::to_string(e);
}

} // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::monomial(const FieldElement& c, int e)
{
    UniPoly p;
    p.add_term(e, c);
    return p;
}

void UniPoly::add_term(int e, const FieldElement& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

std::optional<int> UniPoly::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

std::optional<int> UniPoly::low_degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

FieldElement UniPoly::coeff(int e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElement() : it->second;
}

UniPoly UniPoly::derivative() const
{
    UniPoly out;
    for (const auto& [e, c] : terms_)
        if (e != 0)
            out.add_term(e - 1, c * FieldElement(static_cast<long>(e)));
    return out;
}

UniPoly UniPoly::pow(unsigned e) const
{
    UniPoly result = constant(FieldElement(1L));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e > 0)
            base *= base;
    }
    return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs)
{
    UniPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            out.add_term(e1 + e2, c1 * c2);
    *this = std::move(out);
    return *this;
}

UniPoly& UniPoly::operator*=(const FieldElement& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

UniPoly UniPoly::operator-() const
{
    UniPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

std::pair<UniPoly, UniPoly> UniPoly::div_rem(const UniPoly& divisor) const
{
    if (divisor.is_zero())
        throw InputError("division by the zero polynomial");
    const int dd = *divisor.degree();
    const FieldElement lead_inv = divisor.terms_.rbegin()->second.inverse();
    UniPoly quotient;
    UniPoly rem = *this;
    while (!rem.is_zero() && *rem.degree() >= dd) {
        const auto& [e, c] = *rem.terms_.rbegin();
        UniPoly step = monomial(c * lead_inv, e - dd);
        rem -= step * divisor;
        quotient += step;
    }
    return {quotient, rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const
{
    auto [q, r] = div_rem(divisor);
    if (!r.is_zero())
        throw InexactDivision(r.to_string());
    return q;
}

std::string UniPoly::to_string(const std::string& var) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_term(out, first, it->second, power_text(var, it->first));
        first = false;
    }
    return out.str();
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::monomial(const FieldElement& c, int a, int b)
{
    if (a < 0 || b < 0)
        throw InputError("negative exponent in k[x,y]");
    BiPoly p;
    p.add_term({a, b}, c);
    return p;
}

void BiPoly::add_term(const Exponent& e, const FieldElement& c)
{
    if (c.is_zero())
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

FieldElement BiPoly::coeff(int a, int b) const
{
    auto it = terms_.find({a, b});
    return it == terms_.end() ? FieldElement() : it->second;
}

BiPoly BiPoly::partial_x() const
{
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.first > 0)
            out.add_term({e.first - 1, e.second}, c * FieldElement(static_cast<long>(e.first)));
    return out;
}

BiPoly BiPoly::partial_y() const
{
    BiPoly out;
    for (const auto& [e, c] : terms_)
        if (e.second > 0)
            out.add_term({e.first, e.second - 1}, c * FieldElement(static_cast<long>(e.second)));
    return out;
}

BiPoly BiPoly::pow(unsigned e) const
{
    BiPoly result = constant(FieldElement(1L));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e > 0)
            base *= base;
    }
    return result;
}

UniPoly BiPoly::evaluate(const UniPoly& X, const UniPoly& Y) const
{
    std::map<int, UniPoly> xp;
    std::map<int, UniPoly> yp;
    auto power = [](std::map<int, UniPoly>& cache, const UniPoly& base, int e) -> const UniPoly& {
        auto it = cache.find(e);
        if (it == cache.end())
            it = cache.emplace(e, base.pow(static_cast<unsigned>(e))).first;
        return it->second;
    };
    UniPoly out;
    for (const auto& [e, c] : terms_)
        out += c * (power(xp, X, e.first) * power(yp, Y, e.second));
    return out;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs)
{
    for (const auto& [e, c] : rhs.terms_)
        add_term(e, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& rhs)
{
    BiPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_)
            out.add_term({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    *this = std::move(out);
    return *this;
}

BiPoly& BiPoly::operator*=(const FieldElement& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_)
        coeff *= c;
    return *this;
}

BiPoly BiPoly::operator-() const
{
    BiPoly out = *this;
    for (auto& [e, c] : out.terms_)
        c = -c;
    return out;
}

std::pair<BiPoly, BiPoly> BiPoly::div_rem(const BiPoly& divisor) const
{
    if (divisor.is_zero())
        throw InputError("division by the zero polynomial");
    // std::map orders pairs lexicographically, so rbegin() is the lex leader.
    const auto& [lead_exp, lead_c] = *divisor.terms_.rbegin();
    const FieldElement lead_inv = lead_c.inverse();
    BiPoly quotient;
    BiPoly rem;
    BiPoly work = *this;
    while (!work.is_zero()) {
        const auto [e, c] = *work.terms_.rbegin();
        if (e.first >= lead_exp.first && e.second >= lead_exp.second) {
            BiPoly step = monomial(c * lead_inv, e.first - lead_exp.first, e.second - lead_exp.second);
            work -= step * divisor;
            quotient += step;
        } else {
            rem.add_term(e, c);
            work.terms_.erase(e);
        }
    }
    return {quotient, rem};
}

BiPoly BiPoly::exact_div(const BiPoly& divisor) const
{
    auto [q, r] = div_rem(divisor);
    if (!r.is_zero())
        throw InexactDivision(r.to_string());
    return q;
}

std::string BiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono = power_text("x", it->first.first);
        const std::string ym = power_text("y", it->first.second);
        if (!mono.empty() && !ym.empty())
            mono += "*";
        mono += ym;
        append_term(out, first, it->second, mono);
        first = false;
    }
    return out.str();
}

WeightedDegree weighted_degree(const BiPoly& p, Weights w)
{
    if (p.is_zero())
        throw InputError("weighted degree of the zero polynomial");
    WeightedDegree out;
    for (const auto& [e, c] : p.terms())
        out.occurring.insert(e.first * w.x + e.second * w.y);
    if (out.occurring.size() == 1)
        out.degree = *out.occurring.begin();
    return out;
}

std::vector<BiPoly::Exponent> monomials_of_weight(Weights w, int total)
{
    std::vector<BiPoly::Exponent> out;
    if (total < 0)
        return out;
    for (int a = 0; a * w.x <= total; ++a) {
        const int rest = total - a * w.x;
        if (rest % w.y == 0)
            out.emplace_back(a, rest / w.y);
    }
    return out;
}

// ------------------------------------------------------------ Rational roots

bool rational_root_less(const Rational& a, const Rational& b)
{
    const int cmp_num = cmp(abs(a.get_num()), abs(b.get_num()));
    if (cmp_num != 0)
        return cmp_num < 0;
    const int cmp_den = cmp(a.get_den(), b.get_den());
    if (cmp_den != 0)
        return cmp_den < 0;
    return a > b;
}

namespace {

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<std::pair<mpz_class, int>> factors;
    bool prime_rest = n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 2;
    for (mpz_class p = 2; !prime_rest && p * p <= n; ++p) {
        int k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (k > 0) {
            factors.emplace_back(p, k);
            prime_rest = n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) == 2;
        }
    }
    if (n > 1)
        factors.emplace_back(n, 1);
    std::vector<mpz_class> out{1};
    for (const auto& [p, k] : factors) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (int i = 1; i <= k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Integer polynomial (ascending) with unit content and a nonzero constant.
std::vector<mpz_class> to_primitive(const std::vector<Rational>& c)
{
    mpz_class l = 1;
    for (const auto& q : c)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(c.size());
    mpz_class g = 0;
    for (const auto& q : c) {
        mpz_class v = q.get_num() * (l / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        z.push_back(v);
    }
    if (g != 0)
        for (auto& v : z)
            v /= g;
    return z;
}

// q^s P(p/q) for P of degree s.
mpz_class homogenized_eval(const std::vector<mpz_class>& P, const mpz_class& p, const mpz_class& q)
{
    mpz_class acc = 0;
    for (std::size_t j = P.size(); j-- > 0;)
        acc = acc * p + P[j] * [&] {
            mpz_class qp;
            mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), P.size() - 1 - j);
            return qp;
        }();
    return acc;
}

// Divides P by (q u - p), exactly.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& P, const mpz_class& p, const mpz_class& q)
{
    const std::size_t s = P.size() - 1;
    std::vector<mpz_class> out(s);
    mpz_class carry = P[s];
    for (std::size_t j = s; j-- > 0;) {
        out[j] = carry / q;
        carry = P[j] + out[j] * p;
    }
    return out;
}

} // namespace

std::vector<RationalRoot> rational_roots(const std::vector<Rational>& coeffs)
{
    std::vector<Rational> c = coeffs;
    while (!c.empty() && c.back() == 0)
        c.pop_back();
    if (c.empty())
        throw InputError("rational_roots of the zero polynomial");

    std::vector<RationalRoot> out;
    std::size_t zeros = 0;
    while (c[zeros] == 0)
        ++zeros;
    if (zeros > 0) {
        out.push_back({Rational(0), static_cast<int>(zeros)});
        c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
    }

    std::vector<mpz_class> P = to_primitive(c);
    if (P.size() > 1) {
        std::vector<Rational> candidates;
        const auto ps = divisors(P.front());
        const auto qs = divisors(P.back());
        for (const auto& q : qs)
            for (const auto& p : ps) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1)
                    continue;
                candidates.emplace_back(p, q);
                candidates.emplace_back(-p, q);
            }
        std::sort(candidates.begin(), candidates.end(), rational_root_less);
        for (const auto& r : candidates) {
            if (P.size() < 2)
                break;
            const mpz_class p = r.get_num();
            const mpz_class q = r.get_den();
            int mult = 0;
            while (P.size() > 1 && homogenized_eval(P, p, q) == 0) {
                P = deflate(P, p, q);
                ++mult;
            }
            if (mult > 0)
                out.push_back({r, mult});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RationalRoot& a, const RationalRoot& b) { return rational_root_less(a.value, b.value); });
    return out;
}

std::string dense_to_string(const std::vector<Rational>& coeffs, const std::string& var)
{
    UniPoly p;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        p += UniPoly::monomial(FieldElement(coeffs[j]), static_cast<int>(j));
    return p.to_string(var);
}

} // namespace qhc
