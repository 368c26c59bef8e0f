#include "qhc/error.hpp"
#include "qhc/poly.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace qhc;
using qhc::testing::mono;
using qhc::testing::q;
using qhc::testing::random_element;

UniPoly t(int e, const FieldElement& c = q(1)) { return UniPoly::monomial(c, e); }

UniPoly random_unipoly(std::mt19937_64& rng, const Field& k, int max_deg)
{
    UniPoly p;
    for (int e = 0; e <= max_deg; ++e)
        if (rng() % 2)
            p += t(e, random_element(rng, k, 4));
    return p;
}

BiPoly random_bipoly(std::mt19937_64& rng, const Field& k, int max_deg)
{
    BiPoly p;
    for (int a = 0; a <= max_deg; ++a)
        for (int b = 0; a + b <= max_deg; ++b)
            if (rng() % 3 == 0)
                p += BiPoly::monomial(random_element(rng, k, 4), a, b);
    return p;
}

TEST(UniPoly, WorkedExamples)
{
    EXPECT_EQ(t(5).exact_div(t(2)), t(3));
    try {
        (t(3) + t(1)).exact_div(t(2));
        FAIL() << "expected InexactDivision";
    } catch (const InexactDivision& e) {
        EXPECT_EQ(e.remainder(), "t");
    }
}

TEST(UniPoly, BasicAccessors)
{
    const UniPoly p = t(3, q(2)) + t(1, q(-1)) + t(0, q(5));
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.low_degree(), 0);
    EXPECT_EQ(p.coeff(1), q(-1));
    EXPECT_EQ(p.coeff(2), q(0));
    EXPECT_EQ(p.derivative(), t(2, q(6)) + t(0, q(-1)));
    EXPECT_EQ(p.to_string(), "2*t^3 - t + 5");
    EXPECT_EQ((p - p).degree(), std::nullopt);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(t(1).pow(4), t(4));
}

TEST(UniPoly, LaurentExponentsMultiply)
{
    EXPECT_EQ(t(-1) * t(3), t(2));
    EXPECT_EQ(t(-1).derivative(), t(-2, q(-1)));
}

TEST(BiPoly, WorkedExamples)
{
    const BiPoly x = BiPoly::x();
    const BiPoly y = BiPoly::y();
    EXPECT_EQ((x + y) * (x - y), x.pow(2) - y.pow(2));
    EXPECT_THROW(BiPoly::monomial(q(1), -1, 0), InputError);
}

TEST(BiPoly, PartialsAndEvaluation)
{
    // f = y x^2 - y^4
    const BiPoly f = mono(q(1), 2, 1) - mono(q(1), 0, 4);
    EXPECT_EQ(f.partial_x(), mono(q(2), 1, 1));
    EXPECT_EQ(f.partial_y(), mono(q(1), 2, 0) - mono(q(4), 0, 3));
    // Along (t^3, t^2) the binomial x^2 - y^3 vanishes.
    const BiPoly g = mono(q(1), 2, 0) - mono(q(1), 0, 3);
    EXPECT_TRUE(g.evaluate(t(3), t(2)).is_zero());
    EXPECT_EQ(f.evaluate(t(1), t(0, q(2))), t(2, q(2)) - t(0, q(16)));
}

TEST(BiPoly, DivRemIsNormalForm)
{
    const BiPoly f = mono(q(1), 2, 0) + mono(q(1), 0, 3); // x^2 + y^3
    const BiPoly h = mono(q(1), 3, 1) + mono(q(2), 0, 1);
    const auto [quot, rem] = h.div_rem(f);
    EXPECT_EQ(quot * f + rem, h);
    for (const auto& [e, c] : rem.terms())
        EXPECT_LT(e.first, 2) << "remainder still divisible by the leading term x^2";
}

TEST(WeightedDegree, WorkedExamples)
{
    const BiPoly cusp = mono(q(1), 2, 0) + mono(q(1), 0, 3);
    EXPECT_EQ(weighted_degree(cusp, {3, 2}).degree, 6);
    const auto bad = weighted_degree(cusp, {1, 1});
    EXPECT_FALSE(bad.homogeneous());
    EXPECT_EQ(bad.occurring, (std::set<int>{2, 3}));
    const BiPoly yfam = mono(q(1), 2, 1) - mono(q(1), 0, 4);
    EXPECT_EQ(weighted_degree(yfam, {3, 2}).degree, 8);
    EXPECT_THROW(weighted_degree(BiPoly(), {1, 1}), InputError);
}

TEST(WeightedDegree, MonomialsOfWeightMatchBruteForce)
{
    for (int wx = 1; wx <= 5; ++wx)
        for (int wy = 1; wy <= 5; ++wy)
            for (int total = 0; total <= 20; ++total) {
                std::vector<BiPoly::Exponent> brute;
                for (int a = 0; a * wx <= total; ++a)
                    for (int b = 0; a * wx + b * wy <= total; ++b)
                        if (a * wx + b * wy == total)
                            brute.emplace_back(a, b);
                EXPECT_EQ(monomials_of_weight({wx, wy}, total), brute);
            }
    EXPECT_TRUE(monomials_of_weight({2, 3}, -1).empty());
}

TEST(RationalRoots, FindsRootsWithMultiplicity)
{
    // (u - 1/2)^2 (u + 3)(u^2 + 1) = expanded below
    // (u^2 - u + 1/4)(u + 3) = u^3 + 2u^2 - (11/4)u + 3/4
    // times (u^2 + 1): u^5 + 2u^4 - (7/4)u^3 + (11/4)u^2 - (11/4)u + 3/4
    const std::vector<Rational> coeffs{Rational(3, 4), Rational(-11, 4), Rational(11, 4),
                                       Rational(-7, 4), Rational(2),      Rational(1)};
    const auto roots = rational_roots(coeffs);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].value, Rational(1, 2));
    EXPECT_EQ(roots[0].multiplicity, 2);
    EXPECT_EQ(roots[1].value, Rational(-3));
    EXPECT_EQ(roots[1].multiplicity, 1);
}

TEST(RationalRoots, OrderingIsDeterministic)
{
    EXPECT_TRUE(rational_root_less(Rational(1), Rational(-1)));
    EXPECT_TRUE(rational_root_less(Rational(-1), Rational(2)));
    EXPECT_TRUE(rational_root_less(Rational(1, 2), Rational(1, 3)));
    EXPECT_TRUE(rational_root_less(Rational(1, 3), Rational(2)));
    // u^2 - 1: roots 1 then -1.
    const auto roots = rational_roots({Rational(-1), Rational(0), Rational(1)});
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].value, Rational(1));
    EXPECT_EQ(roots[1].value, Rational(-1));
}

TEST(RationalRoots, ZeroRootAndNoRoots)
{
    const auto r = rational_roots({Rational(0), Rational(0), Rational(1), Rational(1)}); // u^3 + u^2
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].value, Rational(0));
    EXPECT_EQ(r[0].multiplicity, 2);
    EXPECT_TRUE(rational_roots({Rational(1), Rational(0), Rational(1)}).empty());
}

TEST(RationalRoots, RandomProductsOfLinearFactors)
{
    std::mt19937_64 rng(3);
    for (int s = 0; s < 50; ++s) {
        std::vector<Rational> poly{Rational(1)};
        std::vector<Rational> expected;
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int k = 0; k < n; ++k) {
            const Rational r = qhc::testing::random_rational(rng, 6);
            expected.push_back(r);
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= r * poly[j];
            }
            poly = next;
        }
        const auto roots = rational_roots(poly);
        int total = 0;
        for (const auto& root : roots) {
            total += root.multiplicity;
            EXPECT_EQ(std::count(expected.begin(), expected.end(), root.value), root.multiplicity);
        }
        EXPECT_EQ(total, n);
    }
}

TEST(PolyProperties, ExactDivisionRoundTrip200)
{
    std::mt19937_64 rng(424242);
    const Field gauss({Rational(1), Rational(0), Rational(1)});
    int failures = 0;
    for (int s = 0; s < 200; ++s) {
        const Field k = s % 2 ? gauss : Field();
        if (s % 4 < 2) {
            const UniPoly a = random_unipoly(rng, k, 6);
            UniPoly b = random_unipoly(rng, k, 4);
            if (b.is_zero())
                b = t(0, q(1));
            const auto [quot, rem] = a.div_rem(b);
            const bool ok = (a * b).exact_div(b) == a && quot * b + rem == a &&
                            (rem.is_zero() || *rem.degree() < *b.degree());
            failures += !ok;
        } else {
            const BiPoly a = random_bipoly(rng, k, 5);
            BiPoly b = random_bipoly(rng, k, 3);
            if (b.is_zero())
                b = BiPoly::x() + BiPoly::y();
            const auto [quot, rem] = a.div_rem(b);
            const bool ok = (a * b).exact_div(b) == a && quot * b + rem == a;
            failures += !ok;
        }
    }
    EXPECT_EQ(failures, 0);
}

TEST(PolyProperties, WeightedDegreeIsAdditive)
{
    std::mt19937_64 rng(11);
    const Weights w{3, 2};
    for (int s = 0; s < 50; ++s) {
        const int d1 = 2 + static_cast<int>(rng() % 10);
        const int d2 = 2 + static_cast<int>(rng() % 10);
        const BiPoly p = qhc::testing::random_homogeneous(rng, Field(), w, d1);
        const BiPoly r = qhc::testing::random_homogeneous(rng, Field(), w, d2);
        if (p.is_zero() || r.is_zero())
            continue;
        EXPECT_EQ(weighted_degree(p * r, w).degree, d1 + d2);
    }
}

} // namespace
