#include "qhc/catalog.hpp"
#include "qhc/curve.hpp"
#include "qhc/error.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace qhc;
using qhc::testing::mono;
using qhc::testing::q;

UniPoly t(int e, const FieldElement& c = q(1)) { return UniPoly::monomial(c, e); }

BiPoly yfam(int m, int n) { return mono(q(1), n, 1) - mono(q(1), 0, m + 1); }

std::string message_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

TEST(InferWeights, WorkedExamples)
{
    EXPECT_EQ(infer_weights(mono(q(1), 2, 0) + mono(q(1), 0, 3)), (Weights{3, 2}));
    EXPECT_EQ(infer_weights(mono(q(1), 2, 1) + mono(q(1), 0, 4)), (Weights{3, 2}));
    EXPECT_NE(message_of([] { infer_weights(mono(q(1), 5, 0)); }).find("ambiguous"), std::string::npos);
    EXPECT_NE(message_of([] { infer_weights(mono(q(1), 2, 0) + mono(q(1), 0, 3) + mono(q(1), 1, 0)); })
                  .find("not quasi-homogeneous"),
              std::string::npos);
}

TEST(BranchConductor, WorkedExamples)
{
    EXPECT_EQ(branch_conductor(BranchKind::AxisY, {3, 2}), 0);
    EXPECT_EQ(branch_conductor(BranchKind::AxisX, {7, 5}), 0);
    EXPECT_EQ(branch_conductor(BranchKind::Binomial, {3, 2}), 2);
    EXPECT_EQ(branch_conductor(BranchKind::Binomial, {1, 1}), 0);
}

TEST(Factor, YFamilyExample)
{
    const QuasiCurve c = qhc::testing::rational_curve(yfam(3, 2));
    EXPECT_EQ(c.weights(), (Weights{3, 2}));
    EXPECT_EQ(c.wf(), 8);
    EXPECT_EQ(c.unit(), q(1));
    ASSERT_EQ(c.r(), 2u);
    EXPECT_EQ(c.branch(0).kind, BranchKind::AxisY);
    EXPECT_EQ(c.branch(1).kind, BranchKind::Binomial);
    EXPECT_EQ(c.branch(1).a, q(-1));
    EXPECT_EQ(c.branch(1).b, q(1));
}

TEST(Factor, E7Example)
{
    const QuasiCurve c = qhc::testing::rational_curve(mono(q(1), 3, 0) + mono(q(1), 1, 3));
    ASSERT_EQ(c.r(), 2u);
    EXPECT_EQ(c.branch(0).kind, BranchKind::AxisX);
    EXPECT_EQ(c.branch(1).a, q(1));
    EXPECT_EQ(c.branch(1).b, q(-1));
}

TEST(Factor, RootNotInField)
{
    const std::string msg = message_of([] { qhc::testing::rational_curve(mono(q(1), 2, 0) + mono(q(1), 0, 2)); });
    EXPECT_NE(msg.find("root not in field: u^2 + 1"), std::string::npos) << msg;
}

TEST(Factor, BNotInField)
{
    // x^2 - 2 y^3 has root a = -2, but b^3 = 1/2 has no rational solution.
    const std::string msg = message_of([] { qhc::testing::rational_curve(mono(q(1), 2, 0) - mono(q(2), 0, 3)); });
    EXPECT_NE(msg.find("b_i not in field"), std::string::npos) << msg;
}

TEST(Factor, RejectsNonReduced)
{
    const BiPoly cusp = mono(q(1), 2, 0) + mono(q(1), 0, 3);
    EXPECT_NE(message_of([&] { qhc::testing::rational_curve(cusp * cusp); }).find("not reduced"),
              std::string::npos);
    EXPECT_NE(message_of([] { qhc::testing::rational_curve(mono(q(1), 1, 2) - mono(q(1), 0, 3)); })
                  .find("not reduced"),
              std::string::npos); // y^2 (x - y)
    EXPECT_NE(message_of([] { qhc::testing::rational_curve(mono(q(1), 2, 2) - mono(q(1), 0, 5)); })
                  .find("not reduced"),
              std::string::npos); // y^2 (x^2 - y^3)
}

TEST(Factor, RejectsBadBranchLists)
{
    const BiPoly cusp = mono(q(1), 2, 0) + mono(q(1), 0, 3);
    const std::vector<BranchSpec> wrong_b{{BranchKind::Binomial, q(1), q(1)}};
    EXPECT_THROW(QuasiCurve(Field(), cusp, Weights{3, 2}, wrong_b), InputError);
    const std::vector<BranchSpec> wrong_a{{BranchKind::Binomial, q(2), std::nullopt}};
    EXPECT_THROW(QuasiCurve(Field(), cusp, Weights{3, 2}, wrong_a), InputError);
    EXPECT_THROW(QuasiCurve(Field(), cusp, Weights{2, 2}), InputError);
    EXPECT_THROW(QuasiCurve(Field(), cusp, Weights{1, 1}), InputError);
}

TEST(Normalization, WorkedExamples)
{
    const QuasiCurve c = qhc::testing::rational_curve(yfam(3, 2));
    EXPECT_EQ(normalization_image(c, BiPoly::x()), (std::vector<UniPoly>{t(1), t(3)}));
    EXPECT_EQ(normalization_image(c, BiPoly::y()), (std::vector<UniPoly>{UniPoly(), t(2)}));
    for (const auto& img : normalization_image(c, c.f()))
        EXPECT_TRUE(img.is_zero());
}

TEST(Normalization, BranchDataTable)
{
    for (const auto& entry : catalog_list()) {
        const QuasiCurve& c = entry.curve;
        const Weights w = c.weights();
        for (std::size_t i = 0; i < c.r(); ++i) {
            const Branch& br = c.branch(i);
            switch (br.kind) {
            case BranchKind::AxisX:
                EXPECT_EQ(br.t_degree, w.y);
                EXPECT_EQ(br.weight, w.x);
                EXPECT_TRUE(br.nx.is_zero());
                EXPECT_EQ(br.ny, t(1));
                break;
            case BranchKind::AxisY:
                EXPECT_EQ(br.t_degree, w.x);
                EXPECT_EQ(br.weight, w.y);
                EXPECT_EQ(br.nx, t(1));
                EXPECT_TRUE(br.ny.is_zero());
                break;
            case BranchKind::Binomial:
                EXPECT_EQ(br.t_degree, 1);
                EXPECT_EQ(br.weight, w.x * w.y);
                EXPECT_EQ(br.nx, t(w.x));
                EXPECT_EQ(br.ny, t(w.y, br.b));
                EXPECT_EQ(br.a * br.b.pow(static_cast<unsigned long>(w.x)), -c.field().one());
                break;
            }
            EXPECT_EQ(weighted_degree(br.polynomial, w).degree, br.weight) << entry.label;
        }
    }
}

TEST(CurveProperties, FactorizationRoundTripOnCatalog)
{
    for (const auto& entry : catalog_list()) {
        const QuasiCurve& c = entry.curve;
        BiPoly product = BiPoly::constant(c.unit());
        for (const auto& br : c.branches())
            product *= br.polynomial;
        EXPECT_EQ(product, c.f()) << entry.label;
    }
}

TEST(CurveProperties, CatalogRationalEntriesMatchAutomaticFactorization)
{
    for (const auto& entry : catalog_list()) {
        if (!entry.curve.field().is_rational())
            continue;
        const QuasiCurve automatic(Field(), entry.curve.f());
        ASSERT_EQ(automatic.r(), entry.curve.r()) << entry.label;
        for (std::size_t i = 0; i < automatic.r(); ++i) {
            EXPECT_EQ(automatic.branch(i).polynomial, entry.curve.branch(i).polynomial) << entry.label;
            EXPECT_EQ(automatic.branch(i).b, entry.curve.branch(i).b) << entry.label;
        }
    }
}

TEST(CurveProperties, FactorizationRoundTripOn50RandomProducts)
{
    std::mt19937_64 rng(50);
    for (int s = 0; s < 50; ++s) {
        const auto rc = qhc::testing::random_curve(rng, 7, 4);
        const QuasiCurve c(Field(), rc.f, rc.weights);
        ASSERT_EQ(c.r(), rc.factors.size()) << rc.f.to_string();
        BiPoly product = BiPoly::constant(c.unit());
        for (const auto& br : c.branches())
            product *= br.polynomial;
        EXPECT_EQ(product, rc.f);
        for (const auto& factor : rc.factors) {
            bool found = false;
            for (const auto& br : c.branches())
                found = found || br.polynomial == factor;
            EXPECT_TRUE(found) << factor.to_string();
        }
        // A repeated factor is always rejected.
        EXPECT_THROW(QuasiCurve(Field(), rc.f * rc.factors.front(), rc.weights), InputError);
    }
}

TEST(CurveProperties, NormalizationIsAGradedHomomorphism200)
{
    std::mt19937_64 rng(2002);
    const auto catalog = catalog_list();
    int failures = 0;
    for (int s = 0; s < 200; ++s) {
        const QuasiCurve& c = catalog[static_cast<std::size_t>(s) % catalog.size()].curve;
        const int d1 = static_cast<int>(rng() % 12);
        const int d2 = static_cast<int>(rng() % 12);
        const BiPoly h1 = qhc::testing::random_homogeneous(rng, c.field(), c.weights(), d1);
        const BiPoly h2 = qhc::testing::random_homogeneous(rng, c.field(), c.weights(), d2);
        const auto n1 = normalization_image(c, h1);
        const auto n2 = normalization_image(c, h2);
        const auto prod = normalization_image(c, h1 * h2);
        const auto sum = normalization_image(c, h1 + h2);
        bool ok = true;
        for (std::size_t i = 0; i < c.r(); ++i) {
            ok = ok && prod[i] == n1[i] * n2[i] && sum[i] == n1[i] + n2[i];
            if (!n1[i].is_zero())
                ok = ok && n1[i].is_monomial() && *n1[i].degree() * c.branch(i).t_degree == d1;
        }
        failures += !ok;
    }
    EXPECT_EQ(failures, 0);
}

TEST(GradedMember, FindsCombination)
{
    const QuasiCurve c = qhc::testing::rational_curve(mono(q(1), 2, 0) + mono(q(1), 0, 3));
    // t^4 = n(y^2)
    const auto sol = graded_member(c, {t(4)}, 4);
    ASSERT_TRUE(sol.has_value());
    EXPECT_FALSE(graded_member(c, {t(1)}, 1).has_value());
}

} // namespace
