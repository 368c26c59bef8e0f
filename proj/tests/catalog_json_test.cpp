#include "qhc/catalog.hpp"
#include "qhc/error.hpp"
#include "qhc/json_io.hpp"
#include "qhc/semigroup.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

namespace {

using namespace qhc;
using qhc::testing::q;

std::set<int> fixture_hs(const CatalogEntry& entry, int fixture_case)
{
    std::set<int> out;
    for (const auto& fx : fixture_modules(entry))
        if (fx.fixture_case == fixture_case)
            out.insert(*fx.h);
    return out;
}

TEST(Catalog, ListCoversAdeAndFamily)
{
    const auto list = catalog_list();
    ASSERT_EQ(list.size(), 17u);
    EXPECT_EQ(list.front().label, "A_1");
    EXPECT_EQ(list[11].label, "E_8");
    EXPECT_EQ(list.back().label, "YFamily(7,3)");
    for (const auto& e : list)
        EXPECT_EQ(weighted_degree(e.curve.f(), e.curve.weights()).degree, e.curve.wf()) << e.label;
}

TEST(Catalog, Examples)
{
    const auto a2 = catalog_get("A", 2);
    EXPECT_EQ(a2.curve.weights().x, 3);
    EXPECT_EQ(a2.curve.weights().y, 2);
    EXPECT_EQ(a2.curve.r(), 1u);
    EXPECT_EQ(a2.curve.field().degree(), 1);

    const auto d4 = catalog_get("D", 4);
    EXPECT_EQ(d4.curve.r(), 3u);
    EXPECT_EQ(d4.curve.branch(0).kind, BranchKind::AxisY);

    const auto e7 = catalog_get("E", 7);
    EXPECT_EQ(e7.curve.r(), 2u);
    EXPECT_EQ(e7.curve.wf(), 9);
    EXPECT_EQ(e7.curve.branch(0).kind, BranchKind::AxisX);

    const auto e6 = catalog_get("E", 6);
    EXPECT_EQ(e6.curve.field().degree(), 4);
    EXPECT_EQ(e6.curve.r(), 1u);
}

TEST(Catalog, UnsupportedEntries)
{
    EXPECT_THROW(catalog_get("A", 0), InputError);
    EXPECT_THROW(catalog_get("A", 7), InputError);
    EXPECT_THROW(catalog_get("D", 3), InputError);
    EXPECT_THROW(catalog_get("E", 9), InputError);
    EXPECT_THROW(catalog_get("Z", 1), InputError);
    EXPECT_THROW(yfamily(2, 4), InputError);
    EXPECT_THROW(yfamily(11, 3), InputError);
    EXPECT_THROW(yfamily(0, 1), InputError);
}

TEST(Catalog, YFamilyFixtureParameters)
{
    const auto y = yfamily(3, 2);
    EXPECT_EQ(fixture_hs(y, 1), (std::set<int>{1, 3}));
    EXPECT_EQ(fixture_hs(y, 2), (std::set<int>{1}));
    const auto y52 = yfamily(5, 2);
    EXPECT_EQ(fixture_hs(y52, 2), (std::set<int>{1, 3}));
    // Case (1) parameters are exactly the positive gaps of Gamma_2.
    for (const auto& entry : catalog_list()) {
        if (entry.family != 'Y')
            continue;
        const auto gamma2 = gamma_formula(entry.curve, 1);
        for (int h : fixture_hs(entry, 1))
            EXPECT_FALSE(gamma2.contains(h)) << entry.label << " h=" << h;
    }
}

TEST(Catalog, MaximalIdealOfTheCusp)
{
    const auto a2 = catalog_get("A", 2);
    for (const auto& fx : fixture_modules(a2)) {
        if (fx.name != "maximal_ideal")
            continue;
        ASSERT_EQ(fx.module.generators.size(), 2u);
        EXPECT_EQ(fx.module.generators[0], ModuleElement::term({0, 0}, q(1), 3));
        EXPECT_EQ(fx.module.generators[1], ModuleElement::term({0, 0}, q(-1), 2));
        return;
    }
    FAIL() << "no maximal_ideal fixture";
}

TEST(Json, CurveRoundTripOverCatalog)
{
    for (const auto& entry : catalog_list()) {
        const Json j = curve_to_json(entry.curve);
        const QuasiCurve back = curve_from_json(parse_json(j.dump(), "roundtrip"));
        EXPECT_EQ(back.f(), entry.curve.f()) << entry.label;
        EXPECT_EQ(back.r(), entry.curve.r());
        EXPECT_EQ(curve_to_json(back), j) << entry.label;
    }
}

TEST(Json, ModuleRoundTripOverFixtures)
{
    for (const auto& entry : catalog_list())
        for (const auto& fx : fixture_modules(entry)) {
            const Json j = module_to_json(fx.module, entry.curve.field());
            const GradedSubmodule back = module_from_json(parse_json(j.dump(), "roundtrip"), entry.curve);
            EXPECT_EQ(back.generators, fx.module.generators) << entry.label << " " << fx.name;
            EXPECT_EQ(back.cover.shifts(), fx.module.cover.shifts());
            EXPECT_EQ(module_to_json(back, entry.curve.field()), j);
        }
}

TEST(Json, FieldElements)
{
    const Field gi({Rational(1), Rational(0), Rational(1)});
    const FieldElement a = gi.generator();
    const Json j = field_element_to_json(q(1, 2) + a * q(-3), gi);
    EXPECT_EQ(j, Json::array({"1/2", "-3/1"}));
    EXPECT_EQ(field_element_from_json(j, gi, "x"), q(1, 2) + a * q(-3));
    EXPECT_EQ(field_element_from_json(Json("2/4"), gi, "x"), q(1, 2));
    EXPECT_EQ(field_element_from_json(Json(7), gi, "x"), q(7));
    EXPECT_THROW(field_element_from_json(Json::array({"1"}), gi, "x"), InputError);
    EXPECT_THROW(field_element_from_json(Json("1/0"), gi, "x"), InputError);
    EXPECT_THROW(field_element_from_json(Json(true), gi, "x"), InputError);
}

TEST(Json, ParseErrorsNameLineAndColumn)
{
    try {
        parse_json("{\n  \"f\": [1,\n  ]\n}", "bad.json");
        FAIL() << "no throw";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("bad.json:3:"), std::string::npos) << e.what();
    }
    EXPECT_THROW(read_json_file("/nonexistent/curve.json"), InputError);
}

TEST(Json, SchemaErrorsNameThePath)
{
    auto message = [](const std::string& text) -> std::string {
        try {
            curve_from_json(parse_json(text, "t"));
        } catch (const InputError& e) {
            return e.what();
        }
        return "";
    };
    EXPECT_NE(message(R"({"g": []})").find("curve"), std::string::npos);
    EXPECT_NE(message(R"({"f": [{"coeff": "1", "x": 2, "y": 0}, {"coeff": "x", "x": 0, "y": 3}]})")
                  .find("curve.f[1].coeff"),
              std::string::npos);
    EXPECT_NE(message(R"({"f": [{"coeff": "1", "x": 2, "y": 0}, {"coeff": "1", "x": 0, "y": 3}],
                          "branches": [{"kind": "circle"}]})")
                  .find("kind"),
              std::string::npos);
}

TEST(Json, ModuleSchemaErrors)
{
    const auto a2 = catalog_get("A", 2);
    auto bad = [&](const std::string& text) {
        EXPECT_THROW(module_from_json(parse_json(text, "t"), a2.curve), InputError) << text;
    };
    bad(R"({"cover": [{"branch": 2, "shifts": [0]}], "generators": []})");
    bad(R"({"cover": [{"branch": 1, "shifts": [0]}, {"branch": 1, "shifts": [0]}], "generators": []})");
    bad(R"({"cover": [{"branch": 1, "shifts": [0]}],
            "generators": [[{"branch": 1, "index": 2, "coeff": "1", "exp": 0}]]})");
    bad(R"({"cover": [{"branch": 1, "shifts": [0]}],
            "generators": [[{"branch": 1, "index": 1, "coeff": "1", "exp": -1}]]})");
}

TEST(Json, ReportsAreDeterministic)
{
    const auto y = yfamily(3, 2);
    const auto fx = fixture_modules(y).front();
    const auto r1 = natural_connection(y.curve, fx.module);
    const auto r2 = natural_connection(y.curve, fx.module);
    EXPECT_EQ(connection_report_to_json(y.curve, r1).dump(), connection_report_to_json(y.curve, r2).dump());
    EXPECT_EQ(derivations_report(y.curve).dump(), derivations_report(y.curve).dump());
    EXPECT_EQ(semigroups_report(y.curve, -1).dump(), semigroups_report(y.curve, -1).dump());
}

TEST(Json, ConnectionReportShape)
{
    const auto y = yfamily(3, 2);
    const auto r = natural_connection(y.curve, free_cyclic_module(y.curve, 2));
    const Json j = connection_report_to_json(y.curve, r);
    EXPECT_EQ(j["path"], "C3-shift-path");
    EXPECT_EQ(j["lambda"], 2);
    EXPECT_TRUE(j["stable"].get<bool>());
    EXPECT_TRUE(j["verified"].is_null());
    EXPECT_EQ(j["q"].size(), 2u);
    EXPECT_EQ(j["module"]["cover"][0]["shifts"], Json::array({0}));
}

TEST(Json, SemigroupReportForYFamily)
{
    const auto y = yfamily(3, 2);
    const Json j = semigroups_report(y.curve, -1);
    EXPECT_TRUE(j["oracle_agrees"].get<bool>());
    EXPECT_EQ(j["branches"][0]["shift"], 2);
    EXPECT_EQ(j["branches"][0]["g"], 1);
    EXPECT_EQ(j["branches"][1]["g"], 3);
}

TEST(Json, TextRendering)
{
    const std::string text = render_text(Json{{"path", "none"}, {"list", Json::array({1, 2})}});
    EXPECT_NE(text.find("path: none"), std::string::npos);
}

} // namespace
