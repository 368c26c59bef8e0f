#include "qhc/catalog.hpp"

#include "qhc/error.hpp"
#include "qhc/semigroup.hpp"

#include <numeric>

namespace qhc {

namespace {

// x^a + c*y^b
BiPoly binomial_sum(int a, const FieldElement& c, int b)
{
    return BiPoly::monomial(FieldElement(1L), a, 0) + BiPoly::monomial(c, 0, b);
}

BranchSpec axis_x() { return {BranchKind::AxisX, FieldElement(), std::nullopt}; }
BranchSpec axis_y() { return {BranchKind::AxisY, FieldElement(), std::nullopt}; }
BranchSpec binomial(const FieldElement& a, const FieldElement& b) { return {BranchKind::Binomial, a, b}; }

Field gaussian() { return Field({Rational(1), Rational(0), Rational(1)}); }                             // a^2 + 1
Field cyclotomic8() { return Field({Rational(1), Rational(0), Rational(0), Rational(0), Rational(1)}); } // a^4 + 1

// Branches of x^2 + y^{2k} for k = 1, 2, 3 (weights (k, 1)): the two
// binomials x + a y^k with a = +-i and a * b^k = -1.
std::vector<BranchSpec> split_even(int k, Field& field)
{
    switch (k) {
    case 1: {
        field = gaussian();
        const FieldElement i = field.generator();
        return {binomial(i, i), binomial(-i, -i)};
    }
    case 2: {
        field = cyclotomic8();
        const FieldElement z = field.generator(); // z^2 = i
        return {binomial(z.pow(2), z), binomial(-z.pow(2), z.pow(3))};
    }
    case 3: {
        field = gaussian();
        const FieldElement i = field.generator();
        return {binomial(i, -i), binomial(-i, i)};
    }
    default:
        throw InputError("unsupported even exponent");
    }
}

CatalogEntry make(std::string label, char family, int index, Field field, BiPoly f, Weights w,
                  std::vector<BranchSpec> branches)
{
    QuasiCurve curve(std::move(field), std::move(f), w, std::move(branches));
    return CatalogEntry{std::move(label), family, index, 0, 0, std::move(curve)};
}

CatalogEntry a_entry(int n)
{
    if (n < 1 || n > 6)
        throw InputError("A_n is supported for n = 1..6, got " + std::to_string(n));
    const std::string label = "A_" + std::to_string(n);
    const BiPoly f = BiPoly::monomial(FieldElement(1L), 2, 0) + BiPoly::monomial(FieldElement(1L), 0, n + 1);
    if (n % 2 == 0)
        return make(label, 'A', n, Field(), f, {n + 1, 2}, {binomial(FieldElement(1L), FieldElement(-1L))});
    const int k = (n + 1) / 2;
    Field field;
    auto branches = split_even(k, field);
    return make(label, 'A', n, field, f, {k, 1}, std::move(branches));
}

CatalogEntry d_entry(int n)
{
    if (n < 4 || n > 6)
        throw InputError("D_n is supported for n = 4..6, got " + std::to_string(n));
    const std::string label = "D_" + std::to_string(n);
    const BiPoly f = BiPoly::monomial(FieldElement(1L), 2, 1) + BiPoly::monomial(FieldElement(1L), 0, n - 1);
    if (n % 2 == 1)
        return make(label, 'D', n, Field(), f, {n - 2, 2},
                    {axis_y(), binomial(FieldElement(1L), FieldElement(-1L))});
    const int k = (n - 2) / 2;
    Field field;
    auto branches = split_even(k, field);
    branches.insert(branches.begin(), axis_y());
    return make(label, 'D', n, field, f, {k, 1}, std::move(branches));
}

CatalogEntry e_entry(int n)
{
    const FieldElement one(1L);
    switch (n) {
    case 6: {
        const Field field = cyclotomic8();
        return make("E_6", 'E', 6, field, binomial_sum(3, one, 4), {4, 3}, {binomial(one, field.generator())});
    }
    case 7:
        return make("E_7", 'E', 7, Field(),
                    BiPoly::monomial(one, 3, 0) + BiPoly::monomial(one, 1, 3), {3, 2},
                    {axis_x(), binomial(one, FieldElement(-1L))});
    case 8:
        return make("E_8", 'E', 8, Field(), binomial_sum(3, one, 5), {5, 3}, {binomial(one, FieldElement(-1L))});
    default:
        throw InputError("E_n is supported for n = 6, 7, 8, got " + std::to_string(n));
    }
}

} // namespace

CatalogEntry yfamily(int m, int n)
{
    if (m < 1 || n < 1 || m > 10 || n > 10)
        throw InputError("YFamily needs 1 <= m, n <= 10");
    if (std::gcd(m, n) != 1)
        throw InputError("YFamily needs coprime m and n");
    const FieldElement one(1L);
    // y * (x^n - y^m)
    const BiPoly f = BiPoly::monomial(one, n, 1) - BiPoly::monomial(one, 0, m + 1);
    QuasiCurve curve(Field(), f, Weights{m, n}, std::vector<BranchSpec>{axis_y(), binomial(-one, one)});
    return CatalogEntry{"YFamily(" + std::to_string(m) + "," + std::to_string(n) + ")", 'Y', 0, m, n,
                        std::move(curve)};
}

CatalogEntry catalog_get(const std::string& family, int index, int m, int n)
{
    if (family == "A")
        return a_entry(index);
    if (family == "D")
        return d_entry(index);
    if (family == "E")
        return e_entry(index);
    if (family == "Y")
        return yfamily(m, n);
    throw InputError("unknown catalog label '" + family + "' (expected A, D, E or Y)");
}

std::vector<CatalogEntry> catalog_list()
{
    std::vector<CatalogEntry> out;
    for (int n = 1; n <= 6; ++n)
        out.push_back(a_entry(n));
    for (int n = 4; n <= 6; ++n)
        out.push_back(d_entry(n));
    for (int n = 6; n <= 8; ++n)
        out.push_back(e_entry(n));
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {4, 3}, {5, 2}, {7, 3}})
        out.push_back(yfamily(m, n));
    return out;
}

GradedSubmodule free_cyclic_module(const QuasiCurve& curve, int lambda)
{
    ModuleElement gen;
    for (std::size_t i = 0; i < curve.r(); ++i)
        gen += ModuleElement::term({static_cast<int>(i), 0}, curve.field().one(), 0);
    return make_submodule(FreeCover(curve.t_degrees(), std::vector<std::vector<int>>(curve.r(), {lambda})), {gen});
}

namespace {

std::vector<Fixture> yfamily_fixtures(const CatalogEntry& entry)
{
    const QuasiCurve& curve = entry.curve;
    const FieldElement one = curve.field().one();
    const BasisIndex e11{0, 0};
    const BasisIndex e21{1, 0};
    std::vector<Fixture> out;

    const ShiftedSemigroup gamma2 = gamma_formula(curve, 1);
    for (int h = 1; h < gamma2.conductor(); ++h) {
        if (gamma2.contains(h))
            continue;
        FreeCover cover(curve.t_degrees(), {{0}, {0}});
        auto m = make_submodule(cover, {ModuleElement::term(e11, one, 0) + ModuleElement::term(e21, one, 0),
                                        ModuleElement::term(e21, one, h)});
        out.push_back({"case1_h" + std::to_string(h), 1, h, std::move(m)});
    }
    const auto base = NumericalSemigroup::from_generators({entry.m, entry.n});
    for (int h : base.gaps()) {
        if (h < 1)
            continue;
        FreeCover cover(curve.t_degrees(), {{h}, {0}});
        auto m = make_submodule(cover, {ModuleElement::term(e11, one, 0) + ModuleElement::term(e21, one, h),
                                        ModuleElement::term(e21, one, 0)});
        out.push_back({"case2_h" + std::to_string(h), 2, h, std::move(m)});
    }
    return out;
}

std::vector<Fixture> ade_fixtures(const CatalogEntry& entry)
{
    const QuasiCurve& curve = entry.curve;
    const FieldElement one = curve.field().one();
    const std::vector<std::vector<int>> zero_shifts(curve.r(), {0});
    std::vector<Fixture> out;

    std::vector<ModuleElement> normalization;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        const BasisIndex e{static_cast<int>(i), 0};
        normalization.push_back(ModuleElement::term(e, one, 0));
        const Branch& br = curve.branch(i);
        if (br.kind != BranchKind::Binomial)
            continue;
        const Weights w = curve.weights();
        const auto semigroup = NumericalSemigroup::from_generators({w.x, w.y});
        for (int b : semigroup.gaps())
            normalization.push_back(ModuleElement::term(e, one, b));
    }
    out.push_back({"normalization", 0, std::nullopt,
                   make_submodule(FreeCover(curve.t_degrees(), zero_shifts), std::move(normalization))});

    ModuleElement mx;
    ModuleElement my;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        const BasisIndex e{static_cast<int>(i), 0};
        mx.add(e, curve.branch(i).nx);
        my.add(e, curve.branch(i).ny);
    }
    out.push_back({"maximal_ideal", 0, std::nullopt,
                   make_submodule(FreeCover(curve.t_degrees(), zero_shifts), {mx, my})});
    return out;
}

} // namespace

std::vector<Fixture> fixture_modules(const CatalogEntry& entry)
{
    std::vector<Fixture> out = entry.family == 'Y' ? yfamily_fixtures(entry) : ade_fixtures(entry);
    out.push_back({"free_cyclic", 0, std::nullopt, free_cyclic_module(entry.curve, 0)});
    return out;
}

} // namespace qhc
