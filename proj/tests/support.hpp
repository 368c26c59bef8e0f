#pragma once

// Shared helpers for the test suites and the acceptance runner.

#include "qhc/catalog.hpp"
#include "qhc/curve.hpp"
#include "qhc/module.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace qhc::testing {

inline FieldElement q(long num, long den = 1)
{
    Rational r(num, den);
    r.canonicalize();
    return FieldElement(r);
}

/// A curve given by a polynomial over Q, factored automatically.
inline QuasiCurve rational_curve(const BiPoly& f) { return QuasiCurve(Field(), f); }

/// x^a * y^b with coefficient c.
inline BiPoly mono(const FieldElement& c, int a, int b) { return BiPoly::monomial(c, a, b); }

/// The cusp module that no embedding fix rescues: cover shifts (0, 1) on the
/// single branch of x^2 + y^3, generators {e_1, e_2 + t e_1}.
inline GradedSubmodule unstable_cusp_module(const QuasiCurve& cusp)
{
    const FieldElement one = cusp.field().one();
    FreeCover cover(cusp.t_degrees(), {{0, 1}});
    return make_submodule(cover, {ModuleElement::term({0, 0}, one, 0),
                                  ModuleElement::term({0, 1}, one, 0) + ModuleElement::term({0, 0}, one, 1)});
}

/// A random nonzero rational num/den with |num| <= range, 1 <= den <= range.
inline Rational random_rational(std::mt19937_64& rng, int range)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, range);
    int n = 0;
    while (n == 0)
        n = num(rng);
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
}

/// A random element of `field` with small rational coordinates.
inline FieldElement random_element(std::mt19937_64& rng, const Field& field, int range = 5)
{
    std::vector<Rational> coords;
    for (int k = 0; k < field.degree(); ++k)
        coords.push_back(random_rational(rng, range));
    return field.element(std::move(coords));
}

/// Description of a random reduced quasi-homogeneous curve over Q built as
/// a product of distinct branches with rational roots.
struct RandomCurve {
    Weights weights;
    BiPoly f;
    std::vector<BiPoly> factors;
    FieldElement unit;
};

/// Weights in [1, max_weight] (coprime), 1..max_branches distinct branches
/// among x, y and binomials x^{w_y} + a y^{w_x} with a = -1/b^{w_x}.
inline RandomCurve random_curve(std::mt19937_64& rng, int max_weight, int max_branches)
{
    std::uniform_int_distribution<int> wdist(1, max_weight);
    Weights w{1, 1};
    do {
        w = {wdist(rng), wdist(rng)};
    } while (std::gcd(w.x, w.y) != 1);

    const int r = std::uniform_int_distribution<int>(1, max_branches)(rng);
    std::vector<BiPoly> candidates{BiPoly::x(), BiPoly::y()};
    std::vector<Rational> used;
    std::uniform_int_distribution<int> bdist(-3, 3);
    while (static_cast<int>(candidates.size()) < r + 2) {
        int num = 0;
        while (num == 0)
            num = bdist(rng);
        Rational b(num, std::uniform_int_distribution<int>(1, 2)(rng));
        b.canonicalize();
        Rational bw = 1;
        for (int k = 0; k < w.x; ++k)
            bw *= b;
        const Rational a = Rational(-1) / bw;
        bool fresh = true;
        for (const auto& u : used)
            fresh = fresh && u != a;
        if (!fresh)
            continue;
        used.push_back(a);
        candidates.push_back(mono(q(1), w.y, 0) + mono(FieldElement(a), 0, w.x));
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    RandomCurve out;
    out.weights = w;
    out.unit = FieldElement(random_rational(rng, 4));
    out.f = BiPoly::constant(out.unit);
    for (int k = 0; k < r; ++k) {
        out.factors.push_back(candidates[static_cast<std::size_t>(k)]);
        out.f *= candidates[static_cast<std::size_t>(k)];
    }
    return out;
}

/// A random quasi-homogeneous polynomial of the given weight.
inline BiPoly random_homogeneous(std::mt19937_64& rng, const Field& field, Weights w, int weight)
{
    BiPoly out;
    for (const auto& [a, b] : monomials_of_weight(w, weight))
        out += BiPoly::monomial(random_element(rng, field, 3), a, b);
    return out;
}

} // namespace qhc::testing
