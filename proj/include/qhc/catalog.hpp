#pragma once

#include "qhc/curve.hpp"
#include "qhc/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qhc {

/// A preset curve: the simple singularities A_1..A_6, D_4..D_6, E_6, E_7,
/// E_8 and the family y(x^n - y^m). Branch lists (and any extension field)
/// are fixed by hand and validated when the entry is built.
struct CatalogEntry {
    std::string label;  ///< "A_2", "E_6", "YFamily(3,2)"
    char family = 'A';  ///< 'A', 'D', 'E' or 'Y'
    int index = 0;      ///< n of A_n/D_n/E_n; 0 for the family
    int m = 0;          ///< YFamily only
    int n = 0;          ///< YFamily only
    QuasiCurve curve;
};

/// family is one of "A", "D", "E" (index required) or "Y" (m and n
/// required, coprime, both in 1..10). Throws InputError when unsupported.
CatalogEntry catalog_get(const std::string& family, int index = 0, int m = 0, int n = 0);

/// y(x^n - y^m) with weights (m, n) and branches y, x^n - y^m.
CatalogEntry yfamily(int m, int n);

/// Every ADE entry followed by YFamily at (2,1), (3,2), (4,3), (5,2), (7,3).
std::vector<CatalogEntry> catalog_list();

struct Fixture {
    std::string name;
    int fixture_case = 0;  ///< YFamily case 1 or 2; 0 otherwise
    std::optional<int> h;  ///< YFamily parameter
    GradedSubmodule module;
};

/// YFamily(m,n): case (1) {e_11 + e_21, t_2^h e_21} for h >= 1 outside
/// Gamma_2, and case (2) {e_11 + t_2^h e_21, e_21} with f_11 = h for h >= 1
/// outside <m,n>.
/// ADE: the normalization (generators e_i and t_i^b e_i for the gaps b of
/// the branch semigroup) and the maximal ideal (n(x), n(y) times sum e_i).
/// Every entry also gets the free cyclic module A * sum e_i.
std::vector<Fixture> fixture_modules(const CatalogEntry& entry);

/// A * (e_1 + ... + e_r) with every shift equal to lambda.
GradedSubmodule free_cyclic_module(const QuasiCurve& curve, int lambda);

} // namespace qhc
