#include "qhc/module.hpp"

#include "qhc/error.hpp"
#include "qhc/linear.hpp"
#include "qhc/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qhc {

// -------------------------------------------------------------- FreeCover

FreeCover::FreeCover(std::vector<int> t_degrees, std::vector<std::vector<int>> shifts)
    : t_degrees_(std::move(t_degrees)), shifts_(std::move(shifts))
{
    if (t_degrees_.size() != shifts_.size())
        throw InputError("free cover: one shift list per branch is required");
    for (int d : t_degrees_)
        if (d <= 0)
            throw InputError("free cover: t-degrees must be positive");
}

int FreeCover::total_rank() const noexcept
{
    int n = 0;
    for (const auto& s : shifts_)
        n += static_cast<int>(s.size());
    return n;
}

bool FreeCover::contains(BasisIndex e) const noexcept
{
    return e.branch >= 0 && static_cast<std::size_t>(e.branch) < shifts_.size() && e.index >= 0 &&
           static_cast<std::size_t>(e.index) < shifts_[static_cast<std::size_t>(e.branch)].size();
}

int FreeCover::shift(BasisIndex e) const
{
    if (!contains(e))
        throw InputError("basis element e[" + std::to_string(e.branch + 1) + "," + std::to_string(e.index + 1) +
                         "] is not in the cover");
    return shifts_[static_cast<std::size_t>(e.branch)][static_cast<std::size_t>(e.index)];
}

std::vector<BasisIndex> FreeCover::basis() const
{
    std::vector<BasisIndex> out;
    for (std::size_t i = 0; i < shifts_.size(); ++i)
        for (std::size_t j = 0; j < shifts_[i].size(); ++j)
            out.push_back({static_cast<int>(i), static_cast<int>(j)});
    return out;
}

std::size_t FreeCover::position(BasisIndex e) const
{
    if (!contains(e))
        throw InputError("basis element outside the cover");
    std::size_t pos = 0;
    for (int i = 0; i < e.branch; ++i)
        pos += shifts_[static_cast<std::size_t>(i)].size();
    return pos + static_cast<std::size_t>(e.index);
}

// ---------------------------------------------------------- ModuleElement

ModuleElement ModuleElement::term(BasisIndex e, const FieldElement& c, int exponent)
{
    ModuleElement m;
    m.add(e, UniPoly::monomial(c, exponent));
    return m;
}

UniPoly ModuleElement::entry(BasisIndex e) const
{
    auto it = entries_.find(e);
    return it == entries_.end() ? UniPoly() : it->second;
}

void ModuleElement::add(BasisIndex e, const UniPoly& p)
{
    if (p.is_zero())
        return;
    auto it = entries_.find(e);
    if (it == entries_.end()) {
        entries_.emplace(e, p);
        return;
    }
    it->second += p;
    if (it->second.is_zero())
        entries_.erase(it);
}

ModuleElement ModuleElement::act(const std::vector<UniPoly>& a) const
{
    ModuleElement out;
    for (const auto& [e, p] : entries_)
        out.add(e, a.at(static_cast<std::size_t>(e.branch)) * p);
    return out;
}

ModuleElement ModuleElement::projection(int branch) const
{
    ModuleElement out;
    for (const auto& [e, p] : entries_)
        if (e.branch == branch)
            out.entries_.emplace(e, p);
    return out;
}

std::optional<int> ModuleElement::degree(const FreeCover& cover) const
{
    std::optional<int> deg;
    for (const auto& [e, p] : entries_)
        for (const auto& [exp, c] : p.terms()) {
            const int d = cover.degree(e, exp);
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
    return deg;
}

std::map<int, ModuleElement> ModuleElement::components(const FreeCover& cover) const
{
    std::map<int, ModuleElement> out;
    for (const auto& [e, p] : entries_)
        for (const auto& [exp, c] : p.terms())
            out[cover.degree(e, exp)].add(e, UniPoly::monomial(c, exp));
    return out;
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& rhs)
{
    for (const auto& [e, p] : rhs.entries_)
        add(e, p);
    return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& rhs)
{
    for (const auto& [e, p] : rhs.entries_)
        add(e, -p);
    return *this;
}

ModuleElement& ModuleElement::operator*=(const FieldElement& c)
{
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [e, p] : entries_)
        p *= c;
    return *this;
}

std::string ModuleElement::to_string() const
{
    if (entries_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, p] : entries_) {
        const std::string basis = "e[" + std::to_string(e.branch + 1) + "," + std::to_string(e.index + 1) + "]";
        for (const auto& [exp, c] : p.terms()) {
            std::string coeff = UniPoly::monomial(c, exp).to_string("t" + std::to_string(e.branch + 1));
            bool negative = false;
            if (coeff.front() == '-') {
                negative = true;
                coeff.erase(0, 1);
            }
            if (!first)
                out << (negative ? " - " : " + ");
            else if (negative)
                out << "-";
            first = false;
            if (coeff != "1")
                out << coeff << "*";
            out << basis;
        }
    }
    return out.str();
}

// -------------------------------------------------------- GradedSubmodule

GradedSubmodule make_submodule(FreeCover cover, std::vector<ModuleElement> generators)
{
    if (generators.empty())
        throw InputError("a module needs at least one generator");
    GradedSubmodule m;
    for (std::size_t l = 0; l < generators.size(); ++l) {
        const ModuleElement& g = generators[l];
        if (g.is_zero())
            throw InputError("generator " + std::to_string(l + 1) + " is zero");
        for (const auto& [e, p] : g.entries()) {
            if (!cover.contains(e))
                throw InputError("generator " + std::to_string(l + 1) + " uses a basis element outside the cover");
            if (*p.low_degree() < 0)
                throw InputError("generator " + std::to_string(l + 1) + " has a negative exponent");
        }
        const auto deg = g.degree(cover);
        if (!deg)
            throw InputError("generator " + std::to_string(l + 1) + " is not homogeneous: " + g.to_string());
        m.weights.push_back(*deg);
    }
    m.cover = std::move(cover);
    m.generators = std::move(generators);
    return m;
}

void check_compatible(const QuasiCurve& curve, const GradedSubmodule& m)
{
    if (m.cover.num_branches() != curve.r())
        throw InputError("module cover has " + std::to_string(m.cover.num_branches()) + " branches, curve has " +
                         std::to_string(curve.r()));
    if (m.cover.t_degrees() != curve.t_degrees())
        throw InputError("module cover t-degrees do not match the curve");
}

namespace {

// Coordinates of a degree-w element on the cover basis. In a fixed degree
// each e_ij carries at most one monomial, so one coordinate per e_ij.
Vector to_coords(const FreeCover& cover, const ModuleElement& v)
{
    Vector out(static_cast<std::size_t>(cover.total_rank()));
    for (const auto& [e, p] : v.entries())
        for (const auto& [exp, c] : p.terms())
            out[cover.position(e)] += c;
    return out;
}

ModuleElement from_coords(const FreeCover& cover, const Vector& x, int w)
{
    ModuleElement out;
    const auto basis = cover.basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (x[k].is_zero())
            continue;
        const int rest = w - cover.shift(basis[k]);
        const int d = cover.t_degree(static_cast<std::size_t>(basis[k].branch));
        if (rest % d != 0)
            throw ConsistencyError("coordinate in a degree the basis element cannot reach");
        out.add(basis[k], UniPoly::monomial(x[k], rest / d));
    }
    return out;
}

BiPoly monomial_poly(const QuasiCurve& curve, int a, int b) { return BiPoly::monomial(curve.field().one(), a, b); }

} // namespace

std::vector<SpanVector> spanning_set(const QuasiCurve& curve, const GradedSubmodule& m, int w)
{
    std::vector<SpanVector> out;
    for (std::size_t l = 0; l < m.generators.size(); ++l) {
        for (const auto& mono : monomials_of_weight(curve.weights(), w - m.weights[l])) {
            const auto img = normalization_image(curve, monomial_poly(curve, mono.first, mono.second));
            ModuleElement v = m.generators[l].act(img);
            if (!v.is_zero())
                out.push_back({l, mono, std::move(v)});
        }
    }
    return out;
}

GradedPiece graded_piece(const QuasiCurve& curve, const GradedSubmodule& m, int w)
{
    GradedPiece piece;
    piece.degree = w;
    const auto span = spanning_set(curve, m, w);
    if (span.empty())
        return piece;
    Matrix rows(span.size(), static_cast<std::size_t>(m.cover.total_rank()));
    for (std::size_t k = 0; k < span.size(); ++k) {
        const Vector c = to_coords(m.cover, span[k].value);
        for (std::size_t j = 0; j < c.size(); ++j)
            rows(k, j) = c[j];
    }
    for (const auto& row : row_space_basis(rows))
        piece.basis.push_back(from_coords(m.cover, row, w));
    return piece;
}

Membership contains(const QuasiCurve& curve, const GradedSubmodule& m, const ModuleElement& v)
{
    Membership out;
    if (v.is_zero()) {
        out.member = true;
        return out;
    }
    const auto deg = v.degree(m.cover);
    if (!deg)
        throw InputError("membership test needs a homogeneous element: " + v.to_string());
    const auto span = spanning_set(curve, m, *deg);
    const auto n = static_cast<std::size_t>(m.cover.total_rank());
    Matrix A(n, span.size());
    for (std::size_t k = 0; k < span.size(); ++k) {
        const Vector c = to_coords(m.cover, span[k].value);
        for (std::size_t j = 0; j < n; ++j)
            A(j, k) = c[j];
    }
    // Entries with negative exponents have coordinates no span vector reaches.
    for (const auto& [e, p] : v.entries())
        if (*p.low_degree() < 0)
            return out;
    const auto sol = linear_solve(A, to_coords(m.cover, v));
    if (!sol.consistent())
        return out;
    out.member = true;
    for (std::size_t k = 0; k < span.size(); ++k)
        if (!(*sol.solution)[k].is_zero())
            out.witness.push_back({(*sol.solution)[k], span[k].generator, span[k].monomial.first,
                                   span[k].monomial.second});
    return out;
}

ModuleElement recombine(const QuasiCurve& curve, const GradedSubmodule& m, const std::vector<WitnessTerm>& witness)
{
    ModuleElement out;
    for (const auto& w : witness) {
        const auto img = normalization_image(curve, monomial_poly(curve, w.x_exp, w.y_exp));
        out += w.coeff * m.generators.at(w.generator).act(img);
    }
    return out;
}

// ---------------------------------------------------- canonical embedding

namespace {

struct ChosenBasis {
    std::vector<ModuleElement> vectors; // branch-i projections, in the old cover
    std::vector<int> degrees;
};

// Expresses a homogeneous branch-i vector `proj` of degree w as
// sum c_j t^{k_j} b_j; nullopt when it is outside the k[t_i]-span.
std::optional<std::vector<std::pair<std::size_t, UniPoly>>>
express(const FreeCover& cover, int branch, const ChosenBasis& basis, const ModuleElement& proj, int w)
{
    const int d = cover.t_degree(static_cast<std::size_t>(branch));
    std::vector<std::size_t> usable;
    std::vector<ModuleElement> columns;
    for (std::size_t j = 0; j < basis.vectors.size(); ++j) {
        const int gap = w - basis.degrees[j];
        if (gap < 0 || gap % d != 0)
            continue;
        std::vector<UniPoly> mult(cover.num_branches());
        mult[static_cast<std::size_t>(branch)] = UniPoly::monomial(FieldElement(1L), gap / d);
        usable.push_back(j);
        columns.push_back(basis.vectors[j].act(mult));
    }
    const auto n = static_cast<std::size_t>(cover.total_rank());
    Matrix A(n, columns.size());
    for (std::size_t k = 0; k < columns.size(); ++k) {
        const Vector c = to_coords(cover, columns[k]);
        for (std::size_t j = 0; j < n; ++j)
            A(j, k) = c[j];
    }
    const auto sol = linear_solve(A, to_coords(cover, proj));
    if (!sol.consistent())
        return std::nullopt;
    std::vector<std::pair<std::size_t, UniPoly>> out;
    for (std::size_t k = 0; k < usable.size(); ++k) {
        const FieldElement& c = (*sol.solution)[k];
        if (c.is_zero())
            continue;
        const int gap = w - basis.degrees[usable[k]];
        out.emplace_back(usable[k], UniPoly::monomial(c, gap / d));
    }
    return out;
}

} // namespace

GradedSubmodule canonical_embedding(const QuasiCurve& curve, const GradedSubmodule& m)
{
    check_compatible(curve, m);
    const FreeCover& cover = m.cover;
    const std::size_t L = m.generators.size();
    std::vector<std::size_t> order(L);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return m.weights[a] < m.weights[b]; });

    std::vector<ModuleElement> rewritten(L);
    std::vector<std::vector<int>> new_shifts(cover.num_branches());
    for (std::size_t i = 0; i < cover.num_branches(); ++i) {
        const int branch = static_cast<int>(i);
        ChosenBasis basis;
        for (std::size_t l : order) {
            const ModuleElement proj = m.generators[l].projection(branch);
            if (proj.is_zero())
                continue;
            if (!express(cover, branch, basis, proj, m.weights[l])) {
                basis.vectors.push_back(proj);
                basis.degrees.push_back(m.weights[l]);
            }
        }
        new_shifts[i] = basis.degrees;
        for (std::size_t l = 0; l < L; ++l) {
            const ModuleElement proj = m.generators[l].projection(branch);
            if (proj.is_zero())
                continue;
            const auto coeffs = express(cover, branch, basis, proj, m.weights[l]);
            if (!coeffs)
                throw ConsistencyError("canonical embedding lost a generator projection");
            for (const auto& [j, poly] : *coeffs)
                rewritten[l].add({branch, static_cast<int>(j)}, poly);
        }
    }
    GradedSubmodule out = make_submodule(FreeCover(cover.t_degrees(), std::move(new_shifts)), std::move(rewritten));
    if (out.weights != m.weights)
        throw ConsistencyError("canonical embedding changed generator weights");
    return out;
}

// ------------------------------------------------------------- conditions

bool all_hold(const std::vector<ConditionVerdict>& v)
{
    return std::all_of(v.begin(), v.end(), [](const ConditionVerdict& c) { return c.holds; });
}

std::vector<ConditionVerdict> check_C1(const QuasiCurve& curve, const GradedSubmodule& m)
{
    std::vector<ConditionVerdict> out;
    for (const BasisIndex e : m.cover.basis()) {
        const auto span = spanning_set(curve, m, m.cover.shift(e));
        // Only the branch-i coordinates are constrained.
        std::vector<std::size_t> rows;
        for (const BasisIndex other : m.cover.basis())
            if (other.branch == e.branch)
                rows.push_back(m.cover.position(other));
        Matrix A(rows.size(), span.size());
        for (std::size_t k = 0; k < span.size(); ++k) {
            const Vector c = to_coords(m.cover, span[k].value);
            for (std::size_t r = 0; r < rows.size(); ++r)
                A(r, k) = c[rows[r]];
        }
        Vector rhs(rows.size());
        const std::size_t target = m.cover.position(e);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r] == target)
                rhs[r] = FieldElement(1L);
        out.push_back({e, linear_solve(A, rhs).consistent()});
    }
    return out;
}

std::vector<ConditionVerdict> check_C2(const QuasiCurve& curve, const GradedSubmodule& m)
{
    std::vector<ConditionVerdict> out;
    for (const BasisIndex e : m.cover.basis()) {
        const int g = gamma_formula(curve, static_cast<std::size_t>(e.branch)).frobenius();
        const ModuleElement v = ModuleElement::term(e, curve.field().one(), g);
        out.push_back({e, contains(curve, m, v).member});
    }
    return out;
}

C3Verdict check_C3(const GradedSubmodule& m)
{
    std::optional<int> common;
    for (const auto& branch : m.cover.shifts())
        for (int s : branch) {
            if (common && *common != s)
                return {false, 0};
            common = s;
        }
    if (!common)
        return {false, 0};
    return {true, *common};
}

GradedSubmodule shift(const GradedSubmodule& m, int lambda)
{
    std::vector<std::vector<int>> shifts = m.cover.shifts();
    for (auto& branch : shifts)
        for (int& s : branch)
            s += lambda;
    GradedSubmodule out;
    out.cover = FreeCover(m.cover.t_degrees(), std::move(shifts));
    out.generators = m.generators;
    out.weights = m.weights;
    for (int& w : out.weights)
        w += lambda;
    return out;
}

int default_degree_bound(const QuasiCurve& curve, const GradedSubmodule& m)
{
    const int max_w = *std::max_element(m.weights.begin(), m.weights.end());
    int max_cd = 0;
    for (std::size_t i = 0; i < curve.r(); ++i)
        max_cd = std::max(max_cd, gamma_formula(curve, i).conductor() * curve.branch(i).t_degree);
    const Weights w = curve.weights();
    return max_w + curve.koszul_weight() + max_cd + 2 * std::max(w.x, w.y);
}

int min_degree(const GradedSubmodule& m) { return *std::min_element(m.weights.begin(), m.weights.end()); }

} // namespace qhc
