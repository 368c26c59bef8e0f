#include "qhc/json_io.hpp"

#include "qhc/derivation.hpp"
#include "qhc/error.hpp"
#include "qhc/semigroup.hpp"

#include <fstream>
#include <sstream>

namespace qhc {

// ------------------------------------------------------------------ parsing

Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < end; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

namespace {

const Json& require(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(where + ": missing field \"" + key + "\"");
    return *it;
}

int as_int(const Json& j, const std::string& where)
{
    if (!j.is_number_integer())
        throw InputError(where + ": expected an integer");
    return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    return j;
}

Rational rational_from_json(const Json& j, const std::string& where)
{
    try {
        if (j.is_string())
            return parse_rational(j.get<std::string>());
        if (j.is_number_integer())
            return Rational(j.get<long>());
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a rational as \"p/q\" or an integer");
}

std::string at(const std::string& where, std::size_t k) { return where + "[" + std::to_string(k) + "]"; }

} // namespace

Json field_element_to_json(const FieldElement& c, const Field& field)
{
    Json out = Json::array();
    const auto& coords = c.coords();
    for (int k = 0; k < field.degree(); ++k) {
        const std::size_t kk = static_cast<std::size_t>(k);
        out.push_back(rational_to_fraction(kk < coords.size() ? coords[kk] : Rational(0)));
    }
    return out;
}

FieldElement field_element_from_json(const Json& j, const Field& field, const std::string& where)
{
    if (!j.is_array())
        return field.element(rational_from_json(j, where));
    if (j.size() != static_cast<std::size_t>(field.degree()))
        throw InputError(where + ": expected " + std::to_string(field.degree()) + " coordinates, got " +
                         std::to_string(j.size()));
    std::vector<Rational> coords;
    for (std::size_t k = 0; k < j.size(); ++k)
        coords.push_back(rational_from_json(j[k], at(where, k)));
    return field.element(std::move(coords));
}

// -------------------------------------------------------------------- curve

Json curve_to_json(const QuasiCurve& curve)
{
    const Field& field = curve.field();
    Json out;
    Json min_poly = Json::array();
    for (const auto& c : field.min_poly())
        min_poly.push_back(rational_to_fraction(c));
    out["field"] = Json{{"min_poly", min_poly}};
    out["weights"] = Json::array({curve.weights().x, curve.weights().y});
    Json f = Json::array();
    for (const auto& [e, c] : curve.f().terms())
        f.push_back(Json{{"coeff", field_element_to_json(c, field)}, {"x", e.first}, {"y", e.second}});
    out["f"] = f;
    Json branches = Json::array();
    for (const auto& spec : curve.branch_specs()) {
        Json b;
        b["kind"] = to_string(spec.kind);
        if (spec.kind == BranchKind::Binomial) {
            b["a"] = field_element_to_json(spec.a, field);
            b["b"] = field_element_to_json(*spec.b, field);
        }
        branches.push_back(b);
    }
    out["branches"] = branches;
    return out;
}

QuasiCurve curve_from_json(const Json& j)
{
    const std::string root = "curve";
    Field field;
    if (j.is_object() && j.contains("field")) {
        const Json& mp = as_array(require(require(j, "field", root), "min_poly", root + ".field"),
                                  root + ".field.min_poly");
        std::vector<Rational> coeffs;
        for (std::size_t k = 0; k < mp.size(); ++k)
            coeffs.push_back(rational_from_json(mp[k], at(root + ".field.min_poly", k)));
        field = Field(std::move(coeffs));
    }
    std::optional<Weights> weights;
    if (j.is_object() && j.contains("weights")) {
        const Json& w = as_array(j["weights"], root + ".weights");
        if (w.size() != 2)
            throw InputError(root + ".weights: expected [w_x, w_y]");
        weights = Weights{as_int(w[0], root + ".weights[0]"), as_int(w[1], root + ".weights[1]")};
    }
    const Json& terms = as_array(require(j, "f", root), root + ".f");
    BiPoly f;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string where = at(root + ".f", k);
        const FieldElement c = field_element_from_json(require(terms[k], "coeff", where), field, where + ".coeff");
        f += BiPoly::monomial(c, as_int(require(terms[k], "x", where), where + ".x"),
                              as_int(require(terms[k], "y", where), where + ".y"));
    }
    std::optional<std::vector<BranchSpec>> branches;
    if (j.contains("branches")) {
        const Json& list = as_array(j["branches"], root + ".branches");
        branches.emplace();
        for (std::size_t k = 0; k < list.size(); ++k) {
            const std::string where = at(root + ".branches", k);
            const Json& kind_j = require(list[k], "kind", where);
            const std::string kind = kind_j.is_string() ? kind_j.get<std::string>() : "";
            BranchSpec spec;
            if (kind == "axis_x") {
                spec.kind = BranchKind::AxisX;
            } else if (kind == "axis_y") {
                spec.kind = BranchKind::AxisY;
            } else if (kind == "binomial") {
                spec.kind = BranchKind::Binomial;
                spec.a = field_element_from_json(require(list[k], "a", where), field, where + ".a");
                if (list[k].contains("b"))
                    spec.b = field_element_from_json(list[k]["b"], field, where + ".b");
            } else {
                throw InputError(where + ".kind: expected \"axis_x\", \"axis_y\" or \"binomial\"");
            }
            branches->push_back(std::move(spec));
        }
    }
    return QuasiCurve(field, f, weights, std::move(branches));
}

// ------------------------------------------------------------------- module

Json element_to_json(const ModuleElement& v, const Field& field)
{
    Json out = Json::array();
    for (const auto& [e, p] : v.entries())
        for (const auto& [exp, c] : p.terms())
            out.push_back(Json{{"branch", e.branch + 1},
                               {"index", e.index + 1},
                               {"coeff", field_element_to_json(c, field)},
                               {"exp", exp}});
    return out;
}

Json module_to_json(const GradedSubmodule& m, const Field& field)
{
    Json cover = Json::array();
    for (std::size_t i = 0; i < m.cover.num_branches(); ++i)
        cover.push_back(Json{{"branch", i + 1}, {"shifts", m.cover.shifts()[i]}});
    Json gens = Json::array();
    for (const auto& g : m.generators)
        gens.push_back(element_to_json(g, field));
    return Json{{"cover", cover}, {"generators", gens}};
}

GradedSubmodule module_from_json(const Json& j, const QuasiCurve& curve)
{
    const std::string root = "module";
    const Json& cover_j = as_array(require(j, "cover", root), root + ".cover");
    std::vector<std::vector<int>> shifts(curve.r());
    std::vector<bool> seen(curve.r(), false);
    for (std::size_t k = 0; k < cover_j.size(); ++k) {
        const std::string where = at(root + ".cover", k);
        const int branch = as_int(require(cover_j[k], "branch", where), where + ".branch");
        if (branch < 1 || static_cast<std::size_t>(branch) > curve.r())
            throw InputError(where + ".branch: " + std::to_string(branch) + " is not in 1.." +
                             std::to_string(curve.r()));
        const auto b = static_cast<std::size_t>(branch - 1);
        if (seen[b])
            throw InputError(where + ".branch: branch " + std::to_string(branch) + " listed twice");
        seen[b] = true;
        const Json& s = as_array(require(cover_j[k], "shifts", where), where + ".shifts");
        for (std::size_t l = 0; l < s.size(); ++l)
            shifts[b].push_back(as_int(s[l], at(where + ".shifts", l)));
    }
    FreeCover cover(curve.t_degrees(), std::move(shifts));

    const Json& gens_j = as_array(require(j, "generators", root), root + ".generators");
    std::vector<ModuleElement> gens;
    for (std::size_t l = 0; l < gens_j.size(); ++l) {
        const std::string gwhere = at(root + ".generators", l);
        const Json& terms = as_array(gens_j[l], gwhere);
        ModuleElement g;
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const std::string where = at(gwhere, k);
            const BasisIndex e{as_int(require(terms[k], "branch", where), where + ".branch") - 1,
                               as_int(require(terms[k], "index", where), where + ".index") - 1};
            if (!cover.contains(e))
                throw InputError(where + ": e[" + std::to_string(e.branch + 1) + "," + std::to_string(e.index + 1) +
                                 "] is not in the cover");
            const FieldElement c =
                field_element_from_json(require(terms[k], "coeff", where), curve.field(), where + ".coeff");
            g += ModuleElement::term(e, c, as_int(require(terms[k], "exp", where), where + ".exp"));
        }
        gens.push_back(std::move(g));
    }
    return make_submodule(std::move(cover), std::move(gens));
}

// ------------------------------------------------------------------ reports

namespace {

Json unipoly_to_json(const UniPoly& p, const Field& field)
{
    Json out = Json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back(Json{{"coeff", field_element_to_json(c, field)}, {"exp", e}});
    return out;
}

Json verdicts_to_json(const std::vector<ConditionVerdict>& v)
{
    Json out = Json::array();
    for (const auto& c : v)
        out.push_back(Json{{"branch", c.index.branch + 1}, {"index", c.index.index + 1}, {"holds", c.holds}});
    return out;
}

Json c3_to_json(const C3Verdict& c3)
{
    Json out{{"holds", c3.holds}};
    out["lambda"] = c3.holds ? Json(c3.lambda) : Json(nullptr);
    return out;
}

Json witness_to_json(const std::vector<WitnessTerm>& w, const Field& field)
{
    Json out = Json::array();
    for (const auto& t : w)
        out.push_back(Json{{"coeff", field_element_to_json(t.coeff, field)},
                           {"generator", t.generator + 1},
                           {"x", t.x_exp},
                           {"y", t.y_exp}});
    return out;
}

} // namespace

Json curve_info_report(const QuasiCurve& curve)
{
    Json out;
    out["f"] = curve.f().to_string();
    out["field_degree"] = curve.field().degree();
    out["weights"] = Json::array({curve.weights().x, curve.weights().y});
    out["w_f"] = curve.wf();
    out["koszul_weight"] = curve.koszul_weight();
    out["unit"] = field_element_to_json(curve.unit(), curve.field());
    out["branch_count"] = curve.r();
    out["spec"] = curve_to_json(curve);
    return out;
}

Json branches_report(const QuasiCurve& curve)
{
    Json list = Json::array();
    for (std::size_t i = 0; i < curve.r(); ++i) {
        const Branch& br = curve.branch(i);
        Json b;
        b["branch"] = i + 1;
        b["kind"] = to_string(br.kind);
        b["polynomial"] = br.polynomial.to_string();
        if (br.kind == BranchKind::Binomial) {
            b["a"] = field_element_to_json(br.a, curve.field());
            b["b"] = field_element_to_json(br.b, curve.field());
        }
        b["weight"] = br.weight;
        b["t_degree"] = br.t_degree;
        b["branch_conductor"] = br.conductor;
        b["n_x"] = br.nx.to_string("t" + std::to_string(i + 1));
        b["n_y"] = br.ny.to_string("t" + std::to_string(i + 1));
        list.push_back(b);
    }
    return Json{{"unit", field_element_to_json(curve.unit(), curve.field())}, {"branches", list}};
}

Json semigroups_report(const QuasiCurve& curve, int bound)
{
    Json list = Json::array();
    bool all_agree = true;
    for (std::size_t i = 0; i < curve.r(); ++i) {
        const ShiftedSemigroup gamma = gamma_formula(curve, i);
        const int b = bound >= 0 ? bound : gamma.conductor() + 10;
        const auto oracle = gamma_oracle(curve, i, b);
        bool agree = true;
        std::vector<int> gaps;
        for (int g = 0; g <= b; ++g) {
            agree = agree && oracle[static_cast<std::size_t>(g)] == gamma.contains(g);
            if (g < gamma.conductor() && !gamma.contains(g))
                gaps.push_back(g);
        }
        all_agree = all_agree && agree;
        Json e;
        e["branch"] = i + 1;
        e["shift"] = gamma.shift();
        e["base_generators"] = gamma.base().generators();
        e["gaps"] = gaps;
        e["conductor"] = gamma.conductor();
        e["g"] = gamma.frobenius();
        e["oracle_bound"] = b;
        e["oracle_agrees"] = agree;
        list.push_back(e);
    }
    return Json{{"branches", list}, {"oracle_agrees", all_agree}};
}

Json derivations_report(const QuasiCurve& curve)
{
    const Field& field = curve.field();
    const KoszulData kd = koszul_data(curve);
    const QElement q = q_element(kd, curve);
    const ExtendedDerivation d = extend(curve, koszul(curve));
    const ExtendedDerivation e = extend(curve, euler(curve));
    const QVerification qv = verify_q(curve, q);
    Json list = Json::array();
    for (std::size_t i = 0; i < curve.r(); ++i) {
        Json b;
        b["branch"] = i + 1;
        b["beta"] = field_element_to_json(kd.beta[i], field);
        b["c"] = kd.c[i];
        b["g"] = kd.c[i] - 1;
        b["delta"] = unipoly_to_json(d.deltas[i], field);
        b["euler_delta"] = unipoly_to_json(e.deltas[i], field);
        b["q"] = Json{{"coeff", field_element_to_json(q.coeff[i], field)}, {"exp", q.exponent[i]}};
        list.push_back(b);
    }
    Json out;
    out["koszul_weight"] = curve.koszul_weight();
    out["branches"] = list;
    out["verification"] = Json{{"d_equals_q_e", qv.d_equals_q_e},
                               {"qx_in_A", qv.qx_combination.has_value()},
                               {"qy_in_A", qv.qy_combination.has_value()}};
    return out;
}

Json module_check_report(const QuasiCurve& curve, const GradedSubmodule& m)
{
    check_compatible(curve, m);
    const GradedSubmodule embedded = canonical_embedding(curve, m);
    Json out;
    out["embedded"] = module_to_json(embedded, curve.field());
    out["c1"] = verdicts_to_json(check_C1(curve, embedded));
    out["c2"] = verdicts_to_json(check_C2(curve, embedded));
    out["c3"] = c3_to_json(check_C3(embedded));
    return out;
}

Json connection_report_to_json(const QuasiCurve& curve, const ConnectionReport& report)
{
    const Field& field = curve.field();
    Json out;
    out["path"] = to_string(report.path);
    out["lambda"] = report.lambda ? Json(*report.lambda) : Json(nullptr);
    out["c1"] = verdicts_to_json(report.c1);
    out["c2"] = verdicts_to_json(report.c2);
    out["c3"] = c3_to_json(report.c3);
    out["module"] = module_to_json(report.working, field);
    Json q = Json::array();
    for (std::size_t i = 0; i < report.q.coeff.size(); ++i)
        q.push_back(Json{{"coeff", field_element_to_json(report.q.coeff[i], field)}, {"exp", report.q.exponent[i]}});
    out["q"] = q;
    Json images = Json::array();
    Json witnesses = Json::array();
    for (const auto& s : report.stability.entries) {
        images.push_back(Json{{"generator", s.generator + 1}, {"image", element_to_json(s.image, field)}});
        Json w{{"generator", s.generator + 1}, {"member", s.membership.member}};
        w["terms"] = witness_to_json(s.membership.witness, field);
        witnesses.push_back(w);
    }
    out["stable"] = report.stability.stable;
    out["nablaD_images"] = images;
    out["witnesses"] = witnesses;
    if (report.verified) {
        const auto& v = *report.verified;
        out["verified"] = Json{{"leibniz", v.leibniz},     {"graded", v.graded},   {"integrable", v.integrable},
                               {"degree_bound", v.degree_bound}, {"samples", v.samples}, {"seed", v.seed}};
    } else {
        out["verified"] = nullptr;
    }
    return out;
}

Json catalog_entry_report(const CatalogEntry& entry)
{
    Json out;
    out["label"] = entry.label;
    out["f"] = entry.curve.f().to_string();
    out["weights"] = Json::array({entry.curve.weights().x, entry.curve.weights().y});
    out["field_min_poly"] = curve_to_json(entry.curve)["field"]["min_poly"];
    out["branches"] = branches_report(entry.curve)["branches"];
    out["validated"] = true;
    out["spec"] = curve_to_json(entry.curve);
    return out;
}

Json fixtures_report(const CatalogEntry& entry)
{
    Json list = Json::array();
    for (const auto& fx : fixture_modules(entry)) {
        Json e;
        e["name"] = fx.name;
        if (fx.fixture_case != 0)
            e["case"] = fx.fixture_case;
        if (fx.h)
            e["h"] = *fx.h;
        e["module"] = module_to_json(fx.module, entry.curve.field());
        list.push_back(e);
    }
    return Json{{"label", entry.label}, {"fixtures", list}};
}

// --------------------------------------------------------------------- text

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool is_flat_array(const Json& j)
{
    if (!j.is_array())
        return false;
    for (const auto& e : j)
        if (!is_scalar(e))
            return false;
    return true;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string flat_text(const Json& j)
{
    std::string out = "[";
    for (std::size_t k = 0; k < j.size(); ++k)
        out += (k ? ", " : "") + scalar_text(j[k]);
    return out + "]";
}

void render(const Json& j, int indent, std::ostringstream& out)
{
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (is_scalar(value))
                out << pad << key << ": " << scalar_text(value) << "\n";
            else if (is_flat_array(value))
                out << pad << key << ": " << flat_text(value) << "\n";
            else {
                out << pad << key << ":\n";
                render(value, indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k) {
            if (is_scalar(j[k]) || is_flat_array(j[k])) {
                out << pad << "- " << (is_scalar(j[k]) ? scalar_text(j[k]) : flat_text(j[k])) << "\n";
            } else {
                out << pad << "- [" << k + 1 << "]\n";
                render(j[k], indent + 2, out);
            }
        }
    } else {
        out << pad << scalar_text(j) << "\n";
    }
}

} // namespace

std::string render_text(const Json& j)
{
    std::ostringstream out;
    render(j, 0, out);
    return out.str();
}

} // namespace qhc
