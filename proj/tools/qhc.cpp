// qhc: command-line front end for quasi-homogeneous plane curves, their
// graded modules and natural connections.
//
// Exit codes: 0 success, 1 input error, 2 internal consistency failure,
// 3 no natural connection found (the report is still printed).

#include "qhc/catalog.hpp"
#include "qhc/connection.hpp"
#include "qhc/derivation.hpp"
#include "qhc/error.hpp"
#include "qhc/json_io.hpp"
#include "qhc/semigroup.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

using qhc::Json;

constexpr int kExitInput = 1;
constexpr int kExitConsistency = 2;
constexpr int kExitNoConnection = 3;

struct OutputFlags {
    std::string format = "json";
};

void emit(const Json& report, const OutputFlags& flags)
{
    if (flags.format == "text")
        std::cout << qhc::render_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

void add_format(CLI::App* cmd, OutputFlags& flags)
{
    cmd->add_option("--format", flags.format, "Report format")->check(CLI::IsMember({"json", "text"}));
}

int run_curve(const std::string& path, const std::string& action, std::optional<int> max_degree,
              const OutputFlags& flags)
{
    const qhc::QuasiCurve curve = qhc::curve_from_json(qhc::read_json_file(path));
    if (action == "info")
        emit(qhc::curve_info_report(curve), flags);
    else if (action == "branches")
        emit(qhc::branches_report(curve), flags);
    else if (action == "semigroups")
        emit(qhc::semigroups_report(curve, max_degree.value_or(-1)), flags);
    else
        emit(qhc::derivations_report(curve), flags);
    return 0;
}

int run_module(const std::string& curve_path, const std::string& module_path, const std::string& action,
               std::optional<int> max_degree, int samples, std::uint64_t seed, const OutputFlags& flags)
{
    const qhc::QuasiCurve curve = qhc::curve_from_json(qhc::read_json_file(curve_path));
    const qhc::GradedSubmodule m = qhc::module_from_json(qhc::read_json_file(module_path), curve);
    if (action == "check") {
        emit(qhc::module_check_report(curve, m), flags);
        return 0;
    }
    qhc::ConnectionReport report = qhc::natural_connection(curve, m);
    if (report.success()) {
        const int bound = max_degree.value_or(qhc::default_degree_bound(curve, report.working));
        report.verified = qhc::verify_properties(curve, report, bound, samples, seed);
    }
    emit(qhc::connection_report_to_json(curve, report), flags);
    return report.success() ? 0 : kExitNoConnection;
}

int run_catalog(const std::string& action, const std::string& label, int index, int m, int n,
                const OutputFlags& flags)
{
    if (action == "list") {
        Json list = Json::array();
        for (const auto& entry : qhc::catalog_list())
            list.push_back(Json{{"label", entry.label},
                                {"f", entry.curve.f().to_string()},
                                {"weights", Json::array({entry.curve.weights().x, entry.curve.weights().y})},
                                {"field_degree", entry.curve.field().degree()},
                                {"branches", entry.curve.r()}});
        emit(Json{{"entries", list}}, flags);
        return 0;
    }
    if (label.empty())
        throw qhc::InputError("catalog " + action + " needs --label");
    const qhc::CatalogEntry entry = qhc::catalog_get(label, index, m, n);
    emit(action == "info" ? qhc::catalog_entry_report(entry) : qhc::fixtures_report(entry), flags);
    return 0;
}

// A quick end-to-end sweep over the catalog.
int run_selftest(const OutputFlags& flags)
{
    Json checks = Json::array();
    bool ok = true;
    auto record = [&](const std::string& name, bool passed, const std::string& detail = "") {
        Json c{{"check", name}, {"passed", passed}};
        if (!detail.empty())
            c["detail"] = detail;
        checks.push_back(c);
        ok = ok && passed;
    };
    for (const auto& entry : qhc::catalog_list()) {
        const auto& curve = entry.curve;
        try {
            bool gamma_ok = true;
            for (std::size_t i = 0; i < curve.r(); ++i) {
                const auto gamma = qhc::gamma_formula(curve, i);
                const int bound = gamma.conductor() + 10;
                const auto oracle = qhc::gamma_oracle(curve, i, bound);
                for (int g = 0; g <= bound; ++g)
                    gamma_ok = gamma_ok && oracle[static_cast<std::size_t>(g)] == gamma.contains(g);
            }
            record(entry.label + ": gamma formula = oracle", gamma_ok);
            const auto q = qhc::q_element(qhc::koszul_data(curve), curve);
            record(entry.label + ": D = qE, qx and qy in A", qhc::verify_q(curve, q).ok());
            for (const auto& fx : qhc::fixture_modules(entry)) {
                const auto report = qhc::natural_connection(curve, fx.module);
                if (report.success())
                    qhc::verify_properties(curve, report, qhc::default_degree_bound(curve, report.working), 20, 1);
                record(entry.label + ": " + fx.name + " -> " + qhc::to_string(report.path), report.success());
            }
        } catch (const qhc::Error& e) {
            record(entry.label, false, e.what());
        }
    }
    emit(Json{{"passed", ok}, {"checks", checks}}, flags);
    return ok ? 0 : kExitConsistency;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations on quasi-homogeneous plane curves and natural connections on graded modules"};
    app.require_subcommand(1);
    OutputFlags flags;

    std::string curve_path;
    std::string curve_action;
    std::optional<int> max_degree;
    auto* curve_cmd = app.add_subcommand("curve", "Branches, semigroups and derivations of a curve");
    curve_cmd->add_option("--in", curve_path, "CurveSpec JSON file")->required()->check(CLI::ExistingFile);
    curve_cmd->add_option("action", curve_action, "info | branches | semigroups | derivations")
        ->required()
        ->check(CLI::IsMember({"info", "branches", "semigroups", "derivations"}));
    curve_cmd->add_option("--max-degree", max_degree, "Oracle bound for semigroups (default c_i + 10)")
        ->check(CLI::NonNegativeNumber);
    add_format(curve_cmd, flags);

    std::string module_curve;
    std::string module_path;
    std::string module_action;
    int samples = 100;
    std::uint64_t seed = 1;
    auto* module_cmd = app.add_subcommand("module", "Conditions and natural connection of a graded module");
    module_cmd->add_option("--curve", module_curve, "CurveSpec JSON file")->required()->check(CLI::ExistingFile);
    module_cmd->add_option("--module", module_path, "ModuleSpec JSON file")->required()->check(CLI::ExistingFile);
    module_cmd->add_option("action", module_action, "check | connect")
        ->required()
        ->check(CLI::IsMember({"check", "connect"}));
    module_cmd->add_option("--max-degree", max_degree, "Verification degree bound")->check(CLI::NonNegativeNumber);
    module_cmd->add_option("--samples", samples, "Leibniz samples")->check(CLI::NonNegativeNumber);
    module_cmd->add_option("--seed", seed, "Sample seed");
    add_format(module_cmd, flags);

    std::string catalog_action;
    std::string label;
    int index = 0;
    int m = 0;
    int n = 0;
    auto* catalog_cmd = app.add_subcommand("catalog", "Preset ADE curves and the y(x^n - y^m) family");
    catalog_cmd->add_option("action", catalog_action, "list | info | fixtures")
        ->required()
        ->check(CLI::IsMember({"list", "info", "fixtures"}));
    catalog_cmd->add_option("--label", label, "A, D, E or Y")->check(CLI::IsMember({"A", "D", "E", "Y"}));
    catalog_cmd->add_option("--index", index, "n of A_n, D_n, E_n");
    catalog_cmd->add_option("--m", m, "m of YFamily(m,n)");
    catalog_cmd->add_option("--n", n, "n of YFamily(m,n)");
    add_format(catalog_cmd, flags);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in checks over the catalog");
    add_format(selftest_cmd, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*curve_cmd)
            return run_curve(curve_path, curve_action, max_degree, flags);
        if (*module_cmd)
            return run_module(module_curve, module_path, module_action, max_degree, samples, seed, flags);
        if (*catalog_cmd)
            return run_catalog(catalog_action, label, index, m, n, flags);
        return run_selftest(flags);
    } catch (const qhc::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const qhc::Error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return kExitConsistency;
    }
}
