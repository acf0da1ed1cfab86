#include "plates_cli/app.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plates/casimir.hpp"
#include "plates/fluctuations.hpp"
#include "plates/oracle.hpp"
#include "plates/stress.hpp"
#include "plates/verify.hpp"

namespace plates_cli {

namespace {

using nlohmann::json;
using plates::BoundaryCondition;

enum class Format { Csv, Json };

struct RunConfig {
    std::string bc = "dirichlet";
    double length = 1.0;
    int points = 101;
    double margin = 0.02;
    std::string format = "csv";
    bool quick = false;
    std::string output;
    std::optional<double> eps_min;
    std::optional<double> eps_max;
    std::optional<int> eps_count;
    std::optional<int> eps_degree;
    bool inject_fault = false;
};

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string csv_number(double x) {
    std::array<char, 64> buffer{};
    const auto [end, ec] =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), x, std::chars_format::general, 12);
    return ec == std::errc{} ? std::string(buffer.data(), end) : std::string("nan");
}

BoundaryCondition boundary(const RunConfig& config) {
    const auto bc = plates::parse_boundary_condition(config.bc);
    if (!bc) {
        throw InvalidConfig("unknown boundary condition '" + config.bc + "'");
    }
    return *bc;
}

Format format(const RunConfig& config) {
    if (config.format == "csv") {
        return Format::Csv;
    }
    if (config.format == "json") {
        return Format::Json;
    }
    throw InvalidConfig("unknown format '" + config.format + "'");
}

// Grid and separation checks shared by every command.
std::vector<double> grid(const RunConfig& config) {
    if (!(config.length > 0.0) || !std::isfinite(config.length)) {
        throw InvalidConfig("--length must be positive and finite");
    }
    if (config.points < 3) {
        throw InvalidConfig("--points must be at least 3");
    }
    if (!(config.margin > 0.0 && config.margin < 0.5)) {
        throw InvalidConfig("--margin must lie strictly between 0 and 0.5");
    }
    return plates::verify::interior_grid(config.length, config.points, config.margin);
}

std::optional<plates::regsum::EpsilonSchedule> schedule(const RunConfig& config) {
    if (!config.eps_min && !config.eps_max && !config.eps_count && !config.eps_degree) {
        return std::nullopt;
    }
    const auto base = plates::oracle::default_schedule();
    const double lo = config.eps_min.value_or(base.smallest());
    const double hi = config.eps_max.value_or(base.largest());
    const int count = config.eps_count.value_or(static_cast<int>(base.values.size()));
    const int degree = config.eps_degree.value_or(base.fit_basis_degree);
    if (!(lo > 0.0 && hi > lo) || count < 2 || degree < 0) {
        throw InvalidConfig("epsilon schedule needs 0 < eps-min < eps-max, eps-count >= 2, eps-degree >= 0");
    }
    auto result = plates::regsum::EpsilonSchedule::log_spaced(lo, hi, static_cast<std::size_t>(count), degree);
    try {
        result.validate(static_cast<std::size_t>(
            plates::oracle::divergent_order(plates::oracle::Observable::PhiDot2) + 1 + degree));
    } catch (const std::invalid_argument& e) {
        throw InvalidConfig(e.what());
    }
    return result;
}

json config_json(const RunConfig& config) {
    return {{"bc", config.bc}, {"length", config.length}, {"points", config.points},
            {"margin", config.margin}};
}

json globals_json(const plates::PlateConfig& plate, BoundaryCondition bc, int points) {
    const auto em = plates::casimir::em_reference(plate);
    const auto check = plates::casimir::integrated_density_check(plate, bc, points);
    return {{"total_energy", plates::casimir::total_energy(plate, bc)},
            {"pressure", plates::casimir::pressure(plate)},
            {"em_energy_per_area", em.energy_per_area},
            {"em_energy_density", em.energy_density},
            {"em_pressure", em.pressure},
            {"integrated_density", check.integral},
            {"density_mismatch", check.mismatch}};
}

constexpr std::array<const char*, 13> kProfileColumns = {
    "z",          "theta",      "phi2",     "phidot2", "dzphi2",          "gradTphi2",      "dlambda_phi2",
    "E_canonical", "huggins00", "E_improved", "T_zz",  "trace_canonical", "trace_improved"};

int cmd_profile(const RunConfig& config, std::ostream& out) {
    const auto zs = grid(config);
    const auto bc = boundary(config);
    const auto fmt = format(config);
    const plates::PlateConfig plate(config.length);

    std::vector<std::array<double, kProfileColumns.size()>> rows;
    rows.reserve(zs.size());
    for (double z : zs) {
        const auto point = plates::fluctuations::InteriorPoint::at_z(plate, z);
        const auto set = plates::fluctuations::expectation_set(bc, plate, point);
        const auto r = plates::stress::stress_report(set);
        using plates::to_double;
        rows.push_back({z, to_double(point.theta()), to_double(set.phi2), to_double(set.phidot2),
                        to_double(set.dzphi2), to_double(set.grad_t_phi2), to_double(set.dlambda_phi2),
                        to_double(r.energy_density_canonical), to_double(r.huggins_00),
                        to_double(r.energy_density_improved), to_double(r.t_zz),
                        to_double(r.trace_canonical), to_double(r.trace_improved)});
    }

    if (fmt == Format::Csv) {
        for (std::size_t i = 0; i < kProfileColumns.size(); ++i) {
            out << (i ? "," : "") << kProfileColumns[i];
        }
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                out << (i ? "," : "") << csv_number(row[i]);
            }
            out << '\n';
        }
        return kExitOk;
    }

    json doc{{"config", config_json(config)}, {"rows", json::array()},
             {"globals", globals_json(plate, bc, config.points)}};
    for (const auto& row : rows) {
        json entry = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) {
            entry[kProfileColumns[i]] = row[i];
        }
        doc["rows"].push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
}

int cmd_energy(const RunConfig& config, std::ostream& out) {
    grid(config);
    const auto bc = boundary(config);
    const auto fmt = format(config);
    const plates::PlateConfig plate(config.length);
    const json globals = globals_json(plate, bc, config.points);

    if (fmt == Format::Json) {
        out << json{{"config", config_json(config)}, {"rows", json::array()}, {"globals", globals}}.dump(2)
            << '\n';
        return kExitOk;
    }
    out << "quantity,value\n";
    for (const auto& [key, value] : globals.items()) {
        out << key << ',' << csv_number(value.get<double>()) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
    grid(config);
    format(config);
    plates::verify::Options options;
    options.length = config.length;
    options.grid_points = config.points;
    options.margin = config.margin;
    options.quick = config.quick;
    options.schedule = schedule(config);
    options.inject_neumann_sign_flip = config.inject_fault;

    const auto results = plates::verify::run_all(options);
    const bool ok = plates::verify::all_passed(results);

    if (format(config) == Format::Json) {
        json rows = json::array();
        for (const auto& r : results) {
            // Non-finite errors are not representable in JSON; report them as null.
            rows.push_back({{"name", r.name},
                            {"measured", std::isfinite(r.measured) ? json(r.measured) : json(nullptr)},
                            {"tolerance", r.tolerance},
                            {"relation", r.relation},
                            {"passed", r.passed}});
        }
        out << json{{"config", config_json(config)}, {"rows", rows}, {"globals", {{"passed", ok}}}}.dump(2)
            << '\n';
    } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
            passed += r.passed ? 1 : 0;
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": measured " << csv_number(r.measured)
                << ' ' << r.relation << ' ' << csv_number(r.tolerance) << '\n';
        }
        out << passed << '/' << results.size() << " checks passed\n";
    }
    return ok ? kExitOk : kExitCheckFailed;
}

void add_common_options(CLI::App& command, RunConfig& config) {
    command.add_option("--bc", config.bc, "Boundary condition: dirichlet or neumann");
    command.add_option("--length", config.length, "Plate separation L");
    command.add_option("--points", config.points, "Number of interior grid points");
    command.add_option("--margin", config.margin, "Excluded fraction of L at each plate");
    command.add_option("--format", config.format, "Output format: csv or json");
    command.add_option("--output", config.output, "Write to this file instead of standard output");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vacuum fluctuations and Casimir stress between parallel plates"};
    app.require_subcommand(1);
    RunConfig config;

    auto* profile = app.add_subcommand("profile", "Tabulate local expectation values on a grid");
    auto* energy = app.add_subcommand("energy", "Total energy, pressure and reference values");
    auto* verify = app.add_subcommand("verify", "Run every closed-form versus oracle cross-check");
    for (auto* command : {profile, energy, verify}) {
        add_common_options(*command, config);
    }
    verify->add_flag("--quick", config.quick, "Use 3 theta points for the mode-sum oracle");
    verify->add_option("--eps-min", config.eps_min, "Smallest oracle cutoff");
    verify->add_option("--eps-max", config.eps_max, "Largest oracle cutoff");
    verify->add_option("--eps-count", config.eps_count, "Number of oracle cutoffs");
    verify->add_option("--eps-degree", config.eps_degree, "Positive-power degree of the oracle fit");
    verify->add_flag("--inject-fault", config.inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
        file.open(config.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << config.output << "' for writing\n";
            return kExitInvalidConfig;
        }
        sink = &file;
    }

    try {
        if (profile->parsed()) {
            return cmd_profile(config, *sink);
        }
        if (energy->parsed()) {
            return cmd_energy(config, *sink);
        }
        return cmd_verify(config, *sink);
    } catch (const InvalidConfig& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidConfig;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

} // namespace plates_cli
