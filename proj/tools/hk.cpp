// Command-line front end. Talks to the library exclusively through the C
// interface; local code is argument plumbing and output formatting.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "huygens/huygens.h"

namespace {

using nlohmann::json;

// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 degenerate or singular mathematical input.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

int exit_code_for(hk_status status) {
    switch (status) {
        case HK_OK: return kExitOk;
        case HK_ERROR_PARSE: return kExitUsage;
        case HK_ERROR_INVALID: return kExitUsage;
        case HK_ERROR_DEGENERATE: return kExitDegenerate;
        case HK_ERROR_SINGULAR: return kExitDegenerate;
        case HK_ERROR_INTERNAL: return kExitDegenerate;
    }
    return kExitDegenerate;
}

[[noreturn]] void quit(hk_status status, const std::string& context) {
    std::cerr << "hk: " << context << ": " << hk_last_error() << "\n";
    std::exit(exit_code_for(status));
}

[[noreturn]] void usage_error(const std::string& message) {
    std::cerr << "hk: " << message << "\n";
    std::exit(kExitUsage);
}

std::string format17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

// Options shared by every subcommand: where the sequence data comes from
// and where output goes.
struct CommonOptions {
    std::vector<long> k;
    std::vector<std::string> phase_cos;
    std::vector<std::string> phase_sin;
    std::vector<double> phase_angle;
    std::string config_path;
    std::string mode = "exact";
    std::string out_path;
    std::string format = "json";
    double tol = 0.0;  // evaluation guard; 0 selects the library default
};

void add_common_options(CLI::App* cmd, CommonOptions& opts, bool with_format = true) {
    auto* k = cmd->add_option("--k", opts.k, "Sequence entries, e.g. --k 0,1,3")
                  ->delimiter(',');
    auto* config = cmd->add_option("--config", opts.config_path,
                                   "JSON file with the sequence data");
    k->excludes(config);
    config->excludes(k);
    cmd->add_option("--phase-cos", opts.phase_cos,
                    "Phase cosine for entry i (repeatable, scalar text)");
    cmd->add_option("--phase-sin", opts.phase_sin,
                    "Phase sine for entry i (repeatable, scalar text)");
    cmd->add_option("--phase-angle", opts.phase_angle,
                    "Phase angle in radians for entry i (floating mode only)");
    cmd->add_option("--mode", opts.mode, "exact (default) or float:<bits>");
    cmd->add_option("--out", opts.out_path, "Output path (default stdout)");
    if (with_format)
        cmd->add_option("--format", opts.format, "json (default) or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--tol", opts.tol,
                    "Relative denominator guard for evaluations")
        ->check(CLI::PositiveNumber);
}

// Assembles the sequence-data JSON that the C interface consumes.
std::string kdata_json_text(const CommonOptions& opts) {
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in) usage_error("cannot open config file: " + opts.config_path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
    if (opts.k.empty()) usage_error("one of --k or --config is required");

    json j;
    j["k"] = opts.k;
    if (opts.mode == "exact") {
        j["mode"] = "exact";
    } else if (opts.mode == "float" || opts.mode.rfind("float:", 0) == 0) {
        j["mode"] = "float";
        long bits = 128;
        if (opts.mode.size() > 6) {
            try {
                bits = std::stol(opts.mode.substr(6));
            } catch (const std::exception&) {
                usage_error("malformed --mode precision: " + opts.mode);
            }
        }
        if (bits <= 0) usage_error("precision must be positive");
        j["precision"] = bits;
    } else {
        usage_error("unknown --mode: " + opts.mode);
    }

    const bool has_pairs = !opts.phase_cos.empty() || !opts.phase_sin.empty();
    if (has_pairs && !opts.phase_angle.empty())
        usage_error("give phases as cos/sin pairs or as angles, not both");
    if (has_pairs) {
        if (opts.phase_cos.size() != opts.phase_sin.size())
            usage_error("--phase-cos and --phase-sin counts differ");
        json phases = json::array();
        for (size_t i = 0; i < opts.phase_cos.size(); ++i)
            phases.push_back(json{{"cos", opts.phase_cos[i]}, {"sin", opts.phase_sin[i]}});
        j["phases"] = std::move(phases);
    } else if (!opts.phase_angle.empty()) {
        json phases = json::array();
        for (double angle : opts.phase_angle)
            phases.push_back(json{{"angle_radians", angle}});
        j["phases"] = std::move(phases);
    }
    return j.dump();
}

hk_kdata* load_kdata(const CommonOptions& opts) {
    hk_kdata* data = nullptr;
    const hk_status status = hk_kdata_from_json(kdata_json_text(opts).c_str(), &data);
    if (status != HK_OK) quit(status, "sequence data");
    return data;
}

hk_table* load_table(const CommonOptions& opts) {
    hk_kdata* data = load_kdata(opts);
    hk_table* table = nullptr;
    const hk_status status = hk_table_build(data, &table);
    hk_kdata_free(data);
    if (status != HK_OK) quit(status, "table construction");
    return table;
}

json kdata_json_echo(const hk_table* table) {
    char* text = nullptr;
    if (hk_table_to_json(table, &text) != HK_OK) quit(HK_ERROR_INTERNAL, "table dump");
    json j = json::parse(text);
    hk_string_free(text);
    json echo{{"k", j["k"]}, {"phases", j["phases"]}, {"mode", j["mode"]}};
    if (j.contains("precision")) echo["precision"] = j["precision"];
    return echo;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) usage_error("cannot open output file: " + out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

// --grid x0:x1:n,y0:y1:n
struct GridAxis {
    double lo = 0.0, hi = 0.0;
    long count = 0;
    double at(long i) const {
        return count == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) /
                                          static_cast<double>(count - 1);
    }
};

GridAxis parse_axis(const std::string& text) {
    GridAxis axis;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%ld%c", &axis.lo, &axis.hi, &axis.count,
                    &trailing) != 3)
        usage_error("malformed grid axis: " + text);
    if (axis.count < 1) usage_error("grid axis needs at least one point: " + text);
    if (axis.count > 1 && axis.hi <= axis.lo)
        usage_error("grid axis needs a positive extent: " + text);
    return axis;
}

std::pair<GridAxis, GridAxis> parse_grid(const std::string& text) {
    const size_t comma = text.find(',');
    if (comma == std::string::npos)
        usage_error("grid spec must be x0:x1:n,y0:y1:n");
    return {parse_axis(text.substr(0, comma)), parse_axis(text.substr(comma + 1))};
}

// Point lists for kernel/ba rows: each --x/--xi is "a,b".
std::pair<double, double> parse_point(const std::string& text) {
    double a = 0.0, b = 0.0;
    char trailing = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%c", &a, &b, &trailing) != 2)
        usage_error("malformed point (want a,b): " + text);
    return {a, b};
}

int run_potential(const CommonOptions& opts, const std::string& grid_spec) {
    const auto [ax, ay] = parse_grid(grid_spec);
    hk_table* table = load_table(opts);

    json cells = json::array();
    std::ostringstream csv;
    csv << "x1,x2,value,singular\n";
    for (long iy = 0; iy < ay.count; ++iy) {
        for (long ix = 0; ix < ax.count; ++ix) {
            const double x1 = ax.at(ix), x2 = ay.at(iy);
            double value = 0.0;
            const hk_status status = hk_potential_eval(table, x1, x2, opts.tol, &value);
            const bool singular = status == HK_ERROR_SINGULAR;
            if (status != HK_OK && !singular) {
                hk_table_free(table);
                quit(status, "potential evaluation");
            }
            if (opts.format == "csv") {
                csv << format17(x1) << "," << format17(x2) << ","
                    << (singular ? "" : format17(value)) << "," << (singular ? 1 : 0)
                    << "\n";
            } else {
                cells.push_back(json{{"x1", x1},
                                     {"x2", x2},
                                     {"value", singular ? json(nullptr) : json(value)},
                                     {"singular", singular}});
            }
        }
    }

    std::string text;
    if (opts.format == "csv") {
        text = csv.str();
    } else {
        json out{{"schema", "hk-1"},
                 {"command", "potential"},
                 {"data", kdata_json_echo(table)},
                 {"cells", std::move(cells)}};
        text = out.dump(2);
    }
    hk_table_free(table);
    write_output(text, opts.out_path);
    return kExitOk;
}

int run_coeffs(const CommonOptions& opts) {
    if (opts.format != "json") usage_error("coeffs output is JSON only");
    hk_table* table = load_table(opts);
    char* text = nullptr;
    const hk_status status = hk_table_to_json(table, &text);
    hk_table_free(table);
    if (status != HK_OK) quit(status, "table dump");
    write_output(json::parse(text).dump(2), opts.out_path);
    hk_string_free(text);
    return kExitOk;
}

struct RowSpec {
    std::vector<std::string> xs;
    std::vector<std::string> xis;
    std::vector<double> ts;  // ignored by ba
};

// Broadcasts a one-element list across n rows; anything else must match n.
template <typename T>
const T& row_entry(const std::vector<T>& list, size_t row) {
    return list.size() == 1 ? list.front() : list[row];
}

int run_rows(const CommonOptions& opts, const RowSpec& rows, bool with_time) {
    if (rows.xs.empty() || rows.xis.empty())
        usage_error("at least one --x and one --xi are required");
    size_t count = std::max(rows.xs.size(), rows.xis.size());
    if (with_time) {
        if (rows.ts.empty()) usage_error("kernel rows need at least one --t");
        count = std::max(count, rows.ts.size());
    }
    auto check_len = [&](size_t n, const char* what) {
        if (n != 1 && n != count)
            usage_error(std::string(what) + " count must be 1 or match the row count");
    };
    check_len(rows.xs.size(), "--x");
    check_len(rows.xis.size(), "--xi");
    if (with_time) check_len(rows.ts.size(), "--t");

    hk_table* table = load_table(opts);
    json out_rows = json::array();
    std::ostringstream csv;
    csv << (with_time ? "x1,x2,xi1,xi2,t,value,error\n" : "x1,x2,xi1,xi2,value,error\n");

    for (size_t row = 0; row < count; ++row) {
        const auto [x1, x2] = parse_point(row_entry(rows.xs, row));
        const auto [xi1, xi2] = parse_point(row_entry(rows.xis, row));
        const double t = with_time ? row_entry(rows.ts, row) : 0.0;
        const double x[2] = {x1, x2};
        const double xi[2] = {xi1, xi2};
        double value = 0.0;
        const hk_status status = with_time
                                     ? hk_heat_eval(table, x, xi, t, opts.tol, &value)
                                     : hk_ba_eval(table, x, xi, opts.tol, &value);
        const std::string error = status == HK_OK ? "" : hk_last_error();
        if (opts.format == "csv") {
            csv << format17(x1) << "," << format17(x2) << "," << format17(xi1) << ","
                << format17(xi2) << ",";
            if (with_time) csv << format17(t) << ",";
            csv << (status == HK_OK ? format17(value) : "") << ",\"" << error << "\"\n";
        } else {
            json row_json{{"x", {x1, x2}}, {"xi", {xi1, xi2}}};
            if (with_time) row_json["t"] = t;
            row_json["value"] = status == HK_OK ? json(value) : json(nullptr);
            row_json["error"] = error;
            out_rows.push_back(std::move(row_json));
        }
    }

    std::string text;
    if (opts.format == "csv") {
        text = csv.str();
    } else {
        json out{{"schema", "hk-1"},
                 {"command", with_time ? "kernel" : "ba"},
                 {"data", kdata_json_echo(table)},
                 {"rows", std::move(out_rows)}};
        text = out.dump(2);
    }
    hk_table_free(table);
    write_output(text, opts.out_path);
    return kExitOk;
}

struct VerifyFlags {
    std::string suite = "all";
    long darboux_next = 0;
    long oracle_order = 0;
    int oracle_rays = 0;
    int heat_count = 0;
    int probe_count = 0;
    unsigned seed = 0;
};

int run_verify(const CommonOptions& opts, const VerifyFlags& flags) {
    hk_kdata* data = load_kdata(opts);
    hk_verify_options vopts = {};
    vopts.darboux_next = flags.darboux_next;
    vopts.oracle_order = flags.oracle_order;
    vopts.oracle_rays = flags.oracle_rays;
    vopts.heat_count = flags.heat_count;
    vopts.probe_count = flags.probe_count;
    vopts.seed = flags.seed;

    char* lines = nullptr;
    int failures = 0;
    const hk_status status =
        hk_verify_run(data, flags.suite.c_str(), &vopts, &lines, &failures);
    hk_kdata_free(data);
    if (status != HK_OK) quit(status, "verify");
    write_output(lines, opts.out_path);
    hk_string_free(lines);
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct singular rational potentials from integer sequences, "
                 "evaluate their exact heat kernels, and verify the identities "
                 "behind them."};
    app.require_subcommand(1);
    app.set_version_flag("--version", hk_version());

    CommonOptions potential_opts;
    std::string grid_spec;
    CLI::App* potential = app.add_subcommand("potential", "Evaluate the potential on a grid");
    add_common_options(potential, potential_opts);
    potential->add_option("--grid", grid_spec, "x0:x1:n,y0:y1:n")->required();

    CommonOptions coeffs_opts;
    CLI::App* coeffs = app.add_subcommand("coeffs", "Dump the coefficient table as JSON");
    add_common_options(coeffs, coeffs_opts);

    CommonOptions kernel_opts;
    RowSpec kernel_rows;
    CLI::App* kernel = app.add_subcommand("kernel", "Evaluate the heat kernel at points");
    add_common_options(kernel, kernel_opts);
    kernel->add_option("--x", kernel_rows.xs, "Evaluation point a,b (repeatable)");
    kernel->add_option("--xi", kernel_rows.xis, "Source point a,b (repeatable)");
    kernel->add_option("--t", kernel_rows.ts, "Time t > 0 (repeatable)");

    CommonOptions ba_opts;
    RowSpec ba_rows;
    CLI::App* ba = app.add_subcommand("ba", "Evaluate the shared eigenfunction at points");
    add_common_options(ba, ba_opts);
    ba->add_option("--x", ba_rows.xs, "Evaluation point a,b (repeatable)");
    ba->add_option("--xi", ba_rows.xis, "Spectral point a,b (repeatable)");

    CommonOptions verify_opts;
    VerifyFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    add_common_options(verify, verify_opts, /*with_format=*/false);
    verify->add_option("--suite", verify_flags.suite,
                       "unity|eigen|darboux|cramer|vanishing|transport|"
                       "transport-oracle|goursat|series|heat|ba-probe|all");
    verify->add_option("--darboux-next", verify_flags.darboux_next,
                       "Entry to extend by in the darboux suite");
    verify->add_option("--oracle-order", verify_flags.oracle_order,
                       "Numeric oracle depth (max 3)");
    verify->add_option("--rays", verify_flags.oracle_rays, "Oracle sample rays");
    verify->add_option("--heat-samples", verify_flags.heat_count,
                       "Heat-residual sample count");
    verify->add_option("--probes", verify_flags.probe_count,
                       "Eigenfunction probe points");
    verify->add_option("--seed", verify_flags.seed, "Sample-generator seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (potential->parsed()) return run_potential(potential_opts, grid_spec);
        if (coeffs->parsed()) return run_coeffs(coeffs_opts);
        if (kernel->parsed()) return run_rows(kernel_opts, kernel_rows, true);
        if (ba->parsed()) return run_rows(ba_opts, ba_rows, false);
        if (verify->parsed()) return run_verify(verify_opts, verify_flags);
    } catch (const std::exception& e) {
        std::cerr << "hk: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
