#include "cli.hpp"

#include "spirallike/core.hpp"
#include "spirallike/errors.hpp"
#include "spirallike/format.hpp"
#include "spirallike/json_io.hpp"
#include "spirallike/radii.hpp"
#include "spirallike/subordination.hpp"
#include "spirallike/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spirallike::cli {

namespace {

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

struct RunConfig
{
    std::string command;
    std::optional<double> lambda;
    std::string lambda_grid;
    bool degrees = false;
    double tol = kRadiusTol;
    double refine_tol = kPsiRefineTol;
    int grid_n = kPsiGrid;
    int identity_grid_n = 64;
    int trials = 100;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string output;
    std::string kind;
    double r = 0.0;
    double rho = 0.5;
    int n = 256;
    std::string claim;
    double safety = kDefaultSafety;
    bool falsify = false;
    double falsify_radius = 0.99;
};

double to_radians(const RunConfig& cfg, double v)
{
    return cfg.degrees ? v * std::numbers::pi / 180.0 : v;
}

double parse_number(const std::string& text, const char* what)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    }
    if (used != text.size()) throw UsageError(std::string("cannot parse ") + what + " '" + text + "'");
    return v;
}

// start:end:count, inclusive endpoints, clipped to the open admissible interval
std::vector<double> parse_grid(const RunConfig& cfg)
{
    std::vector<std::string> parts;
    std::stringstream ss(cfg.lambda_grid);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("--lambda-grid expects start:end:count");

    const double edge = std::numbers::pi / 2 - 1e-9;
    const double start = std::clamp(to_radians(cfg, parse_number(parts[0], "grid start")), -edge, edge);
    const double end = std::clamp(to_radians(cfg, parse_number(parts[1], "grid end")), -edge, edge);
    const double count = parse_number(parts[2], "grid count");
    if (!(count >= 1) || count != std::floor(count)) throw UsageError("grid count must be a positive integer");

    const int n = static_cast<int>(count);
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) grid[k] = n == 1 ? start : start + (end - start) * k / (n - 1);
    return grid;
}

std::vector<Angle<double>> resolve_angles(const RunConfig& cfg)
{
    std::vector<double> raw;
    if (!cfg.lambda_grid.empty()) {
        raw = parse_grid(cfg);
    } else if (cfg.lambda) {
        raw.push_back(to_radians(cfg, *cfg.lambda));
    } else {
        throw UsageError("one of --lambda or --lambda-grid is required");
    }
    std::vector<Angle<double>> angles;
    angles.reserve(raw.size());
    for (double v : raw) angles.emplace_back(v);
    return angles;
}

Angle<double> single_angle(const RunConfig& cfg)
{
    if (!cfg.lambda_grid.empty()) throw UsageError("this command takes --lambda, not --lambda-grid");
    return resolve_angles(cfg).front();
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string csv_row(std::initializer_list<double> values)
{
    std::string row;
    for (double v : values) {
        if (!row.empty()) row += ',';
        row += format_double(v);
    }
    return row + '\n';
}

int cmd_radius(const RunConfig& cfg, std::ostream& out)
{
    const bool want_r1 = cfg.kind == "r1" || cfg.kind == "both";
    const bool want_r2 = cfg.kind == "r2" || cfg.kind == "both";
    if (!want_r1 && !want_r2) throw UsageError("--kind must be r1, r2 or both");
    const std::vector<Angle<double>> angles = resolve_angles(cfg);

    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& a : angles) {
            if (want_r1) arr.push_back(to_json(radius_r1(a, cfg.tol, cfg.grid_n)));
            if (want_r2) arr.push_back(to_json(radius_r2(a)));
        }
        write_json(out, arr);
        return kSuccess;
    }

    out << "lambda" << (want_r1 ? ",r1" : "") << (want_r2 ? ",r2" : "") << '\n';
    for (const auto& a : angles) {
        std::string row = format_double(a.radians());
        if (want_r1) row += ',' + format_double(radius_r1(a, cfg.tol, cfg.grid_n).value);
        if (want_r2) row += ',' + format_double(radius_r2(a).value);
        out << row << '\n';
    }
    return kSuccess;
}

int cmd_table(const RunConfig& cfg, std::ostream& out)
{
    const std::vector<Angle<double>> angles = resolve_angles(cfg);
    const std::vector<RadiusRow> rows = radius_table(angles, cfg.tol);
    if (cfg.format == "json") {
        Json arr = Json::array();
        for (const auto& row : rows) {
            Json j;
            j["lambda"] = row.lambda;
            j["r1"] = row.r1;
            j["r2"] = row.r2;
            arr.push_back(std::move(j));
        }
        write_json(out, arr);
        return kSuccess;
    }
    out << "lambda,r1,r2\n";
    for (const auto& row : rows) out << csv_row({row.lambda, row.r1, row.r2});
    return kSuccess;
}

int cmd_psi(const RunConfig& cfg, std::ostream& out)
{
    const Angle<double> a = single_angle(cfg);
    const PsiValue v = psi(a, cfg.r, cfg.grid_n, cfg.refine_tol);
    if (cfg.format == "json") {
        Json j;
        j["lambda"] = a.radians();
        j["r"] = cfg.r;
        j["psi"] = v.value;
        j["witness_theta"] = v.witness_theta;
        write_json(out, j);
        return kSuccess;
    }
    out << "lambda,r,psi,witness_theta\n" << csv_row({a.radians(), cfg.r, v.value, v.witness_theta});
    return kSuccess;
}

int cmd_curve(const RunConfig& cfg, std::ostream& out)
{
    const Angle<double> a = single_angle(cfg);
    if (cfg.kind == "disc") {
        const CaratheodoryDisc<double> d = caratheodory_disc(a, cfg.rho);
        if (cfg.format == "json") {
            Json j;
            j["r"] = cfg.rho;
            j["center_re"] = d.center.real();
            j["center_im"] = d.center.imag();
            j["radius"] = d.radius;
            write_json(out, j);
            return kSuccess;
        }
        out << "r,center_re,center_im,radius\n"
            << csv_row({cfg.rho, d.center.real(), d.center.imag(), d.radius});
        return kSuccess;
    }

    if (cfg.kind != "q_lambda" && cfg.kind != "p_lambda") {
        throw UsageError("--kind must be q_lambda, p_lambda or disc");
    }
    if (!(cfg.rho >= 0.0 && cfg.rho < 1.0)) throw std::domain_error("--rho must lie in [0, 1)");
    if (cfg.n < 1) throw UsageError("--n must be positive");

    const bool is_q = cfg.kind == "q_lambda";
    const BoundaryCurve curve = circle_image(
        [&](std::complex<double> z) { return is_q ? q_lambda(a, DiscPoint(z)) : p_lambda(a, DiscPoint(z)); },
        cfg.rho, cfg.n);

    if (cfg.format == "json") {
        Json arr = Json::array();
        for (Eigen::Index j = 0; j < curve.values.size(); ++j) {
            Json row;
            row["theta"] = curve.theta[j];
            row["re"] = curve.values[j].real();
            row["im"] = curve.values[j].imag();
            arr.push_back(std::move(row));
        }
        write_json(out, arr);
        return kSuccess;
    }
    out << "theta,re,im\n";
    for (Eigen::Index j = 0; j < curve.values.size(); ++j) {
        out << csv_row({curve.theta[j], curve.values[j].real(), curve.values[j].imag()});
    }
    return kSuccess;
}

std::vector<double> default_nunokawa_grid()
{
    // +-a for a log-spaced over [1e-3, 1e3], plus the minimizers +-1/sqrt(3)
    std::vector<double> grid;
    for (int k = 0; k <= 2000; ++k) {
        const double av = std::pow(10.0, -3.0 + 6.0 * k / 2000);
        grid.push_back(av);
        grid.push_back(-av);
    }
    grid.push_back(1 / std::numbers::sqrt3);
    grid.push_back(-1 / std::numbers::sqrt3);
    return grid;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const std::optional<Claim> claim = parse_claim(cfg.claim);
    if (!claim) {
        throw UsageError("unknown claim '" + cfg.claim
                         + "' (expected lemma1, theorem1, corollary1, theorem2, identity or nunokawa)");
    }
    if (cfg.trials < 1) throw UsageError("--trials must be >= 1");

    if (cfg.falsify) {
        if (*claim != Claim::Theorem2) throw UsageError("--falsify is only available for theorem2");
        // A violation found beyond R2 means the starlikeness check failed at that radius.
        const FalsifyResult result = falsify_starlikeness(single_angle(cfg), cfg.falsify_radius, cfg.trials, cfg.seed);
        write_json(out, to_json(result));
        return result.found ? kVerificationFailed : kSuccess;
    }

    VerificationReport report = [&] {
        switch (*claim) {
        case Claim::Lemma1: return verify_lemma1(single_angle(cfg), cfg.trials, cfg.seed);
        case Claim::Theorem1: return verify_theorem1(single_angle(cfg), cfg.trials, cfg.seed, cfg.safety);
        case Claim::Corollary1:
            return verify_theorem1(single_angle(cfg), cfg.trials, cfg.seed, cfg.safety, true);
        case Claim::Theorem2: return verify_theorem2(single_angle(cfg), cfg.trials, cfg.seed, cfg.safety);
        case Claim::DifferentialIdentity:
            return verify_differential_identity(single_angle(cfg), cfg.identity_grid_n);
        case Claim::NunokawaBound: {
            const std::vector<double> grid = default_nunokawa_grid();
            return verify_nunokawa_bound(grid);
        }
        }
        throw UsageError("unhandled claim");
    }();
    write_json(out, to_json(report));
    return report.passed ? kSuccess : kVerificationFailed;
}

void add_lambda_options(CLI::App* sub, RunConfig& cfg, bool allow_grid)
{
    sub->add_option("--lambda", cfg.lambda, "tilt angle (radians unless --degrees)");
    if (allow_grid) {
        sub->add_option("--lambda-grid", cfg.lambda_grid, "start:end:count, inclusive endpoints");
    }
    sub->add_flag("--degrees", cfg.degrees, "interpret angles in degrees");
}

void add_output_options(CLI::App* sub, RunConfig& cfg, bool allow_format)
{
    if (allow_format) {
        sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    }
    sub->add_option("--output", cfg.output, "write to this file instead of stdout");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Radii of spirallikeness and starlikeness for Robertson functions"};
    app.require_subcommand(1);

    auto* radius = app.add_subcommand("radius", "R1 and/or R2 for one angle or a grid");
    radius->add_option("--kind", cfg.kind, "r1, r2 or both")->default_val("both");
    radius->add_option("--tol", cfg.tol, "bisection tolerance for R1");
    radius->add_option("--grid-n", cfg.grid_n, "boundary grid size for psi");
    add_lambda_options(radius, cfg, true);
    add_output_options(radius, cfg, true);

    auto* table = app.add_subcommand("table", "lambda,r1,r2 rows over a grid");
    table->add_option("--tol", cfg.tol, "bisection tolerance for R1");
    add_lambda_options(table, cfg, true);
    add_output_options(table, cfg, true);

    auto* psi_cmd = app.add_subcommand("psi", "boundary maximum psi_lambda(r)");
    psi_cmd->add_option("--r", cfg.r, "radius in [0, 1)")->required();
    psi_cmd->add_option("--grid-n", cfg.grid_n, "boundary grid size");
    psi_cmd->add_option("--tol", cfg.refine_tol, "golden-section refinement width");
    add_lambda_options(psi_cmd, cfg, false);
    add_output_options(psi_cmd, cfg, true);

    auto* curve = app.add_subcommand("curve", "image curves of Q_lambda, P_lambda and disc bounds");
    curve->add_option("--kind", cfg.kind, "q_lambda, p_lambda or disc")->required();
    curve->add_option("--rho", cfg.rho, "circle radius in [0, 1)");
    curve->add_option("--n", cfg.n, "number of samples");
    add_lambda_options(curve, cfg, false);
    add_output_options(curve, cfg, true);

    auto* verify = app.add_subcommand("verify", "seeded verification harness; writes a JSON report");
    verify->add_option("--claim", cfg.claim, "lemma1, theorem1, corollary1, theorem2, identity, nunokawa")
        ->required();
    verify->add_option("--trials", cfg.trials, "number of sampled functions");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--safety", cfg.safety, "fraction of the radius to test at");
    verify->add_option("--grid-n", cfg.identity_grid_n, "grid size for the identity check");
    verify->add_flag("--falsify", cfg.falsify, "search for a starlikeness violation beyond R2");
    verify->add_option("--radius", cfg.falsify_radius, "radius used by --falsify");
    add_lambda_options(verify, cfg, false);
    add_output_options(verify, cfg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.output.empty()) {
        file.open(cfg.output, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << cfg.output << " for writing\n";
            return kUsageError;
        }
        sink = &file;
    }

    try {
        if (radius->parsed()) return cmd_radius(cfg, *sink);
        if (table->parsed()) return cmd_table(cfg, *sink);
        if (psi_cmd->parsed()) return cmd_psi(cfg, *sink);
        if (curve->parsed()) return cmd_curve(cfg, *sink);
        if (verify->parsed()) return cmd_verify(cfg, *sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const AccuracyError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    } catch (const IndeterminateError& e) {
        err << "error: " << e.what() << '\n';
        return kVerificationFailed;
    }
    return kUsageError;
}

} // namespace spirallike::cli
