#include "cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracline/analytic.hpp"
#include "fracline/errors.hpp"
#include "fracline/io.hpp"
#include "fracline/random_inputs.hpp"
#include "fracline/rl_ops.hpp"
#include "fracline/solver.hpp"
#include "fracline/transform.hpp"
#include "fracline/wellposedness.hpp"
#include "verify_suite.hpp"

namespace fracline_cli {

namespace {

using namespace fracline;
namespace fs = std::filesystem;

struct FlagValues {
    std::optional<std::string> config;
    std::optional<double> p, q, a, b, mu;
    std::optional<std::string> grid;
    std::optional<std::string> input;
    std::optional<std::string> norm_orders;
    std::optional<std::string> levels;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    bool strict = false;
};

struct RunConfig {
    double p = 1.0, q = 0.0, a = 0.0, b = 1.0, mu = 0.8;
    std::size_t grid_n = 4096;
    double grid_x = 16.0;
    std::string input = "gaussian(1,0)";
    std::vector<double> norm_orders;  // empty: per-command default
    std::vector<std::size_t> levels{512, 1024, 2048, 4096};
    std::uint64_t seed = 1;
    std::string out_dir = ".";
    bool strict = false;
};

void parse_grid(const std::string& text, std::size_t& n, double& x) {
    const auto pos = text.find('x');
    if (pos == std::string::npos || pos == 0 || pos + 1 >= text.size())
        throw std::invalid_argument("grid '" + text + "': expected NxX, e.g. 4096x16");
    char* end = nullptr;
    const unsigned long long n_val = std::strtoull(text.c_str(), &end, 10);
    if (end != text.c_str() + pos)
        throw std::invalid_argument("grid '" + text + "': bad point count");
    const double x_val = std::strtod(text.c_str() + pos + 1, &end);
    if (end != text.c_str() + text.size())
        throw std::invalid_argument("grid '" + text + "': bad half-width");
    n = static_cast<std::size_t>(n_val);
    x = x_val;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    const char* cursor = text.c_str();
    while (*cursor != '\0') {
        char* end = nullptr;
        const double v = std::strtod(cursor, &end);
        if (end == cursor) throw std::invalid_argument("bad numeric list '" + text + "'");
        out.push_back(v);
        cursor = end;
        if (*cursor == ',') ++cursor;
        else if (*cursor != '\0')
            throw std::invalid_argument("bad numeric list '" + text + "'");
    }
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_double_list(text)) {
        if (v <= 0.0 || v != std::floor(v))
            throw std::invalid_argument("bad integer list '" + text + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

RunConfig build_config(const FlagValues& fl) {
    RunConfig cfg;
    std::optional<std::string> config_out;

    if (fl.config) {
        std::ifstream in(*fl.config);
        if (!in) throw IoError("cannot open config " + *fl.config);
        try {
            const nlohmann::json jc = nlohmann::json::parse(in, nullptr, true, /*comments=*/true);
            static const std::array<const char*, 12> known = {
                "p", "q", "a", "b", "mu", "grid", "input", "norm_orders",
                "levels", "seed", "out", "strict"};
            for (const auto& item : jc.items()) {
                bool ok = false;
                for (const char* key : known) ok = ok || item.key() == key;
                if (!ok) throw IoError("config " + *fl.config + ": unknown key '" + item.key() + "'");
            }
            if (jc.contains("p")) cfg.p = jc.at("p").get<double>();
            if (jc.contains("q")) cfg.q = jc.at("q").get<double>();
            if (jc.contains("a")) cfg.a = jc.at("a").get<double>();
            if (jc.contains("b")) cfg.b = jc.at("b").get<double>();
            if (jc.contains("mu")) cfg.mu = jc.at("mu").get<double>();
            if (jc.contains("grid"))
                parse_grid(jc.at("grid").get<std::string>(), cfg.grid_n, cfg.grid_x);
            if (jc.contains("input")) cfg.input = jc.at("input").get<std::string>();
            if (jc.contains("norm_orders"))
                cfg.norm_orders = jc.at("norm_orders").get<std::vector<double>>();
            if (jc.contains("levels"))
                cfg.levels = jc.at("levels").get<std::vector<std::size_t>>();
            if (jc.contains("seed")) cfg.seed = jc.at("seed").get<std::uint64_t>();
            if (jc.contains("strict")) cfg.strict = jc.at("strict").get<bool>();
            if (jc.contains("out")) config_out = jc.at("out").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw IoError("config " + *fl.config + ": " + e.what());
        }
    }

    // flags override the config file
    if (fl.p) cfg.p = *fl.p;
    if (fl.q) cfg.q = *fl.q;
    if (fl.a) cfg.a = *fl.a;
    if (fl.b) cfg.b = *fl.b;
    if (fl.mu) cfg.mu = *fl.mu;
    if (fl.grid) parse_grid(*fl.grid, cfg.grid_n, cfg.grid_x);
    if (fl.input) cfg.input = *fl.input;
    if (fl.norm_orders) cfg.norm_orders = parse_double_list(*fl.norm_orders);
    if (fl.levels) cfg.levels = parse_size_list(*fl.levels);
    if (fl.seed) cfg.seed = *fl.seed;
    if (fl.strict) cfg.strict = true;

    // output directory: --out beats config "out" beats FRACLINE_OUT beats "."
    if (fl.out) {
        cfg.out_dir = *fl.out;
    } else if (config_out) {
        cfg.out_dir = *config_out;
    } else if (const char* env = std::getenv("FRACLINE_OUT"); env && *env) {
        cfg.out_dir = env;
    }
    fs::create_directories(cfg.out_dir);
    return cfg;
}

std::string artifact_path(const RunConfig& cfg, const char* name) {
    return (fs::path(cfg.out_dir) / name).string();
}

SampledFunction resolve_input(const RunConfig& cfg, const GridSpec& grid) {
    if (cfg.input == "mixture") return random_mixture(cfg.seed).sample(grid);
    if (cfg.input.size() > 4 && cfg.input.ends_with(".csv")) return load_csv(cfg.input, grid);
    return sample(AnalyticFunction::parse(cfg.input), grid);
}

int run_check(const RunConfig& cfg) {
    const OperatorCoefficients co{cfg.p, cfg.q, cfg.a, cfg.b, cfg.mu};
    const WellposednessReport report = classify(co);

    std::printf("coefficients  p=%g q=%g a=%g b=%g mu=%g\n", co.p, co.q, co.a, co.b, co.mu);
    std::printf("constants     C1..C5 = %g, %g, %g, %g, %g\n", report.constants.c[0],
                report.constants.c[1], report.constants.c[2], report.constants.c[3],
                report.constants.c[4]);
    if (report.certified) {
        std::printf("case %s       certified at alpha = %s\n", to_string(report.case_label).c_str(),
                    format_double(report.alpha).c_str());
    } else {
        std::printf("case %s       NOT certified; closest scan point alpha = %s\n",
                    to_string(report.case_label).c_str(), format_double(report.alpha).c_str());
    }
    for (const auto& cond : report.conditions)
        std::printf("  [%-8s] %s  (lhs=%.6g, rhs=%.6g, margin=%.3g)\n",
                    cond.satisfied ? "ok" : "violated", cond.description.c_str(), cond.lhs,
                    cond.rhs, cond.margin);
    if (report.certified) {
        std::printf("bound         |H(xi)|^2 >= %s |2 pi xi|^%s + %s\n",
                    format_double(std::pow(report.alpha, 2.0 * report.constants.sigma[0] - 1.0) *
                                  report.p11)
                        .c_str(),
                    format_double(2.0 * report.constants.sigma[0]).c_str(),
                    format_double(report.p15 / report.alpha).c_str());
        std::printf("stability     C = %s\n", format_double(stability_constant(report)).c_str());
    }

    const std::string path = artifact_path(cfg, "report.json");
    write_text_file(path, dump(to_json(report)));
    std::printf("wrote %s\n", path.c_str());
    return (!report.certified && cfg.strict) ? 2 : 0;
}

int run_solve(const RunConfig& cfg) {
    const OperatorCoefficients co{cfg.p, cfg.q, cfg.a, cfg.b, cfg.mu};
    const GridSpec grid(cfg.grid_n, cfg.grid_x);
    const SampledFunction f = resolve_input(cfg, grid);

    SolveOptions options;
    options.norm_orders = cfg.norm_orders;
    const SolveResult result = solve(co, f, options);

    std::printf("grid          n=%zu, X=%g\n", grid.n_points(), grid.half_width());
    std::printf("residual      |L u - f| / |f| = %s\n",
                format_double(result.residual_rel).c_str());
    std::printf("symbol        min |H| = %s, zeroed modes = %zu\n",
                format_double(result.min_abs_symbol).c_str(), result.zeroed_modes);
    for (const auto& [order, value] : result.norms)
        std::printf("norm          |u|_{H^%g} = %s\n", order, format_double(value).c_str());
    if (result.stability.certified) {
        std::printf("stability     |u|_{H^%g} = %s %s C |f| = %s  (C = %s)\n", 2.0 - co.mu,
                    format_double(result.stability.lhs).c_str(),
                    result.stability.satisfied ? "<" : "!<",
                    format_double(result.stability.rhs).c_str(),
                    format_double(result.stability.constant).c_str());
    } else {
        std::printf("stability     no certificate for this coefficient set\n");
    }

    const std::string csv_path = artifact_path(cfg, "solution.csv");
    write_csv(csv_path, result.u, "u");
    const std::string json_path = artifact_path(cfg, "solve.json");
    write_text_file(json_path, dump(to_json(result)));
    std::printf("wrote %s\nwrote %s\n", csv_path.c_str(), json_path.c_str());
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const GridSpec grid(cfg.grid_n, cfg.grid_x);
    const std::vector<VerifyRow> rows = run_verify_suite(grid);

    std::size_t passed = 0;
    JsonArray row_docs;
    for (const VerifyRow& row : rows) {
        std::printf("[%s] %-52s residual %10.3e  (tol %g)\n", row.pass ? "ok  " : "FAIL",
                    row.name.c_str(), row.residual, row.tolerance);
        passed += row.pass ? 1 : 0;
        JsonObject doc;
        doc["name"] = row.name;
        doc["pass"] = row.pass;
        doc["residual"] = row.residual;
        doc["tolerance"] = row.tolerance;
        row_docs.push_back(std::move(doc));
    }
    const bool all_pass = passed == rows.size();
    std::printf("verify: %zu/%zu identities hold\n", passed, rows.size());

    JsonObject doc;
    doc["all_pass"] = all_pass;
    doc["grid"] = to_json(grid);
    doc["rows"] = std::move(row_docs);
    const std::string path = artifact_path(cfg, "verify.json");
    write_text_file(path, dump(doc));
    std::printf("wrote %s\n", path.c_str());
    return all_pass ? 0 : 3;
}

int run_convergence(const RunConfig& cfg) {
    // Probe with a transform that vanishes to high order at xi = 0: mean-like
    // box artifacts of the brute-force scheme then stay far below the O(h)
    // term and the measured ratios isolate the scheme's first-order rate.
    const AnalyticFunction probe = AnalyticFunction::hermite_gaussian(6, 1.0);
    const std::array<double, 3> mus{0.4, 0.7, 1.3};

    std::string csv = "mu,n,h,error,rate\n";
    std::printf("%-6s %-8s %-12s %-14s %s\n", "mu", "n", "h", "error", "rate");
    for (double mu : mus) {
        double prev = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t n : cfg.levels) {
            const GridSpec grid(n, cfg.grid_x);
            const SampledFunction f = sample(probe, grid);
            const SampledFunction spectral = apply_rl(f, {mu, Side::Left});
            const SampledFunction brute = gl_derivative(f, mu, Side::Left);

            double num = 0.0, den = 0.0;
            for (std::size_t j = 0; j < grid.n_points(); ++j) {
                num += (brute.values[j] - spectral.values[j]) *
                       (brute.values[j] - spectral.values[j]);
                den += spectral.values[j] * spectral.values[j];
            }
            const double err = std::sqrt(num / den);
            const double rate = prev / err;  // NaN on the first level

            csv += format_double(mu) + "," + std::to_string(n) + "," +
                   format_double(grid.spacing()) + "," + format_double(err) + ",";
            if (std::isfinite(rate)) csv += format_double(rate);
            csv += "\n";
            std::printf("%-6g %-8zu %-12g %-14.6e %s\n", mu, n, grid.spacing(), err,
                        std::isfinite(rate) ? format_double(rate).c_str() : "-");
            prev = err;
        }
    }

    const std::string path = artifact_path(cfg, "convergence.csv");
    write_text_file(path, csv);
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

int run_norms(const RunConfig& cfg) {
    const GridSpec grid(cfg.grid_n, cfg.grid_x);
    const SampledFunction f = resolve_input(cfg, grid);
    const Spectrum fh = forward_transform(f);

    std::vector<double> orders = cfg.norm_orders;
    if (orders.empty()) orders = {0.0, 0.5, 1.0, 1.5, 2.0};

    JsonObject norms, seminorms;
    for (double s : orders) {
        const double norm = hs_norm(fh, s);
        const double semi = hs_seminorm(fh, s);
        std::printf("order %-8g |f|_{H^s} = %-22s seminorm = %s\n", s,
                    format_double(norm).c_str(), format_double(semi).c_str());
        norms[format_double(s)] = std::isfinite(norm) ? Json(norm) : Json(nullptr);
        seminorms[format_double(s)] = std::isfinite(semi) ? Json(semi) : Json(nullptr);
    }

    JsonObject doc;
    doc["grid"] = to_json(grid);
    doc["input"] = cfg.input;
    doc["norms"] = std::move(norms);
    doc["seminorms"] = std::move(seminorms);
    const std::string path = artifact_path(cfg, "norms.json");
    write_text_file(path, dump(doc));
    std::printf("wrote %s\n", path.c_str());
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"spectral calculus of one-sided fractional derivatives and integrals", "fracline"};
    app.require_subcommand(1);
    FlagValues fl;

    auto add_coefficients = [&fl](CLI::App* cmd) {
        cmd->add_option("--p", fl.p, "coefficient of the order 2-mu left derivative");
        cmd->add_option("--q", fl.q, "coefficient of the order 2-mu right derivative");
        cmd->add_option("--a", fl.a, "coefficient of the first derivative");
        cmd->add_option("--b", fl.b, "zero-order coefficient (must be nonzero)");
        cmd->add_option("--mu", fl.mu, "order parameter, 0 < mu < 1");
    };
    auto add_common = [&fl](CLI::App* cmd) {
        cmd->add_option("--config", fl.config, "JSON config file; explicit flags win");
        cmd->add_option("--out", fl.out,
                        "output directory (default: $FRACLINE_OUT, then '.')");
    };
    auto add_grid = [&fl](CLI::App* cmd) {
        cmd->add_option("--grid", fl.grid, "grid as NxX (points x half-width), default 4096x16");
    };
    auto add_input = [&fl](CLI::App* cmd) {
        cmd->add_option("--input", fl.input,
                        "input: gaussian(a,c) | hermite_gaussian(n,a) | sech(a) | mixture | "
                        "file.csv");
        cmd->add_option("--seed", fl.seed, "seed for --input mixture");
    };

    CLI::App* check = app.add_subcommand("check", "certify well-posedness of the operator");
    add_common(check);
    add_coefficients(check);
    check->add_flag("--strict", fl.strict, "exit 2 when the coefficients cannot be certified");

    CLI::App* solve = app.add_subcommand("solve", "solve L u = f spectrally");
    add_common(solve);
    add_coefficients(solve);
    add_grid(solve);
    add_input(solve);
    solve->add_option("--norm-orders", fl.norm_orders,
                      "comma list of Sobolev orders to report (default 0,1,2-mu)");

    CLI::App* verify = app.add_subcommand("verify", "machine-check the operator identities");
    add_common(verify);
    add_grid(verify);

    CLI::App* convergence =
        app.add_subcommand("convergence", "first-order scheme vs spectral operator");
    add_common(convergence);
    add_grid(convergence);
    convergence->add_option("--levels", fl.levels,
                            "comma list of grid sizes (default 512,1024,2048,4096)");

    CLI::App* norms = app.add_subcommand("norms", "Sobolev norms of an input");
    add_common(norms);
    add_grid(norms);
    add_input(norms);
    norms->add_option("--norm-orders", fl.norm_orders,
                      "comma list of Sobolev orders (default 0,0.5,1,1.5,2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        const RunConfig cfg = build_config(fl);
        if (check->parsed()) return run_check(cfg);
        if (solve->parsed()) return run_solve(cfg);
        if (verify->parsed()) return run_verify(cfg);
        if (convergence->parsed()) return run_convergence(cfg);
        if (norms->parsed()) return run_norms(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}

}  // namespace fracline_cli
