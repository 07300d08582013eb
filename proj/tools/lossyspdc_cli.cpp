// lossyspdc: batch front end for the lossy-waveguide pair-source model.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lossyspdc/biphoton.hpp"
#include "lossyspdc/config_io.hpp"
#include "lossyspdc/density.hpp"
#include "lossyspdc/errors.hpp"
#include "lossyspdc/oracles.hpp"
#include "lossyspdc/schmidt.hpp"
#include "lossyspdc/validation.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace lossyspdc;

namespace {

enum ExitCode { kOk = 0, kConfigError = 2, kNumericalFailure = 3, kValidationFailure = 4 };

struct Manifest {
    std::string command;
    std::string config_path;
    std::string preset_name;
    std::string output_dir;
    std::size_t grid_d = 0;
    std::size_t grid_p = 0;
    bool exact = false;
};

std::string fmt17(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Config, "cannot write '" + path.string() + "'");
    out << text;
}

void write_json(const fs::path& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

void write_matrix_csv(const fs::path& path, const std::vector<double>& nodes,
                      const Eigen::MatrixXd& m)
{
    std::string s = "omega1_rad_per_ps,omega2_rad_per_ps,value\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            s += fmt17(nodes[std::size_t(i)]) + "," + fmt17(nodes[std::size_t(j)]) + "," +
                 fmt17(m(i, j)) + "\n";
    write_text(path, s);
}

LoadedConfig resolve(const Manifest& m, const std::string& preset_override = {})
{
    json doc;
    if (!preset_override.empty()) {
        doc = preset(preset_override);
    } else if (!m.preset_name.empty()) {
        doc = preset(m.preset_name);
    } else if (!m.config_path.empty()) {
        std::ifstream in(m.config_path);
        if (!in) throw Error(ErrorKind::Config, "cannot open config '" + m.config_path + "'");
        try {
            doc = json::parse(in, nullptr, true, true);
        } catch (const json::exception& e) {
            throw Error(ErrorKind::Config, std::string("cannot parse config: ") + e.what());
        }
    } else {
        throw Error(ErrorKind::Config, "one of --config or --preset is required");
    }
    if (m.grid_d) {
        doc["grid"]["d"]["n"] = m.grid_d;
        if (doc.contains("schmidt_grid")) doc["schmidt_grid"]["n"] = m.grid_d;
    }
    if (m.grid_p) doc["grid"]["p"]["n"] = m.grid_p;
    return config_from_json(doc);
}

json grid_json(const SimulationConfig& cfg)
{
    return {{"d", to_json(cfg.grid.d_grid)},
            {"p", to_json(cfg.grid.p_grid)},
            {"rule", cfg.grid.rule == RuleKind::Simpson ? "simpson" : "trapezoid"}};
}

fs::path out_dir(const Manifest& m)
{
    if (m.output_dir.empty()) throw Error(ErrorKind::Config, "--out is required");
    fs::path p(m.output_dir);
    std::error_code ec;
    fs::create_directories(p, ec);
    if (ec || !fs::is_directory(p))
        throw Error(ErrorKind::Config, "cannot create output directory '" + p.string() + "'");
    return p;
}

int cmd_jsi(const Manifest& m)
{
    const auto lc = resolve(m);
    const fs::path dir = out_dir(m);
    const JsiResult r = jsi_grid(lc.sim, m.exact, true);
    write_matrix_csv(dir / "jsi.csv", r.grid.nodes, r.intensity);
    write_json(dir / "jsi.json", {{"name", lc.name},
                                  {"model", m.exact ? "exact" : "approximate"},
                                  {"normalized", r.normalized},
                                  {"peak", r.intensity.maxCoeff()},
                                  {"grid", grid_json(lc.sim)},
                                  {"config", to_json(lc.sim)}});
    std::cout << "wrote " << (dir / "jsi.csv").string() << "\n";
    return kOk;
}

int cmd_probs(const Manifest& m)
{
    const auto lc = resolve(m);
    const fs::path dir = out_dir(m);
    const ExitProbabilities p = exit_probabilities(lc.sim);
    const json j = {{"name", lc.name},
                    {"P2", p.p2},
                    {"P1", p.p1},
                    {"P0", p.p0},
                    {"sum", p.sum()},
                    {"grid", grid_json(lc.sim)},
                    {"config", to_json(lc.sim)}};
    write_json(dir / "probs.json", j);
    std::cout << "P2 " << fmt17(p.p2) << "\nP1 " << fmt17(p.p1) << "\nP0 " << fmt17(p.p0) << "\n";
    return kOk;
}

int cmd_schmidt(const Manifest& m)
{
    auto lc = resolve(m);
    const fs::path dir = out_dir(m);
    if (lc.schmidt_grid) lc.sim.grid.d_grid = *lc.schmidt_grid;
    lc.sim.validate();
    const JsiResult r = jsi_grid(lc.sim, m.exact, true);
    const SchmidtResult s = schmidt_number(r.amplitude, r.grid, 200);
    write_json(dir / "schmidt.json", {{"name", lc.name},
                                      {"K", s.k_number},
                                      {"weights", s.mode_weights},
                                      {"truncation_error", s.truncation_error},
                                      {"model", m.exact ? "exact" : "approximate"},
                                      {"grid", grid_json(lc.sim)},
                                      {"config", to_json(lc.sim)}});
    std::cout << "K " << fmt17(s.k_number) << "\n";
    return kOk;
}

int cmd_sfg(const Manifest& m)
{
    const auto lc = resolve(m);
    const fs::path dir = out_dir(m);
    const SimulationConfig& cfg = lc.sim;
    const double wd = 0.5 * cfg.pump.omega_p;
    SfgParams p;
    p.L = cfg.L;
    p.alpha_s = alpha(cfg.loss_d, wd) * cfg.r();
    p.alpha_i = p.alpha_s;
    p.alpha_sh = alpha(cfg.loss_p, cfg.pump.omega_p);
    std::string csv = "dk_per_um,half_phase,power\n";
    const int n = 401;
    for (int i = 0; i < n; ++i) {
        const double x = -4 * std::numbers::pi + 8 * std::numbers::pi * i / (n - 1);
        p.dk = 2 * x / p.L;
        csv += fmt17(p.dk) + "," + fmt17(x) + "," + fmt17(sfg_power(p)) + "\n";
    }
    write_text(dir / "sfg.csv", csv);
    write_json(dir / "sfg.json", {{"name", lc.name},
                                  {"alpha_s_per_um", p.alpha_s},
                                  {"alpha_i_per_um", p.alpha_i},
                                  {"alpha_sh_per_um", p.alpha_sh},
                                  {"length_um", p.L},
                                  {"config", to_json(cfg)}});
    std::cout << "wrote " << (dir / "sfg.csv").string() << "\n";
    return kOk;
}

int cmd_validate(const Manifest& m)
{
    const auto checks = run_oracle_suite();
    bool ok = true;
    json list = json::array();
    for (const auto& c : checks) {
        ok = ok && c.pass;
        std::printf("[%s] %s (deviation %.3g, tolerance %.3g)\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.value, c.tolerance);
        list.push_back({{"name", c.name}, {"pass", c.pass}, {"deviation", c.value},
                        {"tolerance", c.tolerance}});
    }
    if (!m.output_dir.empty()) write_json(out_dir(m) / "validate.json", {{"checks", list}, {"pass", ok}});
    return ok ? kOk : kValidationFailure;
}

int cmd_figure1(const Manifest& m)
{
    const fs::path dir = out_dir(m);
    json summary = json::object();
    for (const std::string name : {"fig1a", "fig1b", "fig1c", "fig1d"}) {
        auto lc = resolve(m, name);
        // Plot on the amplitude grid extent, 256 points unless overridden.
        if (lc.schmidt_grid) {
            lc.sim.grid.d_grid = *lc.schmidt_grid;
            lc.sim.grid.d_grid.n = m.grid_d ? m.grid_d : 256;
        }
        lc.sim.validate();
        const JsiResult r = jsi_grid(lc.sim, m.exact, true);
        write_matrix_csv(dir / (name + ".csv"), r.grid.nodes, r.intensity);
        summary[name] = {{"grid", grid_json(lc.sim)}, {"config", to_json(lc.sim)}};
        std::cout << "wrote " << (dir / (name + ".csv")).string() << "\n";
    }
    write_json(dir / "figure1.json", {{"model", m.exact ? "exact" : "approximate"},
                                      {"panels", summary}});
    return kOk;
}

int report(const Manifest& m, ErrorKind kind, const std::string& msg, int code)
{
    const json j = {{"error", to_string(kind)}, {"message", msg}, {"exit_code", code}};
    std::cerr << j.dump() << "\n";
    if (!m.output_dir.empty()) {
        std::error_code ec;
        fs::create_directories(m.output_dir, ec);
        std::ofstream(fs::path(m.output_dir) / "error.json") << j.dump(2) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pair generation in lossy nonlinear waveguides"};
    app.require_subcommand(1);
    Manifest m;
    for (const char* name : {"jsi", "probs", "schmidt", "sfg", "validate", "figure1"}) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", m.config_path, "JSON config file");
        sub->add_option("--preset", m.preset_name, "built-in config")
            ->check(CLI::IsMember(preset_names()));
        sub->add_option("--out", m.output_dir, "output directory");
        sub->add_option("--grid-d", m.grid_d, "points on the signal/idler grid")
            ->check(CLI::Range(2, 1 << 16));
        sub->add_option("--grid-p", m.grid_p, "points on the pump grid")
            ->check(CLI::Range(2, 1 << 16));
        sub->add_flag("--exact", m.exact, "use the exact amplitude instead of the approximation");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        return report(m, ErrorKind::Config, e.what(), kConfigError);
    }
    m.command = app.get_subcommands().front()->get_name();

    try {
        if (m.command == "jsi") return cmd_jsi(m);
        if (m.command == "probs") return cmd_probs(m);
        if (m.command == "schmidt") return cmd_schmidt(m);
        if (m.command == "sfg") return cmd_sfg(m);
        if (m.command == "validate") return cmd_validate(m);
        return cmd_figure1(m);
    } catch (const Error& e) {
        return report(m, e.kind(), e.what(),
                      e.kind() == ErrorKind::Config ? kConfigError : kNumericalFailure);
    } catch (const std::exception& e) {
        return report(m, ErrorKind::DegenerateInput, e.what(), kNumericalFailure);
    }
}
