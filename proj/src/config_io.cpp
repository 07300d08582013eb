#include "lossyspdc/config_io.hpp"

#include <fstream>

#include "lossyspdc/errors.hpp"

namespace lossyspdc {

using nlohmann::json;

namespace {

// Reference device.
constexpr double kLengthMm = 2.0;
constexpr double kPumpWavelengthNm = 775.0;
constexpr double kVd = 89.8, kVp = 74.3;             // um/ps
constexpr double kLambdaD = 7.07e-7, kLambdaP = 2.92e-6;  // ps^2/um
constexpr double kDGridDurationFs = 20.0;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::Config, what); }

double number(const json& j, const char* key, double fallback)
{
    if (!j.is_object() || !j.contains(key)) return fallback;
    if (!j.at(key).is_number()) fail(std::string("'") + key + "' must be a number");
    return j.at(key).get<double>();
}

const json& section(const json& j, const char* key)
{
    static const json empty = json::object();
    if (!j.contains(key)) return empty;
    if (!j.at(key).is_object()) fail(std::string("'") + key + "' must be an object");
    return j.at(key);
}

void reject_unknown(const json& j, std::initializer_list<const char*> known, const char* where)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) fail("unknown key '" + it.key() + "' in " + where);
    }
}

LossModel parse_loss(const json& j, double omega_p, const LossModel* balance_against,
                     const SimulationConfig& cfg)
{
    const std::string model = j.value("model", "zero");
    if (model == "zero") {
        reject_unknown(j, {"model"}, "loss");
        return ZeroLoss{};
    }
    if (model == "constant") {
        reject_unknown(j, {"model", "alpha_per_cm"}, "loss");
        if (!j.contains("alpha_per_cm")) fail("constant loss needs 'alpha_per_cm'");
        return ConstantLoss{number(j, "alpha_per_cm", 0) * units::per_cm};
    }
    if (model == "quadratic") {
        reject_unknown(j, {"model", "coef_per_cm", "omega_ref_rad_per_ps"}, "loss");
        if (!j.contains("coef_per_cm")) fail("quadratic loss needs 'coef_per_cm'");
        return QuadraticLoss{number(j, "coef_per_cm", 0) * units::per_cm,
                             number(j, "omega_ref_rad_per_ps", omega_p)};
    }
    if (model == "balanced") {
        // alpha_P v_P = 2 alpha_D v_D
        reject_unknown(j, {"model"}, "loss");
        const auto* c = balance_against ? std::get_if<ConstantLoss>(balance_against) : nullptr;
        if (!c) fail("balanced pump loss needs a constant D loss");
        return ConstantLoss{2.0 * c->alpha * cfg.disp_d.v / cfg.disp_p.v};
    }
    fail("unknown loss model '" + model + "'");
}

GridSpec parse_grid(const json& j, double center, double default_delta, std::size_t default_n)
{
    reject_unknown(j,
                   {"n", "half_width_rad_per_ps", "half_width_bandwidths", "bandwidth_duration_fs",
                    "center_offset_rad_per_ps"},
                   "grid");
    GridSpec g;
    const double n = number(j, "n", double(default_n));
    if (n < 2 || n != std::floor(n)) fail("grid 'n' must be an integer >= 2");
    g.n = std::size_t(n);
    double half = 0;
    if (j.contains("half_width_rad_per_ps")) {
        half = number(j, "half_width_rad_per_ps", 0);
    } else {
        double delta = default_delta;
        if (j.contains("bandwidth_duration_fs"))
            delta = bandwidth_from_duration(number(j, "bandwidth_duration_fs", 0) * units::fs);
        half = number(j, "half_width_bandwidths", 5.0) * delta;
    }
    if (!(half > 0)) fail("grid half width must be positive");
    const double c = center + number(j, "center_offset_rad_per_ps", 0);
    g.min = c - half;
    g.max = c + half;
    return g;
}

DispersionModel parse_dispersion(const json& j, double omega0, double v, double lambda, double k0)
{
    reject_unknown(j, {"group_velocity_um_per_ps", "gvd_ps2_per_um", "k0_per_um"}, "dispersion");
    return {number(j, "k0_per_um", k0), omega0, number(j, "group_velocity_um_per_ps", v),
            number(j, "gvd_ps2_per_um", lambda)};
}

LoadedConfig parse_document(const json& doc)
{
    if (!doc.is_object()) fail("config must be a JSON object");
    reject_unknown(doc, {"name", "length_mm", "pump", "dispersion", "loss", "grid", "schmidt_grid"},
                   "config");
    LoadedConfig out;
    out.name = doc.value("name", "custom");
    SimulationConfig& cfg = out.sim;

    cfg.L = number(doc, "length_mm", kLengthMm) * units::mm;

    const json& pump = section(doc, "pump");
    reject_unknown(pump, {"wavelength_nm", "duration_fs", "bandwidth_rad_per_ps"}, "pump");
    cfg.pump.omega_p =
        omega_from_wavelength(number(pump, "wavelength_nm", kPumpWavelengthNm) * units::nm, cfg.constants);
    if (pump.contains("bandwidth_rad_per_ps"))
        cfg.pump.delta = number(pump, "bandwidth_rad_per_ps", 0);
    else
        cfg.pump.delta = bandwidth_from_duration(number(pump, "duration_fs", 20.0) * units::fs);
    if (!(cfg.pump.delta > 0)) fail("pump bandwidth must be positive");

    const json& disp = section(doc, "dispersion");
    reject_unknown(disp, {"d", "p", "phase_matched"}, "dispersion");
    cfg.phase_matched = disp.value("phase_matched", true);
    cfg.disp_d = parse_dispersion(section(disp, "d"), 0.5 * cfg.pump.omega_p, kVd, kLambdaD, 0.0);
    cfg.disp_p = parse_dispersion(section(disp, "p"), cfg.pump.omega_p, kVp, kLambdaP,
                                  2.0 * cfg.disp_d.k0);
    if (cfg.phase_matched && section(disp, "p").contains("k0_per_um"))
        fail("'k0_per_um' for the pump mode is fixed by phase matching");

    const json& loss = section(doc, "loss");
    reject_unknown(loss, {"d", "p"}, "loss");
    cfg.loss_d = parse_loss(section(loss, "d"), cfg.pump.omega_p, nullptr, cfg);
    cfg.loss_p = parse_loss(section(loss, "p"), cfg.pump.omega_p, &cfg.loss_d, cfg);

    const json& grid = section(doc, "grid");
    reject_unknown(grid, {"d", "p", "rule"}, "grid");
    const double delta1 = bandwidth_from_duration(kDGridDurationFs * units::fs);
    cfg.grid.d_grid = parse_grid(section(grid, "d"), 0.5 * cfg.pump.omega_p, delta1, 64);
    cfg.grid.p_grid = parse_grid(section(grid, "p"), cfg.pump.omega_p, cfg.pump.delta, 64);
    const std::string rule = grid.value("rule", "trapezoid");
    if (rule == "trapezoid")
        cfg.grid.rule = RuleKind::Trapezoid;
    else if (rule == "simpson")
        cfg.grid.rule = RuleKind::Simpson;
    else
        fail("unknown quadrature rule '" + rule + "'");

    if (doc.contains("schmidt_grid")) {
        const json& sg = section(doc, "schmidt_grid");
        out.schmidt_grid = parse_grid(sg, 0.5 * cfg.pump.omega_p, delta1, 64);
    }

    cfg.validate();
    return out;
}

}  // namespace

LoadedConfig config_from_json(const json& doc)
{
    try {
        return parse_document(doc);
    } catch (const json::exception& e) {
        fail(std::string("malformed config: ") + e.what());
    }
}

LoadedConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) fail("cannot open config '" + path + "'");
    json doc;
    try {
        doc = json::parse(in, nullptr, true, true);
    } catch (const json::exception& e) {
        fail("cannot parse config '" + path + "': " + e.what());
    }
    return config_from_json(doc);
}

std::vector<std::string> preset_names()
{
    return {"lossless", "fig1a", "fig1b", "fig1c", "fig1d"};
}

json preset(const std::string& name)
{
    json doc = {{"name", name},
                {"length_mm", kLengthMm},
                {"pump", {{"wavelength_nm", kPumpWavelengthNm}, {"duration_fs", 20.0}}},
                {"dispersion",
                 {{"d", {{"group_velocity_um_per_ps", kVd}, {"gvd_ps2_per_um", kLambdaD}}},
                  {"p", {{"group_velocity_um_per_ps", kVp}, {"gvd_ps2_per_um", kLambdaP}}},
                  {"phase_matched", true}}},
                {"grid",
                 {{"d", {{"n", 64}, {"half_width_bandwidths", 5.0}, {"bandwidth_duration_fs", 20.0}}},
                  {"p", {{"n", 64}, {"half_width_bandwidths", 5.0}}},
                  {"rule", "trapezoid"}}}};
    const json balanced = {{"d", {{"model", "constant"}, {"alpha_per_cm", 2.0}}},
                           {"p", {{"model", "balanced"}}}};
    if (name == "lossless") {
        doc["loss"] = {{"d", {{"model", "zero"}}}, {"p", {{"model", "zero"}}}};
        doc["schmidt_grid"] = {{"n", 1536}, {"half_width_bandwidths", 7.5}};
    } else if (name == "fig1a") {
        doc["loss"] = balanced;
        doc["schmidt_grid"] = {{"n", 1536}, {"half_width_bandwidths", 7.5}};
    } else if (name == "fig1b") {
        doc["loss"] = {{"d", {{"model", "constant"}, {"alpha_per_cm", 2.0}}},
                       {"p", {{"model", "constant"}, {"alpha_per_cm", 40.0}}}};
        doc["schmidt_grid"] = {{"n", 1536}, {"half_width_bandwidths", 7.5}};
    } else if (name == "fig1c") {
        doc["pump"]["duration_fs"] = 2000.0;
        doc["loss"] = balanced;
        doc["schmidt_grid"] = {{"n", 1536}, {"half_width_bandwidths", 5.0}};
    } else if (name == "fig1d") {
        doc["pump"]["duration_fs"] = 2000.0;
        doc["loss"] = {{"d", {{"model", "quadratic"}, {"coef_per_cm", 1.77e8}}},
                       {"p", {{"model", "zero"}}}};
        doc["schmidt_grid"] = {{"n", 256}, {"half_width_rad_per_ps", 4.0}};
    } else {
        fail("unknown preset '" + name + "'");
    }
    return doc;
}

json to_json(const GridSpec& g)
{
    return {{"min_rad_per_ps", g.min}, {"max_rad_per_ps", g.max}, {"n", g.n}};
}

json to_json(const SimulationConfig& cfg)
{
    auto disp = [](const DispersionModel& m) {
        return json{{"k0_per_um", m.k0},
                    {"omega0_rad_per_ps", m.omega0},
                    {"group_velocity_um_per_ps", m.v},
                    {"gvd_ps2_per_um", m.Lambda}};
    };
    auto loss = [](const LossModel& l) {
        struct V {
            json operator()(const ZeroLoss&) const { return {{"model", "zero"}}; }
            json operator()(const ConstantLoss& c) const
            {
                return {{"model", "constant"}, {"alpha_per_um", c.alpha}};
            }
            json operator()(const QuadraticLoss& q) const
            {
                return {{"model", "quadratic"}, {"coef_per_um", q.coef},
                        {"omega_ref_rad_per_ps", q.omega_ref}};
            }
        };
        return std::visit(V{}, l);
    };
    return {{"length_um", cfg.L},
            {"pump", {{"omega_p_rad_per_ps", cfg.pump.omega_p}, {"delta_rad_per_ps", cfg.pump.delta}}},
            {"dispersion", {{"d", disp(cfg.disp_d)}, {"p", disp(cfg.disp_p)},
                            {"phase_matched", cfg.phase_matched}}},
            {"loss", {{"d", loss(cfg.loss_d)}, {"p", loss(cfg.loss_p)}}},
            {"grid", {{"d", to_json(cfg.grid.d_grid)}, {"p", to_json(cfg.grid.p_grid)},
                      {"rule", cfg.grid.rule == RuleKind::Simpson ? "simpson" : "trapezoid"}}},
            {"velocity_ratio", cfg.r()},
            {"half_time_ps", cfg.t1()},
            {"constants", {{"c_um_per_ps", cfg.constants.c},
                           {"hbar_J_ps", cfg.constants.hbar},
                           {"epsilon0_F_per_um", cfg.constants.epsilon0}}}};
}

}  // namespace lossyspdc
