#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "lossyspdc/config_io.hpp"
#include "lossyspdc/errors.hpp"

using namespace lossyspdc;
using nlohmann::json;

namespace {

template <typename F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no lossyspdc::Error thrown");
    return ErrorKind::DegenerateInput;
}

ErrorKind parse_kind(const json& doc)
{
    return kind_of([&] { config_from_json(doc); });
}

const double kOmegaP = 2 * std::numbers::pi * 299.792458 / 0.775;

}  // namespace

TEST_CASE("every preset parses and validates")
{
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        const auto lc = config_from_json(preset(name));
        CHECK(lc.name == name);
        CHECK(lc.schmidt_grid.has_value());
        CHECK(lc.sim.grid.d_grid.n == 64);
        CHECK(lc.sim.grid.p_grid.n == 64);
        CHECK(lc.sim.L == doctest::Approx(2000.0));
        CHECK(lc.sim.pump.omega_p == doctest::Approx(kOmegaP).epsilon(1e-14));
    }
    CHECK(kind_of([] { preset("fig9"); }) == ErrorKind::Config);
}

TEST_CASE("empty document gives the reference device")
{
    const auto lc = config_from_json(json::object());
    const auto& c = lc.sim;
    CHECK(lc.name == "custom");
    CHECK(c.disp_d.v == 89.8);
    CHECK(c.disp_p.v == 74.3);
    CHECK(c.disp_d.Lambda == 7.07e-7);
    CHECK(c.disp_p.Lambda == 2.92e-6);
    CHECK(c.disp_d.omega0 == doctest::Approx(kOmegaP / 2).epsilon(1e-15));
    CHECK(c.disp_p.k0 == 2 * c.disp_d.k0);
    CHECK(c.pump.delta == doctest::Approx(83.26).epsilon(1e-3));
    CHECK(std::holds_alternative<ZeroLoss>(c.loss_d));
    CHECK(std::holds_alternative<ZeroLoss>(c.loss_p));
    CHECK(c.grid.rule == RuleKind::Trapezoid);
    CHECK(c.grid.d_grid.max - c.grid.d_grid.min == doctest::Approx(10 * c.pump.delta).epsilon(1e-12));
    CHECK(0.5 * (c.grid.p_grid.max + c.grid.p_grid.min) == doctest::Approx(kOmegaP).epsilon(1e-14));
}

TEST_CASE("units convert to internal values")
{
    const auto c = config_from_json(preset("fig1b")).sim;
    CHECK(std::get<ConstantLoss>(c.loss_d).alpha == doctest::Approx(2e-4).epsilon(1e-14));
    CHECK(std::get<ConstantLoss>(c.loss_p).alpha == doctest::Approx(4e-3).epsilon(1e-14));

    const auto d = config_from_json(preset("fig1d")).sim;
    CHECK(d.pump.delta == doctest::Approx(0.8326).epsilon(1e-3));
    const auto& q = std::get<QuadraticLoss>(d.loss_d);
    CHECK(q.coef == doctest::Approx(1.77e4).epsilon(1e-14));
    CHECK(q.omega_ref == doctest::Approx(kOmegaP).epsilon(1e-15));

    json doc = {{"length_mm", 0.5},
                {"pump", {{"bandwidth_rad_per_ps", 3.0}, {"wavelength_nm", 1550.0}}},
                {"grid", {{"d", {{"n", 9}, {"half_width_rad_per_ps", 2.0}, {"center_offset_rad_per_ps", 1.0}}}}}};
    const auto e = config_from_json(doc).sim;
    CHECK(e.L == doctest::Approx(500.0));
    CHECK(e.pump.delta == 3.0);
    CHECK(e.pump.omega_p == doctest::Approx(kOmegaP / 2).epsilon(1e-14));
    CHECK(e.grid.d_grid.n == 9);
    CHECK(e.grid.d_grid.min == doctest::Approx(kOmegaP / 4 - 1).epsilon(1e-15));
    CHECK(e.grid.d_grid.max == doctest::Approx(kOmegaP / 4 + 3).epsilon(1e-15));
}

TEST_CASE("balanced pump loss follows the D loss")
{
    const auto c = config_from_json(preset("fig1a")).sim;
    const double ad = std::get<ConstantLoss>(c.loss_d).alpha;
    const double ap = std::get<ConstantLoss>(c.loss_p).alpha;
    CHECK(ap * c.disp_p.v == doctest::Approx(2 * ad * c.disp_d.v).epsilon(1e-14));
    CHECK(ap * 1e4 == doctest::Approx(4.834).epsilon(1e-3));

    json doc = {{"loss", {{"p", {{"model", "balanced"}}}}}};
    CHECK(parse_kind(doc) == ErrorKind::Config);
}

TEST_CASE("quadratic loss takes an explicit reference frequency")
{
    json doc = {{"loss", {{"d", {{"model", "quadratic"}, {"coef_per_cm", 3.0}, {"omega_ref_rad_per_ps", 1000.0}}}}}};
    const auto& q = std::get<QuadraticLoss>(config_from_json(doc).sim.loss_d);
    CHECK(q.coef == doctest::Approx(3e-4));
    CHECK(q.omega_ref == 1000.0);
}

TEST_CASE("malformed documents are config errors")
{
    CHECK(parse_kind(json::array()) == ErrorKind::Config);
    CHECK(parse_kind({{"lenght_mm", 2.0}}) == ErrorKind::Config);
    CHECK(parse_kind({{"pump", {{"duration", 20.0}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"grid", {{"d", {{"points", 8}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"length_mm", "two"}}) == ErrorKind::Config);
    CHECK(parse_kind({{"length_mm", -1.0}}) == ErrorKind::Config);
    CHECK(parse_kind({{"pump", 5}}) == ErrorKind::Config);
    CHECK(parse_kind({{"name", 7}}) == ErrorKind::Config);
    CHECK(parse_kind({{"dispersion", {{"phase_matched", "yes"}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"loss", {{"d", {{"model", "exponential"}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"loss", {{"d", {{"model", "constant"}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"loss", {{"d", {{"model", "constant"}, {"alpha_per_cm", -1.0}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"loss", {{"d", {{"model", "zero"}, {"alpha_per_cm", 1.0}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"grid", {{"rule", "gauss"}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"grid", {{"d", {{"n", 1}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"grid", {{"d", {{"n", 8.5}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"grid", {{"p", {{"half_width_rad_per_ps", 0.0}}}}}}) == ErrorKind::Config);
    CHECK(parse_kind({{"pump", {{"bandwidth_rad_per_ps", 0.0}}}}) == ErrorKind::Config);
}

TEST_CASE("simpson needs odd point counts")
{
    CHECK(parse_kind({{"grid", {{"rule", "simpson"}}}}) == ErrorKind::Config);
    json odd = {{"grid", {{"rule", "simpson"}, {"d", {{"n", 65}}}, {"p", {{"n", 33}}}}}};
    CHECK(config_from_json(odd).sim.grid.rule == RuleKind::Simpson);
}

TEST_CASE("phase matching fixes the pump k0")
{
    CHECK(parse_kind({{"dispersion", {{"p", {{"k0_per_um", 1.0}}}}}}) == ErrorKind::Config);
    json free = {{"dispersion", {{"phase_matched", false}, {"p", {{"k0_per_um", 1.0}}}}}};
    const auto c = config_from_json(free).sim;
    CHECK_FALSE(c.phase_matched);
    CHECK(c.disp_p.k0 == 1.0);
    json shifted = {{"dispersion", {{"d", {{"k0_per_um", 2.5}}}}}};
    CHECK(config_from_json(shifted).sim.disp_p.k0 == 5.0);
}

TEST_CASE("to_json reports resolved internal values")
{
    const auto c = config_from_json(preset("fig1b")).sim;
    const json j = to_json(c);
    CHECK(j.at("length_um").get<double>() == 2000.0);
    CHECK(j.at("velocity_ratio").get<double>() == doctest::Approx(89.8 / 74.3).epsilon(1e-15));
    CHECK(j.at("half_time_ps").get<double>() == doctest::Approx(1000 / 74.3).epsilon(1e-15));
    CHECK(j.at("loss").at("p").at("model") == "constant");
    CHECK(j.at("loss").at("p").at("alpha_per_um").get<double>() == doctest::Approx(4e-3));
    CHECK(j.at("grid").at("rule") == "trapezoid");
    CHECK(j.at("grid").at("d").at("n") == 64);
    CHECK(j.at("constants").at("c_um_per_ps").get<double>() == 299.792458);
    CHECK(j.at("dispersion").at("phase_matched") == true);

    const json q = to_json(config_from_json(preset("fig1d")).sim);
    CHECK(q.at("loss").at("d").at("model") == "quadratic");
    CHECK(q.at("loss").at("d").contains("omega_ref_rad_per_ps"));

    const GridSpec g{1.0, 3.0, 5};
    CHECK(to_json(g) == json{{"min_rad_per_ps", 1.0}, {"max_rad_per_ps", 3.0}, {"n", 5}});
}

TEST_CASE("load_config reads files with comments")
{
    const auto dir = std::filesystem::temp_directory_path() / "lossyspdc_test_config";
    std::filesystem::create_directories(dir);
    const auto good = dir / "good.json";
    std::ofstream(good) << "// device\n{ \"name\": \"short\", /* mm */ \"length_mm\": 1.0 }\n";
    const auto lc = load_config(good.string());
    CHECK(lc.name == "short");
    CHECK(lc.sim.L == doctest::Approx(1000.0));

    const auto bad = dir / "bad.json";
    std::ofstream(bad) << "{ \"length_mm\": }";
    CHECK(kind_of([&] { load_config(bad.string()); }) == ErrorKind::Config);
    CHECK(kind_of([&] { load_config((dir / "missing.json").string()); }) == ErrorKind::Config);
    std::filesystem::remove_all(dir);
}
