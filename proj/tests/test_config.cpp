#include <catch2/catch_amalgamated.hpp>

#include <variant>

#include "atompot/config.hpp"
#include "atompot/constants.hpp"

using namespace atompot;

TEST_CASE("config parsing") {
    const std::string text = R"(# scenario: plasmonic evanescent trap
[atom]
omega10 = 2.37e15
dipole = 2.53e-29

[surface]
model = drude_lorentz   # single-resonance metal
omega0 = 0
omegaP = 1.2e16
gamma = 1e14

[laser]
detuning = 6.283185307e8
field = evanescent
c0 = 4.51e-23
power = 39e-6
z0 = 430e-9
theta = 1.5707963267948966

[sweep]
z_min = 50e-9
z_max = 2e-6
z_points = 512
grid = log
powers = 10e-6, 39e-6, 100e-6
mode = nonretarded

[output]
path = out.csv
unit = J
)";
    const ScenarioConfig cfg = parse_config_string(text);
    CHECK(cfg.omega10 == 2.37e15);
    CHECK(cfg.dipole == 2.53e-29);
    CHECK(cfg.surface_model == "drude_lorentz");
    CHECK(cfg.omegaP == 1.2e16);
    CHECK(cfg.power == 39e-6);
    REQUIRE(cfg.powers.size() == 3);
    CHECK(cfg.powers[1] == 39e-6);
    CHECK(cfg.out_path == "out.csv");

    CHECK_NOTHROW(cfg.atom());
    CHECK(std::holds_alternative<DrudeLorentz>(cfg.surface()));
    CHECK(std::holds_alternative<EvanescentField>(cfg.laser().field));
    CHECK(cfg.plan().mode == EvalMode::nonretarded);
}

TEST_CASE("config errors carry their location") {
    SECTION("unknown key") {
        try {
            parse_config_string("[atom]\nomega10 = 1\nfrequency = 2\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.line() == 3);
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("frequency"));
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 3"));
        }
    }
    SECTION("unknown section") {
        CHECK_THROWS_AS(parse_config_string("[atoms]\n"), ConfigError);
    }
    SECTION("key before any section") {
        CHECK_THROWS_AS(parse_config_string("omega10 = 1\n"), ConfigError);
    }
    SECTION("bad number") {
        try {
            parse_config_string("[atom]\nomega10 = fast\n");
            FAIL("expected ConfigError");
        } catch (const ConfigError& e) {
            CHECK(e.line() == 2);
        }
    }
    SECTION("missing equals sign") {
        CHECK_THROWS_AS(parse_config_string("[atom]\nomega10 2.37e15\n"), ConfigError);
    }
    SECTION("unterminated section header") {
        CHECK_THROWS_AS(parse_config_string("[atom\n"), ConfigError);
    }
}

TEST_CASE("serialization round trip") {
    for (const char* name : {"fig2", "fig3", "fig4"}) {
        const ScenarioConfig cfg = preset_by_name(name);
        const std::string once = serialize_config(cfg);
        const ScenarioConfig reparsed = parse_config_string(once);
        CHECK(serialize_config(reparsed) == once);
        CHECK(reparsed.omega10 == cfg.omega10);
        CHECK(reparsed.power == cfg.power);
        CHECK(reparsed.powers == cfg.powers);
        CHECK(reparsed.mode == cfg.mode);
        CHECK(reparsed.out_path == cfg.out_path);
    }
}

TEST_CASE("presets") {
    SECTION("mirror scenario") {
        const ScenarioConfig cfg = preset_fig2();
        CHECK(std::holds_alternative<PerfectMirror>(cfg.surface()));
        CHECK(cfg.intensity == 5e4);
        CHECK(cfg.mode == "full");
        CHECK(cfg.plan().mode == EvalMode::full);
    }
    SECTION("plasmonic evanescent scenario") {
        const ScenarioConfig cfg = preset_fig3();
        const SurfaceModel s = cfg.surface();
        REQUIRE(std::holds_alternative<PlasmonDirect>(s));
        CHECK(std::get<PlasmonDirect>(s).q == 60.0);
        CHECK(std::get<PlasmonDirect>(s).sign == 1);
        CHECK(cfg.power == 39e-6);
        CHECK(cfg.z0 == 430e-9);
        CHECK(cfg.c0 == 4.51e-23);
        CHECK(cfg.theta == constants::pi / 2.0);
        CHECK(cfg.waist_x == 170e-6);
        CHECK(cfg.waist_y == 227e-6);
    }
    SECTION("power sweep scenario") {
        const ScenarioConfig cfg = preset_fig4();
        CHECK(cfg.powers == std::vector<double>{10e-6, 39e-6, 100e-6, 400e-6});
        CHECK(cfg.z_max == 5e-6);
    }
    SECTION("unknown name") {
        CHECK_THROWS_AS(preset_by_name("fig9"), std::invalid_argument);
    }
}

TEST_CASE("domain conversion rejects bad fields") {
    ScenarioConfig cfg = preset_fig3();
    cfg.surface_model = "unobtainium";
    CHECK_THROWS_AS(cfg.surface(), std::invalid_argument);
    cfg = preset_fig3();
    cfg.field = "plane";
    CHECK_THROWS_AS(cfg.laser(), std::invalid_argument);
    cfg = preset_fig3();
    cfg.grid = "cubic";
    CHECK_THROWS_AS(cfg.plan(), std::invalid_argument);
    cfg = preset_fig3();
    cfg.mode = "semiclassical";
    CHECK_THROWS_AS(cfg.plan(), std::invalid_argument);
    cfg = preset_fig3();
    cfg.unit = "eV";
    CHECK_THROWS_AS(cfg.plan(), std::invalid_argument);
    cfg = preset_fig3();
    cfg.dipole = 0.0;
    CHECK_THROWS_AS(cfg.atom(), std::invalid_argument);
}
