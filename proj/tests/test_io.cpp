#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "paritydistill/sweep.hpp"

using namespace paritydistill;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.7071067811865475244;
}  // namespace

TEST_CASE("number formatting") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-0.5) == "-0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333333");  // truncated to 15 digits
    CHECK(format_double(0.1) == "0.1");                      // shortest round trip
    CHECK(format_double(std::nan("")) == "nan");
    // 15 significant digits cap applies to the significand only.
    CHECK(format_double(123456789.123456789).size() <= 21);
}

TEST_CASE("sweep grid order and closed forms") {
    SweepConfig config;
    config.channel = ChannelKind::PhaseDamping;
    config.statistics = Statistics::Boson;
    config.a_min = 0.0;
    config.a_max = 1.0;
    config.a_steps = 3;
    config.phis = {0.0, kPi};
    config.t_min = 0.0;
    config.t_max = 2.0;
    config.t_steps = 3;

    auto rows = run_sweep(config);
    REQUIRE(rows.size() == 3 * 2 * 3);
    // Nested loop order: a outer, phi middle, t inner.
    CHECK(rows[0].a == 0.0);
    CHECK(rows[0].phi == 0.0);
    CHECK(rows[0].t == 0.0);
    CHECK(rows[1].t == 1.0);
    CHECK(rows[3].phi == kPi);
    CHECK(rows[6].a == 0.5);

    for (const auto& row : rows) {
        BranchProbabilities expected = closed_form_probability(config.channel, config.statistics, row.a,
                                                               row.phi, row.p_disturb);
        CHECK(std::abs(row.p_odd - expected.odd) <= 1e-12);
        CHECK(std::abs(row.p_even - expected.even) <= 1e-12);
    }
}

TEST_CASE("sweep at the singlet with zero disturbance distills certainly") {
    SweepConfig config;
    config.channel = ChannelKind::PhaseDamping;
    config.statistics = Statistics::Boson;
    config.a_min = config.a_max = kInvSqrt2;
    config.a_steps = 1;
    config.phis = {kPi};
    config.t_min = config.t_max = 0.0;
    config.t_steps = 1;
    auto rows = run_sweep(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].p_odd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[0].fidelity_odd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[0].purity_odd == doctest::Approx(1.0).epsilon(1e-12));
    // Absent branch reports nan.
    CHECK(std::isnan(rows[0].fidelity_even));
}

TEST_CASE("sweep reports the unentangled fermionic long-time limit") {
    // Full amplitude-damping disturbance (t = 3pi/2 at gamma = lambda = 1):
    // the odd branch is certain and is the ground state.
    SweepConfig config;
    config.channel = ChannelKind::AmplitudeDamping;
    config.statistics = Statistics::Fermion;
    config.a_min = config.a_max = kInvSqrt2;
    config.a_steps = 1;
    config.phis = {0.0};
    config.t_min = config.t_max = 3 * kPi / 2;
    config.t_steps = 1;
    auto rows = run_sweep(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].p_disturb == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[0].p_odd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[0].fidelity_odd == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[0].purity_odd == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("csv and json emission") {
    SweepConfig config;
    config.a_steps = 2;
    config.t_steps = 2;
    config.phis = {0.0};
    auto rows = run_sweep(config);

    std::string csv = sweep_to_csv(rows);
    CHECK(csv.rfind("statistics,channel,a,phi,gamma,lambda,t,p_disturb,p_odd,p_even,"
                    "fidelity_odd,fidelity_even,purity_odd,purity_even\n",
                    0) == 0);
    std::size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == rows.size() + 1);
    CHECK(csv == sweep_to_csv(run_sweep(config)));  // deterministic

    std::string json = sweep_to_json(rows);
    CHECK(json.front() == '[');
    CHECK(json.back() == ']');
    CHECK(json.find("\"p_odd\":") != std::string::npos);
}

TEST_CASE("sweep validation") {
    SweepConfig config;
    config.a_steps = 0;
    CHECK_THROWS_AS(run_sweep(config), Error);
    config = {};
    config.phis = {};
    CHECK_THROWS_AS(run_sweep(config), Error);
    config = {};
    config.a_max = 1.5;
    CHECK_THROWS_AS(run_sweep(config), Error);
}
