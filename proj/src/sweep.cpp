#include "paritydistill/sweep.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace paritydistill {

void SweepConfig::validate() const {
    bath.validate();
    if (a_steps < 1 || t_steps < 1) throw Error("grids need at least one point");
    if (phis.empty()) throw Error("sweep needs at least one phi value");
    if (!(a_min >= 0.0 && a_max <= 1.0 && a_min <= a_max)) throw Error("a grid must lie inside [0, 1]");
    if (!(t_min >= 0.0 && t_min <= t_max)) throw Error("t grid must be non-negative and ordered");
}

namespace {

double grid_point(double lo, double hi, int steps, int k) {
    if (steps == 1) return lo;
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

struct BranchStats {
    double fidelity = std::numeric_limits<double>::quiet_NaN();
    double purity = std::numeric_limits<double>::quiet_NaN();
};

BranchStats branch_stats(const std::optional<DensityOperator>& conditional, Parity parity) {
    BranchStats stats;
    if (!conditional) return stats;
    stats.fidelity = dominant_target(*conditional, parity).second;
    stats.purity = purity(*conditional);
    return stats;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
    config.validate();
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(config.a_steps) * config.phis.size() * config.t_steps);
    for (int ia = 0; ia < config.a_steps; ++ia) {
        double a = grid_point(config.a_min, config.a_max, config.a_steps, ia);
        for (double phi : config.phis) {
            for (int it = 0; it < config.t_steps; ++it) {
                double t = grid_point(config.t_min, config.t_max, config.t_steps, it);
                double p = disturbance_probability(config.bath, t);
                DensityOperator rho_bs = post_bs_state(config.channel, config.statistics, a, phi, p);
                ParityMeasurement measurement = parity_measure(rho_bs);
                BranchStats odd = branch_stats(measurement.odd.conditional, Parity::Odd);
                BranchStats even = branch_stats(measurement.even.conditional, Parity::Even);
                rows.push_back({config.statistics, config.channel, a, phi, config.bath.gamma,
                                config.bath.lambda, t, p, measurement.odd.probability,
                                measurement.even.probability, odd.fidelity, even.fidelity, odd.purity,
                                even.purity});
            }
        }
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "statistics,channel,a,phi,gamma,lambda,t,p_disturb,p_odd,p_even,"
           "fidelity_odd,fidelity_even,purity_odd,purity_even\n";
    for (const auto& row : rows) {
        out << to_string(row.statistics) << ',' << to_string(row.channel) << ','
            << format_double(row.a) << ',' << format_double(row.phi) << ',' << format_double(row.gamma)
            << ',' << format_double(row.lambda) << ',' << format_double(row.t) << ','
            << format_double(row.p_disturb) << ',' << format_double(row.p_odd) << ','
            << format_double(row.p_even) << ',' << format_double(row.fidelity_odd) << ','
            << format_double(row.fidelity_even) << ',' << format_double(row.purity_odd) << ','
            << format_double(row.purity_even) << '\n';
    }
    return out.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
    auto number = [](double v) { return std::isnan(v) ? std::string("null") : format_double(v); };
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i) out << ",";
        out << "{\"statistics\":\"" << to_string(row.statistics) << "\",\"channel\":\""
            << to_string(row.channel) << "\",\"a\":" << number(row.a) << ",\"phi\":" << number(row.phi)
            << ",\"gamma\":" << number(row.gamma) << ",\"lambda\":" << number(row.lambda)
            << ",\"t\":" << number(row.t) << ",\"p_disturb\":" << number(row.p_disturb)
            << ",\"p_odd\":" << number(row.p_odd) << ",\"p_even\":" << number(row.p_even)
            << ",\"fidelity_odd\":" << number(row.fidelity_odd)
            << ",\"fidelity_even\":" << number(row.fidelity_even)
            << ",\"purity_odd\":" << number(row.purity_odd)
            << ",\"purity_even\":" << number(row.purity_even) << "}";
    }
    out << "]";
    return out.str();
}

}  // namespace paritydistill
