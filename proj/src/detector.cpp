#include "paritydistill/detector.hpp"

namespace paritydistill {

std::string to_string(Parity p) {
    return p == Parity::Odd ? "odd" : "even";
}

std::optional<Parity> parse_parity(const std::string& s) {
    if (s == "odd") return Parity::Odd;
    if (s == "even") return Parity::Even;
    return std::nullopt;
}

ParityClass parity_class_of(Parity p) {
    return p == Parity::Odd ? ParityClass::LR : ParityClass::NO;
}

Parity parity_of(ParityClass cls) {
    return cls == ParityClass::LR ? Parity::Odd : Parity::Even;
}

Parity opposite(Parity p) {
    return p == Parity::Odd ? Parity::Even : Parity::Odd;
}

namespace {

ParityOutcome project_branch(const DensityOperator& rho, Parity parity) {
    const Matrix proj = parity_projector(parity_class_of(parity), rho.statistics());
    Matrix projected = proj * rho.matrix() * proj;
    double probability = projected.trace().real();
    if (probability < 0.0) {
        if (probability < -kTol) throw InvalidProbability("negative branch probability");
        probability = 0.0;  // rounding on a positive operator
    }
    ParityOutcome outcome{parity, probability, std::nullopt};
    if (probability >= kZeroProb)
        outcome.conditional = DensityOperator(rho.statistics(), projected / probability);
    return outcome;
}

}  // namespace

ParityMeasurement parity_measure(const DensityOperator& rho) {
    return {project_branch(rho, Parity::Odd), project_branch(rho, Parity::Even)};
}

std::pair<double, std::optional<DensityOperator>> coincidence_postselect(const DensityOperator& rho) {
    ParityOutcome odd = project_branch(rho, Parity::Odd);
    return {odd.probability, std::move(odd.conditional)};
}

}  // namespace paritydistill
