#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace paritydistill {

/// Default tolerance for algebraic identities on the small sectors.
inline constexpr double kTol = 1e-12;

/// Threshold below which a branch probability is reported as absent.
inline constexpr double kZeroProb = 1e-14;

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Shortest round-trip decimal representation truncated to 15 significant
/// digits, locale independent. Used for every number the CLI emits so that
/// repeated runs are byte-identical.
std::string format_double(double v);

/// Angle reduced into [0, 2pi).
double reduce_angle(double theta);

/// splitmix64 mix function; maps a 64-bit seed to a well-distributed value.
std::uint64_t splitmix64(std::uint64_t x);

/// Sub-seed for the i-th independent stream derived from a master seed.
/// Streams are independent of execution order, so partitioned work gives
/// the same results regardless of the degree of parallelism.
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one generator draw.
/// Unlike std::uniform_real_distribution this is bit-reproducible across
/// standard library implementations.
double uniform_double(std::mt19937_64& rng);

/// Standard complex normal via Box-Muller over portable uniforms.
Complex standard_normal_complex(std::mt19937_64& rng);

/// Haar-like random unitary: Gram-Schmidt of a seeded complex Gaussian
/// matrix. Deterministic for a fixed generator state.
Matrix random_unitary(int n, std::mt19937_64& rng);

/// Random density matrix G G^dagger / tr, full rank almost surely.
Matrix random_density(int n, std::mt19937_64& rng);

/// Max absolute entry of A - B.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Unitarity defect: max abs entry of U^dagger U - I.
double unitarity_defect(const Matrix& u);

/// True when a and b are equal up to a global phase within tol; when they
/// are, phase receives the factor such that a = phase * b.
bool equal_up_to_phase(const Vector& a, const Vector& b, double tol, Complex* phase = nullptr);

}  // namespace paritydistill
