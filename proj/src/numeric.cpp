#include "paritydistill/numeric.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <numbers>

namespace paritydistill {

namespace {

int significand_digits(const char* s, std::size_t n) {
    int digits = 0;
    bool seen_nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
        char c = s[i];
        if (c == 'e' || c == 'E') break;
        if (c < '0' || c > '9') continue;
        if (c != '0') seen_nonzero = true;
        if (seen_nonzero) ++digits;
    }
    return digits;
}

}  // namespace

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (significand_digits(buf, static_cast<std::size_t>(res.ptr - buf)) > 15) {
        res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 15);
    }
    return std::string(buf, res.ptr);
}

double reduce_angle(double theta) {
    theta = std::fmod(theta, 2.0 * std::numbers::pi);
    if (theta < 0) theta += 2.0 * std::numbers::pi;
    return theta;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9E3779B97F4A7C15ULL);
}

double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Complex standard_normal_complex(std::mt19937_64& rng) {
    // Box-Muller on portable uniforms; u1 in (0, 1] to keep the log finite.
    double u1 = (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = uniform_double(rng);
    double r = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(angle) / std::numbers::sqrt2, r * std::sin(angle) / std::numbers::sqrt2};
}

Matrix random_unitary(int n, std::mt19937_64& rng) {
    Matrix g(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) g(r, c) = standard_normal_complex(rng);
    // Modified Gram-Schmidt; random Gaussian columns are well conditioned.
    for (int c = 0; c < n; ++c) {
        for (int k = 0; k < c; ++k) g.col(c) -= g.col(k).dot(g.col(c)) * g.col(k);
        g.col(c) /= g.col(c).norm();
    }
    return g;
}

Matrix random_density(int n, std::mt19937_64& rng) {
    Matrix g(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) g(r, c) = standard_normal_complex(rng);
    Matrix rho = g * g.adjoint();
    return rho / rho.trace().real();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& u) {
    Matrix gram = u.adjoint() * u;
    return max_abs_diff(gram, Matrix::Identity(u.cols(), u.cols()));
}

bool equal_up_to_phase(const Vector& a, const Vector& b, double tol, Complex* phase) {
    if (a.size() != b.size()) return false;
    int pivot = -1;
    double best = tol;
    for (int i = 0; i < b.size(); ++i) {
        if (std::abs(b(i)) > best) {
            best = std::abs(b(i));
            pivot = i;
        }
    }
    if (pivot < 0) return a.norm() <= tol;
    Complex ratio = a(pivot) / b(pivot);
    if (std::abs(std::abs(ratio) - 1.0) > tol) return false;
    ratio /= std::abs(ratio);
    if ((a - ratio * b).cwiseAbs().maxCoeff() > tol) return false;
    if (phase) *phase = ratio;
    return true;
}

}  // namespace paritydistill
