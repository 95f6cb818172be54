#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "polyps/types.hpp"

namespace polyps {

/// splitmix64 mix; used to derive independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + stream * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic Gaussian source. Box-Muller on top of mt19937_64 so the
/// stream does not depend on the standard library's normal_distribution.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : gen_(seed) {}

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do { u1 = uniform(); } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Complex complex_normal() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

    ComplexVector complex_normal_vector(int n) {
        ComplexVector v(n);
        for (int i = 0; i < n; ++i) v(i) = complex_normal();
        return v;
    }

    Eigen::MatrixXd real_normal_matrix(int rows, int cols) {
        Eigen::MatrixXd M(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i) M(i, j) = normal();
        return M;
    }

private:
    double uniform() {
        return (static_cast<double>(gen_() >> 11)) * 0x1.0p-53;
    }

    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace polyps
