// Basic types, tolerances, error taxonomy, and deterministic random sampling.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace mbscert {

using Cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

namespace tol {
// algorithmic tolerances for internally constructed objects
inline constexpr double kHermitian = 1e-9;
inline constexpr double kPsd = 1e-9;
inline constexpr double kCompleteness = 1e-8;
// transcribed matrices are truncated at print precision
inline constexpr double kPrintedData = 2e-2;
inline constexpr double kZeroEig = 1e-10;
}  // namespace tol

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// input or data problems; CLI maps these to exit code 2
struct ValidationError : Error {
    using Error::Error;
};
// iterative method failed to reach its target; CLI maps these to exit code 3
struct SolverError : Error {
    using Error::Error;
};

struct NonSquareError : ValidationError {
    using ValidationError::ValidationError;
};
struct NonHermitianError : ValidationError {
    using ValidationError::ValidationError;
};
struct SingularInputError : ValidationError {
    using ValidationError::ValidationError;
};
struct IndexOutOfRangeError : ValidationError {
    using ValidationError::ValidationError;
};
struct InvalidDimsError : ValidationError {
    using ValidationError::ValidationError;
};
struct CompletenessViolationError : ValidationError {
    using ValidationError::ValidationError;
};
struct NotRankOneError : ValidationError {
    using ValidationError::ValidationError;
};
struct ShapeMismatchError : ValidationError {
    using ValidationError::ValidationError;
};
struct DimensionMismatchError : ValidationError {
    using ValidationError::ValidationError;
};
struct MissingEntryError : ValidationError {
    using ValidationError::ValidationError;
};
struct EmptySettingError : ValidationError {
    using ValidationError::ValidationError;
};
struct NonpositiveSigmaError : ValidationError {
    using ValidationError::ValidationError;
};
struct ZeroStateError : ValidationError {
    using ValidationError::ValidationError;
};
struct ZeroTransmissionError : ValidationError {
    using ValidationError::ValidationError;
};
struct SolverNotConvergedError : SolverError {
    using SolverError::SolverError;
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw ValidationError(what);
}

inline bool is_square(const Mat& a) { return a.rows() == a.cols(); }

inline bool is_hermitian(const Mat& a, double tolerance = tol::kHermitian) {
    if (!is_square(a)) return false;
    return (a - a.adjoint()).norm() <= tolerance;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic sampler. The standard distribution classes are
// implementation-defined, so normal and Poisson variates are generated
// here directly; identical seeds then give identical streams on any
// platform, which the reproducibility tests rely on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t seed() const { return seed_; }

    // independent stream for a sub-task, stable under task reordering
    Rng substream(std::uint64_t index) const {
        return Rng(splitmix64(seed_ ^ splitmix64(index + 1)));
    }

    double uniform() {  // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double normal() {  // Box-Muller with cached spare
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Cplx complex_normal() {
        double re = normal();
        double im = normal();
        return {re, im};
    }

    // Poisson variate: product method below mean 10, transformed
    // rejection (PTRS) above, so large means stay O(1) per draw.
    long long poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean < 10.0) {
            double limit = std::exp(-mean);
            long long k = 0;
            double prod = uniform();
            while (prod > limit) {
                ++k;
                prod *= uniform();
            }
            return k;
        }
        const double slam = std::sqrt(mean);
        const double loglam = std::log(mean);
        const double b = 0.931 + 2.53 * slam;
        const double a = -0.059 + 0.02483 * b;
        const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
        const double vr = 0.9277 - 3.6224 / (b - 2.0);
        while (true) {
            double u = uniform() - 0.5;
            double v = uniform();
            double us = 0.5 - std::abs(u);
            double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
            if (us >= 0.07 && v <= vr) return static_cast<long long>(kf);
            if (kf < 0.0 || (us < 0.013 && v > us)) continue;
            double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
            double rhs = kf * loglam - mean - std::lgamma(kf + 1.0);
            if (lhs <= rhs) return static_cast<long long>(kf);
        }
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

inline Vec random_ket(int dim, Rng& rng) {
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
    v.normalize();
    return v;
}

// Ginibre + QR with the phase convention that makes the result Haar.
inline Mat haar_unitary(int dim, Rng& rng) {
    Mat g(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = rng.complex_normal();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        Cplx d = r(j, j);
        double m = std::abs(d);
        q.col(j) *= (m > 0) ? (d / m) : Cplx(1, 0);
    }
    return q;
}

}  // namespace mbscert
