#pragma once

#include "eigencone/matrix.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace eigencone {

inline uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * Counter-split random stream: the state for (seed, stream) is a pure
 * function of both, so sample i of a run can be generated on any worker in
 * any order and still produce identical output. Each stream then advances
 * as a splitmix64 sequence.
 */
class SampleRng {
public:
    SampleRng(uint64_t seed, uint64_t stream)
        : state_(mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^
                       mix64(stream + 0xD1B54A32D192ED03ULL))) {}

    uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller, one spare cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform point on the unit sphere of R^n (normalized gaussians).
    std::vector<double> unit_vector(int n) {
        std::vector<double> v(static_cast<size_t>(n));
        while (true) {
            for (auto& c : v) c = gaussian();
            const double nv = norm(v);
            if (nv > 1e-6) {
                for (auto& c : v) c /= nv;
                return v;
            }
        }
    }

    /**
     * Haar-distributed element of O(n): QR of a gaussian matrix via
     * modified Gram-Schmidt with the R diagonal sign-fixed positive,
     * composed with a coin-flip reflection of the first coordinate so both
     * components of O(n) appear.
     */
    Matrix haar_orthogonal(int n) {
        while (true) {
            Matrix g(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) g(i, j) = gaussian();
            if (try_orthonormalize(g, n)) {
                if (uniform01() < 0.5)
                    for (int j = 0; j < n; ++j) g(0, j) = -g(0, j);
                return g;
            }
        }
    }

private:
    // column-wise MGS with one re-orthogonalization pass; false on a
    // (measure-zero) near-singular draw
    static bool try_orthonormalize(Matrix& g, int n) {
        for (int j = 0; j < n; ++j) {
            for (int pass = 0; pass < 2; ++pass) {
                for (int k = 0; k < j; ++k) {
                    double d = 0.0;
                    for (int i = 0; i < n; ++i) d += g(i, k) * g(i, j);
                    for (int i = 0; i < n; ++i) g(i, j) -= d * g(i, k);
                }
            }
            double nn = 0.0;
            for (int i = 0; i < n; ++i) nn += g(i, j) * g(i, j);
            nn = std::sqrt(nn);
            if (nn < 1e-9) return false;
            for (int i = 0; i < n; ++i) g(i, j) /= nn;
        }
        return true;
    }

    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace eigencone
