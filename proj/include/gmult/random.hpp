#pragma once

#include <cstdint>
#include <random>

#include "gmult/opspace.hpp"

namespace gmult {

// Seeded generator for reproducible instances; every randomized
// operation owns one per call.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01_(engine_);
    }
    std::uint64_t next_seed() { return engine_(); }

    Cplx cnormal() {
        // complex standard normal, E|z|^2 = 1
        return Cplx(normal(), normal()) / std::sqrt(2.0);
    }

    CMatrix gaussian(int rows, int cols) {
        CMatrix out(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) out(r, c) = cnormal();
        return out;
    }

    // Haar-like random unitary from the QR factor of a Gaussian matrix.
    CMatrix unitary(int n);

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform01_{0.0, 1.0};
};

}  // namespace gmult
