// SPDX-License-Identifier: Apache-2.0
//
// Resource states, auxiliary qubits, the Bell basis, and Haar-uniform
// random two-qubit pure states with a reproducible RNG.
#pragma once

#include "entprop/qmat.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace entprop {

inline constexpr double kPi = 3.14159265358979323846;

/// Schmidt angle of the resource |psi> = cos z |00> + sin z |11>.
/// The canonical range is [0, pi/4]; values up to pi/2 are accepted so the
/// z > pi/4 regime can be studied.
struct ResourceParams {
    double z = kPi / 8;

    void validate() const {
        if (!(z >= 0.0 && z <= kPi / 2))
            throw std::invalid_argument("ResourceParams: z outside [0, pi/2]");
    }
};

struct AuxiliaryParams {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi]

    void validate() const {
        if (!(theta >= 0.0 && theta <= kPi))
            throw std::invalid_argument("AuxiliaryParams: theta outside [0, pi]");
        if (!(phi >= 0.0 && phi <= 2 * kPi))
            throw std::invalid_argument("AuxiliaryParams: phi outside [0, 2pi]");
    }
};

struct PureState {
    Vec amplitudes;
    std::vector<int> subsystem_dims;

    double norm() const { return amplitudes.norm(); }
};

inline ComplexMatrix projector(const PureState& psi) {
    Mat m = psi.amplitudes * psi.amplitudes.adjoint();
    return ComplexMatrix(std::move(m), psi.subsystem_dims);
}

inline PureState resource_state(const ResourceParams& rp) {
    rp.validate();
    Vec v = Vec::Zero(4);
    v(0) = std::cos(rp.z);
    v(3) = std::sin(rp.z);
    return PureState{std::move(v), {2, 2}};
}

inline PureState auxiliary_state(const AuxiliaryParams& ap) {
    ap.validate();
    Vec v(2);
    v(0) = std::cos(ap.theta / 2);
    v(1) = std::polar(std::sin(ap.theta / 2), ap.phi);
    return PureState{std::move(v), {2}};
}

/// Bell basis in the paper's ordering:
/// |B1,2> = (|00> +- |11>)/sqrt2, |B3,4> = (|10> +- |01>)/sqrt2.
inline PureState bell_state(int j) {
    if (j < 1 || j > 4)
        throw std::invalid_argument("bell_state: index must be in 1..4");
    const double r = 1.0 / std::sqrt(2.0);
    Vec v = Vec::Zero(4);
    switch (j) {
        case 1: v(0) = r; v(3) = r; break;
        case 2: v(0) = r; v(3) = -r; break;
        case 3: v(2) = r; v(1) = r; break;
        case 4: v(2) = r; v(1) = -r; break;
    }
    return PureState{std::move(v), {2, 2}};
}

/// Deterministic, platform-independent random stream: std::mt19937_64 with a
/// documented 64-bit seed; uniforms via the 53-bit ldexp construction and
/// Gaussians via Box-Muller. No library distributions are used, so streams
/// are bit-identical across standard libraries.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    /// One stream per worker, decorrelated from the master seed.
    static SeededRng for_worker(std::uint64_t master_seed,
                                std::uint64_t worker_index) {
        return SeededRng(splitmix64(master_seed + worker_index));
    }

    double uniform() {  // [0, 1)
        return std::ldexp(static_cast<double>(eng_() >> 11), -53);
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        spare_ = r * std::sin(2 * kPi * u2);
        have_spare_ = true;
        return r * std::cos(2 * kPi * u2);
    }

    std::uint64_t raw() { return eng_(); }

    static std::uint64_t splitmix64(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Haar-uniform two-qubit pure state: four complex amplitudes with real and
/// imaginary parts drawn from the standard normal, then normalized.
inline PureState haar_random_two_qubit(SeededRng& rng) {
    Vec v(4);
    for (int i = 0; i < 4; ++i) {
        const double re = rng.gaussian();
        const double im = rng.gaussian();
        v(i) = Complex(re, im);
    }
    v /= v.norm();
    return PureState{std::move(v), {2, 2}};
}

}  // namespace entprop
