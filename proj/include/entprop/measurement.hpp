// SPDX-License-Identifier: Apache-2.0
//
// Unsharp Bell-basis measurement. The POVM element for outcome j is
// M_j = lambda P_j + (1-lambda) I/4 with P_j the j-th Bell projector; the
// state-update (measurement) operator is its positive square root,
// sqrt((1+3l)/4) P_j + sqrt((1-l)/4)(I - P_j). This is the unique reading
// that reproduces the coefficient relation L2 = sqrt(L1*L3) and satisfies
// sum M^dag M = I.
#pragma once

#include "entprop/qmat.hpp"
#include "entprop/states.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace entprop {

/// Outcome-coefficient matrix m[j][k] (outcome j, Bell index k) of Eq.-2
/// form. The canonical single-parameter family has m[j][j] = (1+3l)/4 and
/// m[j][k] = (1-l)/4 otherwise; other probability assignments may be
/// injected for non-canonical families.
struct UnsharpBellMeasurement {
    double lambda = 0.0;
    std::array<std::array<double, 4>, 4> m{};

    static UnsharpBellMeasurement canonical(double lambda) {
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw std::invalid_argument("unsharpness outside [0, 1]");
        UnsharpBellMeasurement u;
        u.lambda = lambda;
        const double diag = (1 + 3 * lambda) / 4;
        const double off = (1 - lambda) / 4;
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) u.m[j][k] = (j == k) ? diag : off;
        return u;
    }
};

struct MeasurementOutcome {
    int index = 1;  // 1..4
    double probability = 0.0;
};

inline Mat bell_projector(int j) {
    const Vec b = bell_state(j).amplitudes;
    return b * b.adjoint();
}

inline std::array<ComplexMatrix, 4> povm_elements(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw std::invalid_argument("povm_elements: lambda outside [0, 1]");
    std::array<ComplexMatrix, 4> out;
    const Mat I4 = Mat::Identity(4, 4);
    for (int j = 1; j <= 4; ++j)
        out[j - 1] = ComplexMatrix(lambda * bell_projector(j) +
                                       (1 - lambda) * I4 / 4.0,
                                   {2, 2});
    return out;
}

/// Positive square roots of the POVM elements, built from the general
/// coefficient matrix: M_j = sum_k sqrt(m[j][k]) P_k.
inline std::array<ComplexMatrix, 4> measurement_operators(
    const UnsharpBellMeasurement& u) {
    std::array<ComplexMatrix, 4> out;
    for (int j = 0; j < 4; ++j) {
        Mat acc = Mat::Zero(4, 4);
        for (int k = 0; k < 4; ++k) {
            if (u.m[j][k] < 0)
                throw std::invalid_argument("measurement coefficients < 0");
            acc += std::sqrt(u.m[j][k]) * bell_projector(k + 1);
        }
        out[j] = ComplexMatrix(std::move(acc), {2, 2});
    }
    return out;
}

inline std::array<ComplexMatrix, 4> measurement_operators(double lambda) {
    return measurement_operators(UnsharpBellMeasurement::canonical(lambda));
}

/// Returns M rho M^dag (op embedded on the ordered qubit pair) and its
/// trace; the caller normalizes for post-selection.
inline std::pair<ComplexMatrix, double> apply_measurement(
    const ComplexMatrix& rho, const ComplexMatrix& op, int site_a,
    int site_b) {
    if (op.dim() != 4)
        throw std::invalid_argument("apply_measurement: operator must be 4x4");
    const int n = rho.subsystem_count();
    if (site_a == site_b || site_a < 0 || site_b < 0 || site_a >= n ||
        site_b >= n)
        throw std::invalid_argument("apply_measurement: invalid site pair");
    Mat full = embed_two_qubit_op(op.entries(), n, site_a, site_b);
    Mat res = full * rho.entries() * full.adjoint();
    const double prob = res.trace().real();
    return {ComplexMatrix(std::move(res), rho.subsystem_dims()), prob};
}

}  // namespace entprop
