// SPDX-License-Identifier: Apache-2.0
//
// Kraus-operator noise channels (ADC, PDC, DPC) and their local application
// to designated qubits.
#pragma once

#include "entprop/qmat.hpp"
#include "entprop/states.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace entprop {

enum class ChannelKind { Identity, ADC, PDC, DPC };
enum class NoisePlacement { None, OnA, OnB, OnBoth };

inline std::string to_string(ChannelKind k) {
    switch (k) {
        case ChannelKind::Identity: return "none";
        case ChannelKind::ADC: return "adc";
        case ChannelKind::PDC: return "pdc";
        case ChannelKind::DPC: return "dpc";
    }
    return "?";
}

inline ChannelKind channel_from_string(const std::string& s) {
    if (s == "none") return ChannelKind::Identity;
    if (s == "adc") return ChannelKind::ADC;
    if (s == "pdc") return ChannelKind::PDC;
    if (s == "dpc") return ChannelKind::DPC;
    throw std::invalid_argument("unknown channel kind: " + s);
}

inline std::string to_string(NoisePlacement pl) {
    switch (pl) {
        case NoisePlacement::None: return "none";
        case NoisePlacement::OnA: return "a";
        case NoisePlacement::OnB: return "b";
        case NoisePlacement::OnBoth: return "both";
    }
    return "?";
}

inline NoisePlacement placement_from_string(const std::string& s) {
    if (s == "none") return NoisePlacement::None;
    if (s == "a") return NoisePlacement::OnA;
    if (s == "b") return NoisePlacement::OnB;
    if (s == "both") return NoisePlacement::OnBoth;
    throw std::invalid_argument("unknown placement: " + s);
}

struct KrausChannel {
    ChannelKind kind = ChannelKind::Identity;
    double p = 0.0;
    std::vector<Mat> ops;  // 2x2 Kraus operators
};

namespace detail {
inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_y() {
    Mat m(2, 2);
    m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    return m;
}
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
}  // namespace detail

inline KrausChannel make_channel(ChannelKind kind, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("make_channel: p outside [0, 1]");
    KrausChannel ch{kind, p, {}};
    const Mat I = Mat::Identity(2, 2);
    switch (kind) {
        case ChannelKind::Identity:
            ch.ops = {I};
            break;
        case ChannelKind::ADC: {
            Mat k0(2, 2), k1(2, 2);
            k0 << 1, 0, 0, std::sqrt(1.0 - p);
            k1 << 0, std::sqrt(p), 0, 0;
            ch.ops = {k0, k1};
            break;
        }
        case ChannelKind::PDC:
            ch.ops = {std::sqrt(1.0 - p / 2) * I,
                      std::sqrt(p / 2) * detail::pauli_z()};
            break;
        case ChannelKind::DPC:
            ch.ops = {std::sqrt(1.0 - 3 * p / 4) * I,
                      std::sqrt(p / 4) * detail::pauli_x(),
                      std::sqrt(p / 4) * detail::pauli_y(),
                      std::sqrt(p / 4) * detail::pauli_z()};
            break;
    }
    return ch;
}

/// Completeness residual max|sum K_i^dag K_i - I|.
inline double completeness_residual(const KrausChannel& ch) {
    Mat acc = Mat::Zero(2, 2);
    for (const Mat& k : ch.ops) acc += k.adjoint() * k;
    return (acc - Mat::Identity(2, 2)).cwiseAbs().maxCoeff();
}

/// sum_i (I x..x K_i x..x I) rho (...)^dag on the given qubit.
inline ComplexMatrix apply_local(const ComplexMatrix& rho,
                                 const KrausChannel& ch, int site) {
    const int n = rho.subsystem_count();
    if (site < 0 || site >= n)
        throw std::invalid_argument("apply_local: invalid site");
    Mat out = Mat::Zero(rho.dim(), rho.dim());
    for (const Mat& k : ch.ops) {
        Mat full = embed_single_qubit_op(k, n, site);
        out += full * rho.entries() * full.adjoint();
    }
    return ComplexMatrix(std::move(out), rho.subsystem_dims());
}

/// Channel(s) applied per placement to an explicit two-qubit state
/// (site 0 = A, site 1 = B). OnBoth applies A then B; local channels on
/// disjoint sites commute.
inline ComplexMatrix prepare_resource(const ComplexMatrix& two_qubit,
                                      NoisePlacement placement,
                                      ChannelKind kind, double p_a,
                                      double p_b) {
    if (two_qubit.subsystem_count() != 2)
        throw std::invalid_argument("prepare_resource: need a 2-qubit state");
    ComplexMatrix rho = two_qubit;
    if (placement == NoisePlacement::OnA || placement == NoisePlacement::OnBoth)
        rho = apply_local(rho, make_channel(kind, p_a), 0);
    if (placement == NoisePlacement::OnB || placement == NoisePlacement::OnBoth)
        rho = apply_local(rho, make_channel(kind, p_b), 1);
    return rho;
}

inline ComplexMatrix prepare_resource(const ComplexMatrix& two_qubit,
                                      NoisePlacement placement,
                                      ChannelKind kind, double p) {
    return prepare_resource(two_qubit, placement, kind, p, p);
}

inline ComplexMatrix prepare_resource(const ResourceParams& rp,
                                      NoisePlacement placement,
                                      ChannelKind kind, double p) {
    return prepare_resource(projector(resource_state(rp)), placement, kind, p);
}

}  // namespace entprop
