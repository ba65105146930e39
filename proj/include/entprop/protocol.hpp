// SPDX-License-Identifier: Apache-2.0
//
// Unidirectional and bidirectional entanglement-propagation protocols.
// Global qubit ordering is fixed as (A, A1..Am, B, B1..Bn); round i on the
// B side measures the pair (B_{i-1}, B_i) with B0 = B, and likewise on the
// A side. B-side rounds execute first, then A-side (the two side blocks act
// on disjoint pairs, so the order is physically irrelevant; a test asserts
// this).
#pragma once

#include "entprop/channels.hpp"
#include "entprop/measurement.hpp"
#include "entprop/qmat.hpp"
#include "entprop/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace entprop {

enum class Scheme { Unidirectional, Bidirectional };

inline std::string to_string(Scheme s) {
    return s == Scheme::Unidirectional ? "unidirectional" : "bidirectional";
}

inline Scheme scheme_from_string(const std::string& s) {
    if (s == "unidirectional") return Scheme::Unidirectional;
    if (s == "bidirectional") return Scheme::Bidirectional;
    throw std::invalid_argument("unknown scheme: " + s);
}

struct ProtocolSpec {
    Scheme scheme = Scheme::Unidirectional;
    int rounds_b = 1;  // n
    int rounds_a = 0;  // m; 0 for unidirectional
    double lambda_b = 0.5;
    double lambda_a = 0.5;
    std::vector<AuxiliaryParams> aux_b;  // length rounds_b
    std::vector<AuxiliaryParams> aux_a;  // length rounds_a

    ResourceParams resource{};
    NoisePlacement placement = NoisePlacement::None;
    ChannelKind channel = ChannelKind::Identity;
    double p = 0.0;
    std::optional<ComplexMatrix> explicit_resource;  // Haar studies

    int max_qubits = 6;

    int total_qubits() const { return 2 + rounds_b + rounds_a; }
    int site_a() const { return 0; }
    int site_b() const { return rounds_a + 1; }

    std::vector<std::string> site_labels() const {
        std::vector<std::string> labels;
        labels.push_back("A");
        for (int j = 1; j <= rounds_a; ++j)
            labels.push_back("A" + std::to_string(j));
        labels.push_back("B");
        for (int i = 1; i <= rounds_b; ++i)
            labels.push_back("B" + std::to_string(i));
        return labels;
    }

    void validate() const {
        if (rounds_b < 0 || rounds_a < 0)
            throw std::invalid_argument("ProtocolSpec: negative round count");
        if (scheme == Scheme::Unidirectional && rounds_a != 0)
            throw std::invalid_argument(
                "ProtocolSpec: unidirectional requires m = 0");
        if (static_cast<int>(aux_b.size()) != rounds_b ||
            static_cast<int>(aux_a.size()) != rounds_a)
            throw std::invalid_argument(
                "ProtocolSpec: auxiliary list lengths must match round counts");
        if (!(lambda_b >= 0 && lambda_b <= 1 && lambda_a >= 0 && lambda_a <= 1))
            throw std::invalid_argument("ProtocolSpec: lambda outside [0, 1]");
        if (total_qubits() > max_qubits)
            throw std::length_error(
                "ProtocolSpec: " + std::to_string(total_qubits()) +
                " qubits exceeds capacity of " + std::to_string(max_qubits) +
                " (dense 2^q x 2^q complex state)");
        if (!explicit_resource) resource.validate();
        for (const auto& a : aux_b) a.validate();
        for (const auto& a : aux_a) a.validate();
    }
};

/// One outcome string's result. `outcomes` lists the B-side string l then
/// the A-side string k; `probability` is the cumulative branch probability.
struct BranchResult {
    std::vector<int> outcomes;
    double probability = 0.0;
    ComplexMatrix state;  // normalized; undefined when degenerate
    bool degenerate = false;
    std::vector<std::string> labels;
};

enum class SideOrder { BThenA, AThenB };

namespace detail {

inline ComplexMatrix initial_product_state(const ProtocolSpec& spec) {
    ComplexMatrix rho_ab =
        spec.explicit_resource
            ? prepare_resource(*spec.explicit_resource, spec.placement,
                               spec.channel, spec.p)
            : prepare_resource(spec.resource, spec.placement, spec.channel,
                               spec.p);
    // Build as (A, B, A1..Am, B1..Bn), then permute to (A, A1..Am, B, B1..Bn).
    ComplexMatrix full = rho_ab;
    for (const auto& a : spec.aux_a)
        full = tensor(full, projector(auxiliary_state(a)));
    for (const auto& b : spec.aux_b)
        full = tensor(full, projector(auxiliary_state(b)));
    const int m = spec.rounds_a, n = spec.rounds_b;
    std::vector<int> perm;
    perm.push_back(0);
    for (int j = 1; j <= m; ++j) perm.push_back(1 + j);
    perm.push_back(1);
    for (int i = 1; i <= n; ++i) perm.push_back(1 + m + i);
    return permute_subsystems(full, perm);
}

}  // namespace detail

inline BranchResult run_branch(const ProtocolSpec& spec,
                               const std::vector<int>& outcomes,
                               SideOrder order = SideOrder::BThenA) {
    spec.validate();
    const int n = spec.rounds_b, m = spec.rounds_a;
    if (static_cast<int>(outcomes.size()) != n + m)
        throw std::invalid_argument("run_branch: outcome string length != n+m");
    for (int o : outcomes)
        if (o < 1 || o > 4)
            throw std::invalid_argument("run_branch: outcome must be in 1..4");

    ComplexMatrix state = detail::initial_product_state(spec);
    const auto ops_b = measurement_operators(spec.lambda_b);
    const auto ops_a = measurement_operators(spec.lambda_a);

    auto b_rounds = [&] {
        for (int i = 1; i <= n; ++i) {
            const int s0 = spec.site_b() + i - 1, s1 = spec.site_b() + i;
            state = apply_measurement(state, ops_b[outcomes[i - 1] - 1], s0, s1)
                        .first;
        }
    };
    auto a_rounds = [&] {
        for (int j = 1; j <= m; ++j) {
            const int s0 = j - 1, s1 = j;
            state = apply_measurement(state, ops_a[outcomes[n + j - 1] - 1],
                                      s0, s1)
                        .first;
        }
    };
    if (order == SideOrder::BThenA) {
        b_rounds();
        a_rounds();
    } else {
        a_rounds();
        b_rounds();
    }

    BranchResult res;
    res.outcomes = outcomes;
    res.labels = spec.site_labels();
    const double prob = state.trace_real();
    if (prob < 1e-14) {
        res.degenerate = true;
        res.probability = 0.0;
        return res;
    }
    res.probability = prob;
    state.entries() /= prob;
    res.state = std::move(state);
    return res;
}

/// All 4^(n+m) outcome strings, last outcome varying fastest.
inline std::vector<BranchResult> enumerate_branches(const ProtocolSpec& spec) {
    const int rounds = spec.rounds_b + spec.rounds_a;
    if (rounds > 4)
        throw std::length_error(
            "enumerate_branches: n+m = " + std::to_string(rounds) +
            " exceeds the enumeration bound of 4 (4^(n+m) branches)");
    spec.validate();
    std::size_t count = 1;
    for (int i = 0; i < rounds; ++i) count *= 4;
    std::vector<BranchResult> out;
    out.reserve(count);
    std::vector<int> o(rounds, 1);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rem = idx;
        for (int k = rounds - 1; k >= 0; --k) {
            o[k] = 1 + static_cast<int>(rem % 4);
            rem /= 4;
        }
        out.push_back(run_branch(spec, o));
    }
    return out;
}

inline std::vector<int> all_threes(const ProtocolSpec& spec) {
    return std::vector<int>(spec.rounds_b + spec.rounds_a, 3);
}

inline ComplexMatrix post_select(const ProtocolSpec& spec,
                                 const std::vector<int>& outcomes) {
    BranchResult r = run_branch(spec, outcomes);
    if (r.degenerate)
        throw std::domain_error("post_select: zero-probability branch");
    return r.state;
}

}  // namespace entprop
