// SPDX-License-Identifier: Apache-2.0
//
// Negativity and the squared-negativity monogamy score.
#pragma once

#include "entprop/protocol.hpp"
#include "entprop/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace entprop {

/// Sum of |negative eigenvalues| of the partial transpose over the given
/// subsystem set. Values below 1e-12 in magnitude are clamped to 0.
inline double negativity(const ComplexMatrix& rho,
                         const std::vector<int>& transpose_sites) {
    if (static_cast<int>(transpose_sites.size()) >= rho.subsystem_count())
        throw std::invalid_argument(
            "negativity: bipartition must be a proper subset");
    ComplexMatrix pt = partial_transpose(rho, transpose_sites);
    double acc = 0.0;
    for (double ev : hermitian_eigenvalues(pt))
        if (ev < 0) acc -= ev;
    return (acc < 1e-12) ? 0.0 : acc;
}

struct MonogamyResult {
    std::string nodal;
    double delta = 0.0;
    double whole_negativity = 0.0;
    std::map<std::string, double> pair_negativities;
};

/// delta = N^2(nodal : rest) - sum_i N^2(nodal, i), pair terms on two-qubit
/// reduced states. The score is signed; no clamping.
inline MonogamyResult monogamy_score(const ComplexMatrix& rho, int nodal,
                                     std::vector<std::string> labels = {}) {
    const int n = rho.subsystem_count();
    if (n < 3)
        throw std::invalid_argument(
            "monogamy_score: need at least 3 subsystems");
    if (nodal < 0 || nodal >= n)
        throw std::invalid_argument("monogamy_score: invalid nodal site");
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));

    MonogamyResult res;
    res.nodal = labels[nodal];
    res.whole_negativity = negativity(rho, {nodal});
    res.delta = res.whole_negativity * res.whole_negativity;
    for (int i = 0; i < n; ++i) {
        if (i == nodal) continue;
        ComplexMatrix pair = partial_trace(rho, {nodal, i});
        const double nn = negativity(pair, {nodal < i ? 0 : 1});
        res.pair_negativities[labels[i]] = nn;
        res.delta -= nn * nn;
    }
    return res;
}

inline MonogamyResult monogamy_score(const BranchResult& branch,
                                     const std::string& nodal_label) {
    const auto it = std::find(branch.labels.begin(), branch.labels.end(),
                              nodal_label);
    if (it == branch.labels.end())
        throw std::invalid_argument("monogamy_score: unknown label " +
                                    nodal_label);
    return monogamy_score(branch.state,
                          static_cast<int>(it - branch.labels.begin()),
                          branch.labels);
}

/// Probability-weighted mean of the branch monogamy scores; degenerate
/// branches contribute 0.
inline double average_monogamy(const std::vector<BranchResult>& branches,
                               const std::string& nodal_label) {
    if (branches.empty())
        throw std::invalid_argument("average_monogamy: empty branch list");
    double acc = 0.0;
    for (const auto& b : branches) {
        if (b.degenerate) continue;
        acc += b.probability * monogamy_score(b, nodal_label).delta;
    }
    return acc;
}

}  // namespace entprop
