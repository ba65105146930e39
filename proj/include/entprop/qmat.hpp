// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra over multi-qubit Hilbert spaces: tensor
// products, partial trace, partial transpose, Hermitian eigenvalues.
//
// Subsystem layout is big-endian throughout: the basis index of
// |b_0 b_1 ... b_{k-1}> is sum_i b_i * 2^(k-1-i), so subsystem 0 is the
// most significant digit. All modules share this convention.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace entprop {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

/// Dense square complex matrix carrying the tensor-factor structure of the
/// Hilbert space it acts on.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    ComplexMatrix(Mat entries, std::vector<int> subsystem_dims)
        : entries_(std::move(entries)), dims_(std::move(subsystem_dims)) {
        const long expect = std::accumulate(dims_.begin(), dims_.end(), 1L,
                                            std::multiplies<long>());
        if (entries_.rows() != entries_.cols() || entries_.rows() != expect) {
            throw std::invalid_argument(
                "ComplexMatrix: entries must be square with dim = product of "
                "subsystem dims");
        }
    }

    static ComplexMatrix identity(const std::vector<int>& dims) {
        const long d = std::accumulate(dims.begin(), dims.end(), 1L,
                                       std::multiplies<long>());
        return ComplexMatrix(Mat::Identity(d, d), dims);
    }

    int dim() const { return static_cast<int>(entries_.rows()); }
    int subsystem_count() const { return static_cast<int>(dims_.size()); }
    const std::vector<int>& subsystem_dims() const { return dims_; }
    const Mat& entries() const { return entries_; }
    Mat& entries() { return entries_; }

    Complex operator()(int i, int j) const { return entries_(i, j); }
    double trace_real() const { return entries_.trace().real(); }

private:
    Mat entries_;
    std::vector<int> dims_;
};

namespace detail {

inline std::vector<long> strides_of(const std::vector<int>& dims) {
    std::vector<long> s(dims.size(), 1);
    for (int k = static_cast<int>(dims.size()) - 2; k >= 0; --k)
        s[k] = s[k + 1] * dims[k + 1];
    return s;
}

inline void check_sites(const std::vector<int>& sites, int count,
                        const char* who) {
    if (sites.empty())
        throw std::invalid_argument(std::string(who) + ": empty site set");
    std::vector<bool> seen(count, false);
    for (int s : sites) {
        if (s < 0 || s >= count)
            throw std::invalid_argument(std::string(who) +
                                        ": site index out of range");
        if (seen[s])
            throw std::invalid_argument(std::string(who) +
                                        ": duplicate site index");
        seen[s] = true;
    }
}

}  // namespace detail

/// Kronecker product; subsystem dims concatenate.
inline ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Mat& A = a.entries();
    const Mat& B = b.entries();
    Mat out(A.rows() * B.rows(), A.cols() * B.cols());
    for (long i = 0; i < A.rows(); ++i)
        for (long j = 0; j < A.cols(); ++j)
            out.block(i * B.rows(), j * B.cols(), B.rows(), B.cols()) =
                A(i, j) * B;
    std::vector<int> dims = a.subsystem_dims();
    dims.insert(dims.end(), b.subsystem_dims().begin(),
                b.subsystem_dims().end());
    return ComplexMatrix(std::move(out), std::move(dims));
}

/// Reduced matrix on the kept subsystems (ascending original order).
inline ComplexMatrix partial_trace(const ComplexMatrix& rho,
                                   const std::vector<int>& keep) {
    const auto& dims = rho.subsystem_dims();
    const int n = rho.subsystem_count();
    detail::check_sites(keep, n, "partial_trace");

    std::vector<int> kept = keep;
    std::sort(kept.begin(), kept.end());
    std::vector<int> traced;
    {
        std::vector<bool> is_kept(n, false);
        for (int s : kept) is_kept[s] = true;
        for (int s = 0; s < n; ++s)
            if (!is_kept[s]) traced.push_back(s);
    }

    const auto stride = detail::strides_of(dims);
    std::vector<int> kdims, tdims;
    for (int s : kept) kdims.push_back(dims[s]);
    for (int s : traced) tdims.push_back(dims[s]);
    const long kd = std::accumulate(kdims.begin(), kdims.end(), 1L,
                                    std::multiplies<long>());
    const long td = std::accumulate(tdims.begin(), tdims.end(), 1L,
                                    std::multiplies<long>());
    const auto kstride = detail::strides_of(kdims);
    const auto tstride = detail::strides_of(tdims);

    auto full_index = [&](long kidx, long tidx) {
        long idx = 0;
        for (std::size_t a = 0; a < kept.size(); ++a)
            idx += ((kidx / kstride[a]) % kdims[a]) * stride[kept[a]];
        for (std::size_t a = 0; a < traced.size(); ++a)
            idx += ((tidx / tstride[a]) % tdims[a]) * stride[traced[a]];
        return idx;
    };

    Mat out = Mat::Zero(kd, kd);
    for (long i = 0; i < kd; ++i)
        for (long j = 0; j < kd; ++j) {
            Complex acc = 0.0;
            for (long t = 0; t < td; ++t)
                acc += rho.entries()(full_index(i, t), full_index(j, t));
            out(i, j) = acc;
        }
    return ComplexMatrix(std::move(out), std::move(kdims));
}

/// Transpose applied on the designated subsystems only.
inline ComplexMatrix partial_transpose(const ComplexMatrix& rho,
                                       const std::vector<int>& sites) {
    const auto& dims = rho.subsystem_dims();
    const int n = rho.subsystem_count();
    detail::check_sites(sites, n, "partial_transpose");
    std::vector<bool> flip(n, false);
    for (int s : sites) flip[s] = true;

    const auto stride = detail::strides_of(dims);
    const long d = rho.dim();
    Mat out(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            long ii = 0, jj = 0;
            for (int s = 0; s < n; ++s) {
                const long ci = (i / stride[s]) % dims[s];
                const long cj = (j / stride[s]) % dims[s];
                ii += (flip[s] ? cj : ci) * stride[s];
                jj += (flip[s] ? ci : cj) * stride[s];
            }
            out(ii, jj) = rho.entries()(i, j);
        }
    return ComplexMatrix(std::move(out), dims);
}

/// Reorder subsystems: new position k holds old subsystem perm[k].
inline ComplexMatrix permute_subsystems(const ComplexMatrix& rho,
                                        const std::vector<int>& perm) {
    const auto& dims = rho.subsystem_dims();
    const int n = rho.subsystem_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permute_subsystems: size mismatch");
    detail::check_sites(perm, n, "permute_subsystems");

    std::vector<int> ndims(n);
    for (int k = 0; k < n; ++k) ndims[k] = dims[perm[k]];
    const auto ostride = detail::strides_of(dims);
    const auto nstride = detail::strides_of(ndims);
    const long d = rho.dim();

    std::vector<long> map(d);
    for (long i = 0; i < d; ++i) {
        long ni = 0;
        for (int k = 0; k < n; ++k)
            ni += ((i / ostride[perm[k]]) % dims[perm[k]]) * nstride[k];
        map[i] = ni;
    }
    Mat out(d, d);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) out(map[i], map[j]) = rho.entries()(i, j);
    return ComplexMatrix(std::move(out), std::move(ndims));
}

/// All real eigenvalues, ascending. The input is symmetrized when the
/// Hermiticity residual is at most 1e-8; a larger residual is an error.
inline std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    const Mat& H = h.entries();
    const double resid = (H - H.adjoint()).cwiseAbs().maxCoeff();
    if (resid > 1e-8)
        throw std::invalid_argument(
            "hermitian_eigenvalues: input is not Hermitian (residual " +
            std::to_string(resid) + ")");
    Mat sym = 0.5 * (H + H.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> solver(sym,
                                              Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

/// Eigenvalues (ascending) and matching orthonormal eigenvectors.
inline std::pair<std::vector<double>, Mat> hermitian_eigensystem(
    const ComplexMatrix& h) {
    const Mat& H = h.entries();
    const double resid = (H - H.adjoint()).cwiseAbs().maxCoeff();
    if (resid > 1e-8)
        throw std::invalid_argument("hermitian_eigensystem: not Hermitian");
    Mat sym = 0.5 * (H + H.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
    const auto& ev = solver.eigenvalues();
    return {std::vector<double>(ev.data(), ev.data() + ev.size()),
            solver.eigenvectors()};
}

struct DensityCheck {
    double trace_error = 0.0;
    double hermiticity_error = 0.0;
    double min_eigenvalue = 0.0;
    bool ok = false;
};

/// Density-matrix validity: trace 1 within 1e-10, Hermitian within 1e-10,
/// min eigenvalue >= -1e-9.
inline DensityCheck check_density(const ComplexMatrix& rho) {
    DensityCheck c;
    c.trace_error = std::abs(rho.entries().trace() - Complex(1.0, 0.0));
    c.hermiticity_error =
        (rho.entries() - rho.entries().adjoint()).cwiseAbs().maxCoeff();
    if (c.hermiticity_error <= 1e-8) {
        auto ev = hermitian_eigenvalues(rho);
        c.min_eigenvalue = ev.front();
    } else {
        c.min_eigenvalue = -1.0;
    }
    c.ok = c.trace_error <= 1e-10 && c.hermiticity_error <= 1e-10 &&
           c.min_eigenvalue >= -1e-9;
    return c;
}

/// Full-space embedding of a single-qubit operator at `site`.
inline Mat embed_single_qubit_op(const Mat& op2, int n_qubits, int site) {
    if (site < 0 || site >= n_qubits)
        throw std::invalid_argument("embed_single_qubit_op: bad site");
    const long d = 1L << n_qubits;
    const int shift = n_qubits - 1 - site;
    Mat out = Mat::Zero(d, d);
    for (long i = 0; i < d; ++i) {
        const long bi = (i >> shift) & 1;
        for (long bj = 0; bj < 2; ++bj) {
            const Complex v = op2(bi, bj);
            if (v == Complex(0.0, 0.0)) continue;
            const long j = (i & ~(1L << shift)) | (bj << shift);
            out(i, j) = v;
        }
    }
    return out;
}

/// Full-space embedding of a two-qubit operator on the ordered pair
/// (site_a, site_b); site_a is the first tensor factor of op4.
inline Mat embed_two_qubit_op(const Mat& op4, int n_qubits, int site_a,
                              int site_b) {
    if (site_a == site_b)
        throw std::invalid_argument("embed_two_qubit_op: duplicate sites");
    if (site_a < 0 || site_a >= n_qubits || site_b < 0 || site_b >= n_qubits)
        throw std::invalid_argument("embed_two_qubit_op: bad site");
    const long d = 1L << n_qubits;
    const int sa = n_qubits - 1 - site_a;
    const int sb = n_qubits - 1 - site_b;
    const long mask = ~((1L << sa) | (1L << sb));
    Mat out = Mat::Zero(d, d);
    for (long i = 0; i < d; ++i) {
        const long ra = (i >> sa) & 1, rb = (i >> sb) & 1;
        const long rest = i & mask;
        for (long ca = 0; ca < 2; ++ca)
            for (long cb = 0; cb < 2; ++cb) {
                const Complex v = op4(2 * ra + rb, 2 * ca + cb);
                if (v == Complex(0.0, 0.0)) continue;
                const long j = rest | (ca << sa) | (cb << sb);
                out(i, j) = v;
            }
    }
    return out;
}

}  // namespace entprop
