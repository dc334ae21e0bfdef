#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "ccnr/error.hpp"
#include "ccnr/matrix.hpp"

namespace ccnr {

/// Thin SVD a = u * diag(s) * vdag with r = min(rows, cols) retained columns.
/// s is sorted descending. Under degenerate singular values only the value
/// list and the reconstruction are contractual, not individual vectors.
struct SvdResult {
    ComplexMatrix u;        // rows x r, orthonormal columns
    std::vector<double> s;  // length r, descending, >= 0
    ComplexMatrix vdag;     // r x cols, orthonormal rows
};

namespace detail {

// Column-major working copy; one-sided Jacobi rotates pairs of columns.
struct ColMat {
    std::size_t rows = 0, cols = 0;
    std::vector<cdouble> d;

    ColMat(std::size_t r, std::size_t c) : rows(r), cols(c), d(r * c) {}

    cdouble* col(std::size_t j) { return d.data() + j * rows; }
    const cdouble* col(std::size_t j) const { return d.data() + j * rows; }
};

inline double col_norm_sq(const ColMat& m, std::size_t j) {
    double s = 0.0;
    const cdouble* c = m.col(j);
    for (std::size_t i = 0; i < m.rows; ++i) s += std::norm(c[i]);
    return s;
}

// Fills the columns flagged false in `keep` with an orthonormal completion:
// a singular value ~0 carries no direction, so any completion satisfies the
// reconstruction contract. Candidates are basis vectors orthogonalized
// against the columns already in place; the best-conditioned one wins.
inline void complete_orthonormal(ColMat& u, std::vector<bool>& keep) {
    const std::size_t m = u.rows, r = u.cols;
    std::vector<cdouble> cand(m), best(m);
    for (std::size_t j = 0; j < r; ++j) {
        if (keep[j]) continue;
        double best_nrm = -1.0;
        for (std::size_t b = 0; b < m; ++b) {
            std::fill(cand.begin(), cand.end(), cdouble{});
            cand[b] = 1.0;
            for (int round = 0; round < 2; ++round) {
                for (std::size_t k = 0; k < r; ++k) {
                    if (!keep[k]) continue;
                    const cdouble* uk = u.col(k);
                    cdouble proj = 0.0;
                    for (std::size_t i = 0; i < m; ++i) proj += std::conj(uk[i]) * cand[i];
                    for (std::size_t i = 0; i < m; ++i) cand[i] -= proj * uk[i];
                }
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < m; ++i) nrm += std::norm(cand[i]);
            nrm = std::sqrt(nrm);
            if (nrm > best_nrm) {
                best_nrm = nrm;
                best = cand;
            }
            if (nrm > 0.7) break;  // comfortably outside the span already
        }
        cdouble* uj = u.col(j);
        for (std::size_t i = 0; i < m; ++i) uj[i] = best[i] / best_nrm;
        keep[j] = true;
    }
}

}  // namespace detail

/// One-sided Jacobi SVD. Column pairs are rotated until every off-diagonal
/// Gram entry satisfies |<a_p,a_q>| <= 1e-13 * ||a_p|| * ||a_q||; sweeps are
/// capped at 100*min(rows,cols) and exceeding the cap throws.
inline SvdResult svd(const ComplexMatrix& a) {
    if (!a.all_finite()) throw error("svd: input has non-finite entries");

    // Jacobi wants tall input; for wide matrices decompose the adjoint and
    // swap the roles of u and v afterwards.
    const bool wide = a.rows() < a.cols();
    const ComplexMatrix& work = wide ? a.adjoint() : a;
    const std::size_t m = wide ? a.cols() : a.rows();
    const std::size_t n = wide ? a.rows() : a.cols();
    const std::size_t r = n;  // r = min of the original shape

    detail::ColMat w(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w.col(j)[i] = wide ? work(i, j) : work(i, j);

    detail::ColMat v(n, n);
    for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;

    constexpr double kPairTol = 1e-13;
    const std::size_t max_sweeps = 100 * std::min(m, n) + 1;

    std::vector<double> alpha(n);
    for (std::size_t j = 0; j < n; ++j) alpha[j] = detail::col_norm_sq(w, j);

    bool converged = (n < 2);
    for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        std::size_t rotations = 0;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cdouble gamma = 0.0;
                cdouble* wp = w.col(p);
                cdouble* wq = w.col(q);
                for (std::size_t i = 0; i < m; ++i) gamma += std::conj(wp[i]) * wq[i];

                const double g = std::abs(gamma);
                if (g <= kPairTol * std::sqrt(alpha[p] * alpha[q])) continue;

                const cdouble phase = gamma / g;
                const double tau = (alpha[q] - alpha[p]) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;

                const cdouble sp = s * phase;
                const cdouble spc = s * std::conj(phase);
                for (std::size_t i = 0; i < m; ++i) {
                    const cdouble x = wp[i], y = wq[i];
                    wp[i] = c * x - spc * y;
                    wq[i] = sp * x + c * y;
                }
                cdouble* vp = v.col(p);
                cdouble* vq = v.col(q);
                for (std::size_t i = 0; i < n; ++i) {
                    const cdouble x = vp[i], y = vq[i];
                    vp[i] = c * x - spc * y;
                    vq[i] = sp * x + c * y;
                }
                alpha[p] = detail::col_norm_sq(w, p);
                alpha[q] = detail::col_norm_sq(w, q);
                ++rotations;
            }
        }
        converged = (rotations == 0);
    }
    if (!converged) throw convergence_error("svd: Jacobi sweeps exceeded cap without converging");

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(detail::col_norm_sq(w, j));

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    const double smax = sigma.empty() ? 0.0 : sigma[order[0]];
    const double drop = 1e-14 * smax;

    detail::ColMat uc(m, r), vc(n, r);
    std::vector<double> s(r);
    std::vector<bool> keep(r, false);
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t j = order[k];
        s[k] = sigma[j];
        std::copy(v.col(j), v.col(j) + n, vc.col(k));
        if (sigma[j] > drop && sigma[j] > 0.0) {
            keep[k] = true;
            const cdouble* wj = w.col(j);
            cdouble* uk = uc.col(k);
            for (std::size_t i = 0; i < m; ++i) uk[i] = wj[i] / sigma[j];
        }
    }
    detail::complete_orthonormal(uc, keep);

    // work = uc * diag(s) * vc^dag; undo the adjoint trick if it was taken.
    SvdResult out{ComplexMatrix(a.rows(), r), std::move(s), ComplexMatrix(r, a.cols())};
    if (!wide) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < r; ++k) out.u(i, k) = uc.col(k)[i];
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < n; ++j) out.vdag(k, j) = std::conj(vc.col(k)[j]);
    } else {
        // a = (a^dag)^dag = vc * diag(s) * uc^dag
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < r; ++k) out.u(i, k) = vc.col(k)[i];
        for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < m; ++j) out.vdag(k, j) = std::conj(uc.col(k)[j]);
    }
    return out;
}

/// Trace norm (nuclear norm): the sum of singular values.
inline double trace_norm(const ComplexMatrix& a) {
    const SvdResult f = svd(a);
    double sum = 0.0;
    for (double x : f.s) sum += x;
    return sum;
}

}  // namespace ccnr
