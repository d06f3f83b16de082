#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "pdcrib/errors.hpp"

namespace pdcrib {

struct EigPair {
    double value = 0.0;
    Eigen::VectorXd vector;
};

// Shift-invert subspace iteration for the real eigenvalues of a sparse
// nonsymmetric operator nearest (below) the shift. The guided-mode spectrum
// sits just under sigma = (k0 n_max)^2, well separated from the discretized
// continuum, so plain block iteration with Rayleigh-Ritz converges quickly.
// Deterministic: fixed-seed start block, no threading.
inline std::vector<EigPair> shift_invert_largest(const Eigen::SparseMatrix<double>& A,
                                                 double sigma, int count,
                                                 double rel_tol = 1e-8,
                                                 int max_iter = 400) {
    const int n = int(A.rows());
    const int m = std::min(n, count + 4);

    Eigen::SparseMatrix<double> B = A;
    for (int k = 0; k < n; ++k) B.coeffRef(k, k) -= sigma;
    B.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(B);
    lu.factorize(B);
    if (lu.info() != Eigen::Success)
        throw SolverFailure("shift_invert_largest: LU factorization failed");

    std::mt19937 rng(0x5eed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd V(n, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n; ++i) V(i, j) = gauss(rng);

    Eigen::VectorXd ritz_prev = Eigen::VectorXd::Zero(m);
    Eigen::MatrixXd W(n, m);
    for (int it = 0; it < max_iter; ++it) {
        for (int j = 0; j < m; ++j) W.col(j) = lu.solve(V.col(j));
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(W);
        Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
        // Rayleigh-Ritz on A restricted to span(Q)
        Eigen::MatrixXd AQ(n, m);
        for (int j = 0; j < m; ++j) AQ.col(j) = A * Q.col(j);
        Eigen::MatrixXd H = Q.transpose() * AQ;
        Eigen::EigenSolver<Eigen::MatrixXd> es(H);
        if (es.info() != Eigen::Success)
            throw SolverFailure("shift_invert_largest: dense Ritz eigensolve failed");

        // keep (nearly) real Ritz values, sorted by |1/(theta - sigma)| descending
        std::vector<std::pair<double, int>> order;
        for (int k = 0; k < m; ++k) {
            const auto ev = es.eigenvalues()[k];
            if (std::abs(ev.imag()) > 1e-8 * (std::abs(ev.real()) + 1.0)) continue;
            order.push_back({std::abs(1.0 / (ev.real() - sigma)), k});
        }
        std::sort(order.begin(), order.end(),
                  [](const auto& a, const auto& b) { return a.first > b.first; });

        Eigen::VectorXd ritz = Eigen::VectorXd::Zero(m);
        Eigen::MatrixXd Y(n, m);
        int got = 0;
        for (const auto& [w, k] : order) {
            if (got >= m) break;
            ritz[got] = es.eigenvalues()[k].real();
            Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
            for (int c = 0; c < m; ++c) y += es.eigenvectors().col(k)[c].real() * Q.col(c);
            Y.col(got) = y;
            ++got;
        }
        for (int k = got; k < m; ++k) Y.col(k) = Q.col(k);

        bool converged = got >= std::min(count, m);
        if (converged && it > 0) {
            for (int k = 0; k < std::min(count, got); ++k) {
                const double dv = std::abs(ritz[k] - ritz_prev[k]);
                if (dv > rel_tol * std::abs(ritz[k])) { converged = false; break; }
            }
        } else {
            converged = false;
        }
        if (converged) {
            // residual check on the requested modes
            bool ok = true;
            for (int k = 0; k < std::min(count, got); ++k) {
                const double r = (A * Y.col(k) - ritz[k] * Y.col(k)).norm() /
                                 (std::abs(ritz[k]) * Y.col(k).norm());
                if (r > 1e-7) { ok = false; break; }
            }
            if (ok) {
                std::vector<EigPair> out;
                for (int k = 0; k < std::min(count, got); ++k)
                    out.push_back({ritz[k], Y.col(k).normalized()});
                return out;
            }
        }
        ritz_prev = ritz;
        V = Y;
    }
    throw SolverFailure("shift_invert_largest: subspace iteration did not converge");
}

}  // namespace pdcrib
