#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "bosp/core/errors.hpp"
#include "bosp/projected/dense_kernels.hpp"
#include "bosp/projected/projected_lrep.hpp"

namespace bosp {

// Hessenberg + QR via Eigen on the full 2d x 2d block matrix. Test-support
// path only; the production solver never calls this.
SmallEigenSolution dense_lrep_oracle(const DenseMatrix& khat, const DenseMatrix& mhat) {
    const std::size_t d = khat.rows();
    if (khat.cols() != d || mhat.rows() != d || mhat.cols() != d)
        throw ContractViolation("dense_lrep_oracle: blocks must be square of equal size");

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(2 * d, 2 * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            h(i, d + j) = khat(i, j);
            h(d + i, j) = mhat(i, j);
        }

    Eigen::EigenSolver<Eigen::MatrixXd> es(h, /*computeEigenvectors=*/true);
    if (es.info() != Eigen::Success)
        throw Error("dense_lrep_oracle: eigensolver failed to converge");

    const auto& evals = es.eigenvalues();
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());

    struct Pair {
        double lambda;
        Eigen::VectorXd y, x;
    };
    std::vector<Pair> pairs;
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
        const std::complex<double> lam = evals(i);
        if (std::fabs(lam.imag()) > 1e-9 * scale) continue;
        // Jordan blocks at 0 perturb into eigenvalue dust of size
        // ~sqrt(eps)*scale, so the positivity cut sits well above that
        if (lam.real() <= 1e-7 * scale) continue;

        Eigen::VectorXcd vec = es.eigenvectors().col(i);
        // a real eigenvalue admits a real eigenvector up to complex scaling
        Eigen::VectorXd re = vec.real();
        Eigen::VectorXd im = vec.imag();
        Eigen::VectorXd v = (re.norm() >= im.norm()) ? re : im;
        if (v.norm() == 0.0) continue;

        Pair p;
        p.lambda = lam.real();
        p.y = v.head(d);
        p.x = v.tail(d);
        pairs.push_back(std::move(p));
    }

    std::sort(pairs.begin(), pairs.end(),
              [](const Pair& a, const Pair& b) { return a.lambda < b.lambda; });

    // biorthonormalize: clusters of equal eigenvalues get a joint Gram solve,
    // simple eigenvalues are biorthogonal already (eigenvalue pairing lemma)
    const std::size_t k = pairs.size();
    std::size_t start = 0;
    while (start < k) {
        std::size_t stop = start + 1;
        while (stop < k &&
               std::fabs(pairs[stop].lambda - pairs[start].lambda) <=
                   1e-8 * std::max(1.0, std::fabs(pairs[start].lambda)))
            ++stop;
        const std::size_t m = stop - start;
        if (m == 1) {
            Pair& p = pairs[start];
            const double eta = p.x.dot(p.y);
            if (eta == 0.0)
                throw Error("dense_lrep_oracle: defective eigenvector pairing");
            const double s = 1.0 / std::sqrt(std::fabs(eta));
            const double sgn = eta < 0.0 ? -1.0 : 1.0;
            p.x *= sgn * s;
            p.y *= s;
        } else {
            Eigen::MatrixXd xc(d, m), yc(d, m);
            for (std::size_t j = 0; j < m; ++j) {
                xc.col(j) = pairs[start + j].x;
                yc.col(j) = pairs[start + j].y;
            }
            Eigen::MatrixXd g = xc.transpose() * yc;
            yc = yc * g.inverse();
            for (std::size_t j = 0; j < m; ++j) {
                pairs[start + j].x = xc.col(j);
                pairs[start + j].y = yc.col(j);
            }
        }
        start = stop;
    }

    SmallEigenSolution sol;
    sol.lambdas.resize(k);
    sol.xhat = DenseMatrix(d, k);
    sol.yhat = DenseMatrix(d, k);
    for (std::size_t j = 0; j < k; ++j) {
        sol.lambdas[j] = pairs[j].lambda;
        for (std::size_t i = 0; i < d; ++i) {
            sol.xhat(i, j) = pairs[j].x(i);
            sol.yhat(i, j) = pairs[j].y(i);
        }
    }
    return sol;
}

} // namespace bosp
