#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bosp/biorth/biorth.hpp"
#include "bosp/core/block_vectors.hpp"
#include "bosp/core/inner_product.hpp"
#include "bosp/core/linear_operator.hpp"
#include "bosp/nullspace/nullspace.hpp"

namespace bosp {

struct BospConfig {
    std::size_t nev = 1;
    /// 0 requests the default batch size min{nev/5, 150} rounded up, min 1.
    std::size_t nb = 0;
    double tol = 1e-8;
    std::size_t ngs = 1;
    std::size_t s = 3;
    /// Unset picks the default: moving on when nev > 3*nb.
    std::optional<bool> moving;
    std::size_t max_outer_iter = 500;
    std::uint64_t rng_seed = 0;
    double inner_cg_tol = 1e-2;
    std::size_t inner_cg_max_iter = 20;
    double tol_null = 1e-10;
    std::optional<std::size_t> rank_hint;

    std::size_t effective_nb() const;
    bool effective_moving() const;
    void validate() const;
};

struct SolverStats {
    std::size_t iterations = 0;
    std::size_t matvec_count = 0;
    std::size_t step3_matvecs = 0;
    std::size_t step3_vecprods = 0;
    std::size_t max_width_u = 0;
    double max_biorth_deviation = 0.0;
    double max_deflation_crossgram = 0.0;
    double final_biorth_deviation = 0.0;
    bool nevconv_monotone = true;
    double wall_seconds = 0.0;
};

/// The triple blocks U = [X,P,W], V = [Y,Q,Z] plus deflation bookkeeping.
/// The leading `frozen` columns of X/Y hold converged batches that left the
/// active projection without being moved out; `locked` holds pairs removed
/// from the working blocks by the moving mechanism.
struct SolverState {
    BlockVectors x, y, p, q, w, z;
    std::vector<double> lambdas;   // one per column of x
    std::vector<double> residuals; // last normalized residual per column of x
    std::size_t frozen = 0;
    std::size_t nev_conv = 0; // global converged prefix, never decreases
    std::vector<BiorthBasis> locked;
    std::vector<double> locked_lambdas;
    std::vector<std::vector<double>> residual_history; // [iteration][eigenindex]
    std::vector<double> last_residual;                 // per global index
    std::vector<std::size_t> nevconv_history;
    std::size_t iter = 0;
    bool leak_recovered = false;
    SolverStats stats;

    std::size_t locked_count() const { return locked_lambdas.size(); }
};

struct EigenResult {
    std::vector<double> lambdas;
    BlockVectors x, y;
    std::size_t iterations = 0;
    std::vector<double> residuals;
    std::vector<std::vector<double>> history;
    std::vector<std::size_t> nevconv_history;
    bool converged = false;
    std::size_t nev_converged = 0;
    SolverStats stats;
};

/// Algorithm steps 1-2: random seeding, projection against the generalized
/// nullspace, and joint biorthogonalization of (U, V).
SolverState initialize(const LinearOperator& k, const LinearOperator& m,
                       const InnerProduct& ip, const GeneralizedNullspace& ns,
                       const BospConfig& cfg);

/// One outer iteration (steps 3-7). Returns true when the first nev pairs
/// have converged and the state holds the final eigenvector approximations.
bool iterate_once(SolverState& st, const LinearOperator& k, const LinearOperator& m,
                  const InnerProduct& ip, const GeneralizedNullspace& ns,
                  const BospConfig& cfg);

/// Full solve; computes the nullspace when none is supplied.
EigenResult solve(const LinearOperator& k, const LinearOperator& m,
                  const InnerProduct& ip, const BospConfig& cfg,
                  std::optional<GeneralizedNullspace> ns = std::nullopt);

struct RegressionFit {
    double alpha = 0.0;
    double beta = 0.0;
    bool degenerate = false;
};

/// Least-squares fit of log r(j) = log alpha + beta * log r(j-1) over the
/// recorded history of one eigenpair, excluding residuals below 10*tol.
RegressionFit regression_coefficients(const std::vector<std::vector<double>>& history,
                                      std::size_t eigenindex, double tol);

} // namespace bosp
