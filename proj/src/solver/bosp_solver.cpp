#include "bosp/solver/bosp_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <numeric>

#include "bosp/core/cg.hpp"
#include "bosp/core/errors.hpp"
#include "bosp/core/kernels.hpp"
#include "bosp/projected/projected_lrep.hpp"

namespace bosp {

namespace {

DenseMatrix to_dense(const BlockVectors& b) {
    DenseMatrix d(b.dim(), b.cols());
    std::memcpy(d.data(), b.data(), b.dim() * b.cols() * sizeof(double));
    return d;
}

BlockVectors to_block(const DenseMatrix& d) {
    BlockVectors b(d.rows(), d.cols());
    std::memcpy(b.data(), d.data(), d.rows() * d.cols() * sizeof(double));
    return b;
}

BlockVectors active_u(const SolverState& st) {
    BlockVectors xa = st.x.columns(st.frozen, st.x.cols() - st.frozen);
    return BlockVectors::hcat({&xa, &st.p, &st.w});
}

BlockVectors active_v(const SolverState& st) {
    BlockVectors ya = st.y.columns(st.frozen, st.y.cols() - st.frozen);
    return BlockVectors::hcat({&ya, &st.q, &st.z});
}

std::vector<const BiorthBasis*> deflation_bases(const SolverState& st,
                                                const BiorthBasis& null_basis) {
    std::vector<const BiorthBasis*> bases;
    if (!null_basis.p.empty()) bases.push_back(&null_basis);
    for (const BiorthBasis& b : st.locked) bases.push_back(&b);
    return bases;
}

BiorthBasis nullspace_basis(const GeneralizedNullspace& ns, const InnerProduct& ip) {
    return BiorthBasis{ns.x0, ns.y0, ip};
}

// max |<q_j, u_i>| over a basis pair, the deflation cross-Gram measure
double cross_gram_max(const BiorthBasis& b, const BlockVectors& u,
                      const BlockVectors& v, const InnerProduct& ip) {
    if (b.p.empty() || u.empty()) return 0.0;
    const double a = block_inner(ip, b.q, u).max_abs();
    const double c = block_inner(ip, b.p, v).max_abs();
    return std::max(a, c);
}

// Returns the current U^T V - I deviation so the caller can decide on repair.
double sample_invariants(SolverState& st, const BiorthBasis& null_basis,
                         const InnerProduct& ip) {
    const BlockVectors u = BlockVectors::hcat({&st.x, &st.p, &st.w});
    const BlockVectors v = BlockVectors::hcat({&st.y, &st.q, &st.z});
    DenseMatrix g = block_inner(ip, u, v);
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    const double dev = g.max_abs();
    st.stats.max_biorth_deviation = std::max(st.stats.max_biorth_deviation, dev);
    double cg = cross_gram_max(null_basis, u, v, ip);
    for (const BiorthBasis& b : st.locked)
        cg = std::max(cg, cross_gram_max(b, u, v, ip));
    st.stats.max_deflation_crossgram = std::max(st.stats.max_deflation_crossgram, cg);
    return dev;
}

// Full MGS repair of (U, V) after re-projection against the deflation set.
void rebiorthogonalize_state(SolverState& st, const GeneralizedNullspace& ns,
                             const InnerProduct& ip) {
    BiorthBasis nb = nullspace_basis(ns, ip);
    BlockVectors u = BlockVectors::hcat({&st.x, &st.p, &st.w});
    BlockVectors v = BlockVectors::hcat({&st.y, &st.q, &st.z});
    auto [u2, v2] = biorth_against(deflation_bases(st, nb), u, v, ip);
    BiorthOutcome out = mgs_biorth(u2, v2, ip);
    if (!out.dropped_columns.empty())
        throw NumericalAbort("bosp: rebiorthogonalization dropped columns");
    const std::size_t wx = st.x.cols(), wp = st.p.cols(), ww = st.w.cols();
    st.x = out.basis.p.columns(0, wx);
    st.p = out.basis.p.columns(wx, wp);
    st.w = out.basis.p.columns(wx + wp, ww);
    st.y = out.basis.q.columns(0, wx);
    st.q = out.basis.q.columns(wx, wp);
    st.z = out.basis.q.columns(wx + wp, ww);
}

} // namespace

std::size_t BospConfig::effective_nb() const {
    if (nb > 0) return std::min(nb, nev);
    const std::size_t by_rule = (nev + 4) / 5; // nev/5 rounded up
    return std::max<std::size_t>(1, std::min<std::size_t>(by_rule, 150));
}

bool BospConfig::effective_moving() const {
    if (moving.has_value()) return *moving;
    return nev > 3 * effective_nb();
}

void BospConfig::validate() const {
    if (nev == 0) throw ContractViolation("BospConfig: nev must be positive");
    if (effective_nb() > nev) throw ContractViolation("BospConfig: nb exceeds nev");
    if (s < 2) throw ContractViolation("BospConfig: s must be >= 2");
    if (!(tol > 0.0)) throw ContractViolation("BospConfig: tol must be positive");
}

SolverState initialize(const LinearOperator& k, const LinearOperator& m,
                       const InnerProduct& ip, const GeneralizedNullspace& ns,
                       const BospConfig& cfg) {
    cfg.validate();
    const std::size_t n = k.dim();
    if (m.dim() != n) throw ContractViolation("bosp: K and M dimension mismatch");
    if (ns.r > 0 && (ns.x0.dim() != n || ns.x0.cols() != ns.r))
        throw ContractViolation("bosp: nullspace inconsistent with operators");

    const std::size_t budget = n - ns.r;
    if (cfg.nev > budget)
        throw ContractViolation("bosp: nev exceeds the number of positive eigenvalues");

    const std::size_t nb = cfg.effective_nb();
    const bool moving = cfg.effective_moving();
    const std::size_t wx = std::min(moving ? cfg.s * nb : cfg.nev, budget);
    const std::size_t avail = budget - wx;
    const std::size_t wp = std::min(nb, avail / 2);
    const std::size_t ww = std::min(nb, avail - wp);

    SolverState st;
    std::mt19937_64 rng(cfg.rng_seed);
    st.x = BlockVectors(n, wx);
    st.p = BlockVectors(n, wp);
    st.w = BlockVectors(n, ww);
    st.y = BlockVectors(n, wx);
    st.q = BlockVectors(n, wp);
    st.z = BlockVectors(n, ww);
    st.x.fill_uniform(rng);
    st.p.fill_uniform(rng);
    st.w.fill_uniform(rng);
    st.y.fill_uniform(rng);
    st.q.fill_uniform(rng);
    st.z.fill_uniform(rng);

    BlockVectors u = BlockVectors::hcat({&st.x, &st.p, &st.w});
    BlockVectors v = BlockVectors::hcat({&st.y, &st.q, &st.z});

    BiorthBasis nb_basis = nullspace_basis(ns, ip);
    std::vector<const BiorthBasis*> bases;
    if (!nb_basis.p.empty()) bases.push_back(&nb_basis);
    auto [u2, v2] = biorth_against(bases, u, v, ip);

    BiorthOutcome out = mgs_biorth(u2, v2, ip);
    if (out.basis.p.cols() < wx + wp + ww)
        throw InitializationFailure(
            "bosp: column drops during seeding left fewer than the required " +
            std::to_string(wx + wp + ww) + " columns");

    st.x = out.basis.p.columns(0, wx);
    st.p = out.basis.p.columns(wx, wp);
    st.w = out.basis.p.columns(wx + wp, ww);
    st.y = out.basis.q.columns(0, wx);
    st.q = out.basis.q.columns(wx, wp);
    st.z = out.basis.q.columns(wx + wp, ww);

    st.lambdas.assign(wx, std::numeric_limits<double>::infinity());
    st.residuals.assign(wx, 1.0);
    st.last_residual.assign(cfg.nev, 1.0);
    return st;
}

namespace {

struct StepProducts {
    BlockVectors xt, yt, kxt, myt;
    SmallEigenSolution sol;
};

// Step 3: projection, small solve, pullback. K*Xt and M*Yt fall out of the
// already-computed K*U and M*V.
StepProducts ritz_step(SolverState& st, const LinearOperator& k, const LinearOperator& m,
                       const BlockVectors& u, const BlockVectors& v,
                       std::size_t k_extract) {
    StepProducts sp;
    const std::size_t d = u.cols();
    BlockVectors ku = block_apply(k, u);
    BlockVectors mv = block_apply(m, v);
    st.stats.matvec_count += 2 * d;
    st.stats.step3_matvecs += 2 * d;
    st.stats.step3_vecprods += d * d + d;

    ProjectedLrep proj = assemble_projected_applied(u, ku, v, mv);
    sp.sol = solve_small_lrep(proj, k_extract);

    sp.xt = block_product(u, sp.sol.xhat);
    sp.yt = block_product(v, sp.sol.yhat);
    sp.kxt = block_product(ku, sp.sol.xhat);
    sp.myt = block_product(mv, sp.sol.yhat);
    return sp;
}

} // namespace

bool iterate_once(SolverState& st, const LinearOperator& k, const LinearOperator& m,
                  const InnerProduct& ip, const GeneralizedNullspace& ns,
                  const BospConfig& cfg) {
    const std::size_t n = k.dim();
    const std::size_t nb = cfg.effective_nb();
    const bool moving = cfg.effective_moving();
    const std::size_t budget = n - ns.r;
    const BiorthBasis nb_basis = nullspace_basis(ns, ip);

    ++st.iter;
    ++st.stats.iterations;

    const std::size_t wxa = st.x.cols() - st.frozen;
    BlockVectors u = active_u(st);
    BlockVectors v = active_v(st);
    st.stats.max_width_u = std::max(st.stats.max_width_u, u.cols());

    StepProducts sp;
    try {
        sp = ritz_step(st, k, m, u, v, wxa);
    } catch (const NullspaceLeak&) {
        if (st.leak_recovered)
            throw NumericalAbort("bosp: projected blocks lost positive definiteness twice");
        st.leak_recovered = true;
        rebiorthogonalize_state(st, ns, ip);
        u = active_u(st);
        v = active_v(st);
        sp = ritz_step(st, k, m, u, v, wxa); // second failure propagates
    }

    // write the refreshed window back
    st.x.assign_columns(st.frozen, sp.xt);
    st.y.assign_columns(st.frozen, sp.yt);
    for (std::size_t j = 0; j < wxa; ++j) st.lambdas[st.frozen + j] = sp.sol.lambdas[j];

    // Step 4: normalized residuals of the window pairs
    BlockVectors bxt, byt;
    if (ip.weighted()) {
        bxt = ip.weight()->apply(sp.xt);
        byt = ip.weight()->apply(sp.yt);
        st.stats.matvec_count += 2 * wxa;
    }
    const BlockVectors& xt_b = ip.weighted() ? bxt : sp.xt;
    const BlockVectors& yt_b = ip.weighted() ? byt : sp.yt;

    for (std::size_t j = 0; j < wxa; ++j) {
        const double lam = sp.sol.lambdas[j];
        double num = 0.0, den = 0.0;
        auto kx = sp.kxt.col(j);
        auto my = sp.myt.col(j);
        auto xb = xt_b.col(j);
        auto yb = yt_b.col(j);
        auto xc = sp.xt.col(j);
        auto yc = sp.yt.col(j);
        for (std::size_t i = 0; i < n; ++i) {
            const double r1 = kx[i] - lam * yb[i];
            const double r2 = my[i] - lam * xb[i];
            num += r1 * r1 + r2 * r2;
            den += xc[i] * xc[i] + yc[i] * yc[i];
        }
        st.residuals[st.frozen + j] = std::sqrt(num) / ((1.0 + lam) * std::sqrt(den));
    }

    const std::size_t base = st.locked_count() + st.frozen;
    std::size_t prefix = 0;
    while (prefix < wxa && st.residuals[st.frozen + prefix] < cfg.tol) ++prefix;
    st.nev_conv = std::max(st.nev_conv, base + prefix);

    for (std::size_t j = 0; j < wxa && base + j < cfg.nev; ++j)
        st.last_residual[base + j] = st.residuals[st.frozen + j];
    st.residual_history.push_back(st.last_residual);
    if (!st.nevconv_history.empty() && st.nev_conv < st.nevconv_history.back())
        st.stats.nevconv_monotone = false;
    st.nevconv_history.push_back(st.nev_conv);

    if (st.nev_conv >= cfg.nev) return true;

    // Step 5: new search directions from the first nb unconverged pairs
    const std::size_t d = u.cols();
    const std::size_t conv_in_window = st.nev_conv - base;
    const std::size_t c0 = std::min(conv_in_window, wxa);
    std::size_t nb_eff = std::min(nb, wxa - c0);
    if (wxa + 2 * nb_eff > budget) nb_eff = (budget - wxa) / 2;

    BlockVectors ptil(n, 0), qtil(n, 0);
    if (nb_eff > 0) {
        DenseMatrix t1(d, nb_eff), t2(d, nb_eff);
        for (std::size_t j = 0; j < nb_eff; ++j) {
            for (std::size_t i = 0; i < d; ++i) {
                t1(i, j) = sp.sol.xhat(i, c0 + j);
                t2(i, j) = sp.sol.yhat(i, c0 + j);
            }
            t1(c0 + j, j) -= 1.0;
            t2(c0 + j, j) -= 1.0;
        }
        DenseMatrix c1 = matmul_tn(sp.sol.yhat, t1);
        DenseMatrix phat = t1;
        {
            DenseMatrix corr = matmul(sp.sol.xhat, c1);
            for (std::size_t j = 0; j < nb_eff; ++j)
                for (std::size_t i = 0; i < d; ++i) phat(i, j) -= corr(i, j);
        }
        DenseMatrix c2 = matmul_tn(sp.sol.xhat, t2);
        DenseMatrix qhat = t2;
        {
            DenseMatrix corr = matmul(sp.sol.yhat, c2);
            for (std::size_t j = 0; j < nb_eff; ++j)
                for (std::size_t i = 0; i < d; ++i) qhat(i, j) -= corr(i, j);
        }
        // small-scale biorthogonalization in the projected coordinates
        const InnerProduct euclid;
        BiorthOutcome small = mgs_biorth(to_block(phat), to_block(qhat), euclid);
        if (!small.basis.p.empty()) {
            ptil = block_product(u, to_dense(small.basis.p));
            qtil = block_product(v, to_dense(small.basis.q));
        }
    }

    // Step 6: block Gauss-Seidel sweeps on the residual system
    BlockVectors wtil(n, 0), ztil(n, 0);
    if (nb_eff > 0) {
        std::vector<double> lam_b(nb_eff);
        for (std::size_t j = 0; j < nb_eff; ++j) lam_b[j] = sp.sol.lambdas[c0 + j];

        BlockVectors xt_bat(n, nb_eff), yt_bat(n, nb_eff);
        BlockVectors rhs_z_const(n, nb_eff), rhs_w_const(n, nb_eff);
        for (std::size_t j = 0; j < nb_eff; ++j) {
            auto xbj = xt_b.col(c0 + j);
            auto ybj = yt_b.col(c0 + j);
            auto kxj = sp.kxt.col(c0 + j);
            auto myj = sp.myt.col(c0 + j);
            auto rz = rhs_z_const.col(j);
            auto rw = rhs_w_const.col(j);
            for (std::size_t i = 0; i < n; ++i) {
                rz[i] = lam_b[j] * xbj[i] - myj[i];
                rw[i] = lam_b[j] * ybj[i] - kxj[i];
            }
            std::memcpy(xt_bat.col(j).data(), sp.xt.col(c0 + j).data(), n * sizeof(double));
            std::memcpy(yt_bat.col(j).data(), sp.yt.col(c0 + j).data(), n * sizeof(double));
        }

        BlockVectors wgs(n, nb_eff), zgs(n, nb_eff);
        for (std::size_t sweep = 0; sweep < cfg.ngs; ++sweep) {
            BlockVectors rhs_z = rhs_z_const;
            if (sweep > 0) {
                BlockVectors bw = ip.weighted() ? ip.weight()->apply(wgs) : wgs;
                if (ip.weighted()) st.stats.matvec_count += nb_eff;
                for (std::size_t j = 0; j < nb_eff; ++j)
                    vaxpy(lam_b[j], bw.col(j), rhs_z.col(j));
            }
            CgResult zres = cg_solve(m, rhs_z, BlockVectors(n, nb_eff), cfg.inner_cg_tol,
                                     cfg.inner_cg_max_iter);
            zgs = std::move(zres.x);

            BlockVectors rhs_w = rhs_w_const;
            {
                BlockVectors bz = ip.weighted() ? ip.weight()->apply(zgs) : zgs;
                if (ip.weighted()) st.stats.matvec_count += nb_eff;
                for (std::size_t j = 0; j < nb_eff; ++j)
                    vaxpy(lam_b[j], bz.col(j), rhs_w.col(j));
            }
            CgResult wres = cg_solve(k, rhs_w, BlockVectors(n, nb_eff), cfg.inner_cg_tol,
                                     cfg.inner_cg_max_iter);
            wgs = std::move(wres.x);
        }

        // project against [X0, X, P] / [Y0, Y, Q] and locked pairs, then
        // biorthogonalize the fresh directions
        BiorthBasis window_basis{st.x, st.y, ip};
        BiorthBasis pq_basis{ptil, qtil, ip};
        std::vector<const BiorthBasis*> bases = deflation_bases(st, nb_basis);
        bases.push_back(&window_basis);
        if (!pq_basis.p.empty()) bases.push_back(&pq_basis);
        auto [wproj, zproj] = biorth_against(bases, wgs, zgs, ip);
        BiorthOutcome wz = mgs_biorth(wproj, zproj, ip);
        wtil = wz.basis.p;
        ztil = wz.basis.q;
    }

    // Step 7
    st.p = std::move(ptil);
    st.q = std::move(qtil);
    st.w = std::move(wtil);
    st.z = std::move(ztil);

    if (moving) {
        const std::size_t conv_window = st.nev_conv - st.locked_count();
        if (conv_window >= 2 * nb && st.x.cols() >= 2 * nb) {
            BiorthBasis lock{st.x.columns(0, 2 * nb), st.y.columns(0, 2 * nb), ip};
            st.locked.push_back(std::move(lock));
            for (std::size_t j = 0; j < 2 * nb; ++j)
                st.locked_lambdas.push_back(st.lambdas[j]);

            BlockVectors xr = st.x.columns(2 * nb, st.x.cols() - 2 * nb);
            BlockVectors yr = st.y.columns(2 * nb, st.y.cols() - 2 * nb);
            std::vector<double> lam_rest(st.lambdas.begin() + 2 * nb, st.lambdas.end());
            std::vector<double> res_rest(st.residuals.begin() + 2 * nb, st.residuals.end());

            st.x = BlockVectors::hcat({&xr, &st.p, &st.w});
            st.y = BlockVectors::hcat({&yr, &st.q, &st.z});
            st.p = BlockVectors(n, 0);
            st.q = BlockVectors(n, 0);
            st.w = BlockVectors(n, 0);
            st.z = BlockVectors(n, 0);
            lam_rest.resize(st.x.cols(), std::numeric_limits<double>::infinity());
            res_rest.resize(st.x.cols(), 1.0);
            st.lambdas = std::move(lam_rest);
            st.residuals = std::move(res_rest);
        }
    } else {
        // batching: retire converged batches from the active projection,
        // keeping at least one batch of columns live
        if (st.x.cols() > nb) {
            const std::size_t milestone = nb * (st.nev_conv / nb);
            st.frozen = std::max(st.frozen, std::min(milestone, st.x.cols() - nb));
        }
    }

    // invariant sampling doubles as the drift monitor: a full MGS repair
    // fires before the deviation can reach the 1e-10 contract
    const double dev = sample_invariants(st, nb_basis, ip);
    if (dev > 5e-11) rebiorthogonalize_state(st, ns, ip);

    return false;
}

namespace {

EigenResult assemble_result(const SolverState& st, const LinearOperator& k,
                            const LinearOperator& m, const InnerProduct& ip,
                            const BospConfig& cfg, bool converged) {
    const std::size_t n = k.dim();
    const std::size_t have =
        std::min<std::size_t>(cfg.nev, st.locked_count() + st.x.cols());

    std::vector<double> lambdas;
    BlockVectors x(n, have), y(n, have);
    lambdas.reserve(have);
    std::size_t at = 0;
    for (std::size_t b = 0; b < st.locked.size() && at < have; ++b) {
        const BiorthBasis& lk = st.locked[b];
        for (std::size_t j = 0; j < lk.p.cols() && at < have; ++j) {
            std::memcpy(x.col(at).data(), lk.p.col(j).data(), n * sizeof(double));
            std::memcpy(y.col(at).data(), lk.q.col(j).data(), n * sizeof(double));
            lambdas.push_back(st.locked_lambdas[at]);
            ++at;
        }
    }
    for (std::size_t j = 0; at < have && j < st.x.cols(); ++j, ++at) {
        std::memcpy(x.col(at).data(), st.x.col(j).data(), n * sizeof(double));
        std::memcpy(y.col(at).data(), st.y.col(j).data(), n * sizeof(double));
        lambdas.push_back(st.lambdas[j]);
    }

    // ascending order; locking preserves it up to round-off at batch seams
    std::vector<std::size_t> order(lambdas.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return lambdas[a] < lambdas[b]; });

    EigenResult res;
    res.lambdas.resize(lambdas.size());
    res.x = BlockVectors(n, lambdas.size());
    res.y = BlockVectors(n, lambdas.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        res.lambdas[j] = lambdas[order[j]];
        std::memcpy(res.x.col(j).data(), x.col(order[j]).data(), n * sizeof(double));
        std::memcpy(res.y.col(j).data(), y.col(order[j]).data(), n * sizeof(double));
    }

    // fresh residuals of the assembled pairs; these are the reported errors
    BlockVectors kx = block_apply(k, res.x);
    BlockVectors my = block_apply(m, res.y);
    BlockVectors bx = ip.weighted() ? ip.weight()->apply(res.x) : res.x;
    BlockVectors by = ip.weighted() ? ip.weight()->apply(res.y) : res.y;
    res.residuals.resize(res.lambdas.size());
    for (std::size_t j = 0; j < res.lambdas.size(); ++j) {
        const double lam = res.lambdas[j];
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r1 = kx(i, j) - lam * by(i, j);
            const double r2 = my(i, j) - lam * bx(i, j);
            num += r1 * r1 + r2 * r2;
            den += res.x(i, j) * res.x(i, j) + res.y(i, j) * res.y(i, j);
        }
        res.residuals[j] = std::sqrt(num) / ((1.0 + lam) * std::sqrt(den));
    }

    res.iterations = st.iter;
    res.history = st.residual_history;
    res.converged = converged;
    res.nev_converged = std::min(st.nev_conv, cfg.nev);
    res.stats = st.stats;

    DenseMatrix g = block_inner(ip, res.x, res.y);
    for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
    res.stats.final_biorth_deviation = g.max_abs();
    return res;
}

} // namespace

EigenResult solve(const LinearOperator& k, const LinearOperator& m,
                  const InnerProduct& ip, const BospConfig& cfg,
                  std::optional<GeneralizedNullspace> ns) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();

    GeneralizedNullspace nullspace =
        ns ? std::move(*ns)
           : compute_nullspace(k, m, cfg.rank_hint, cfg.tol_null, ip, cfg.rng_seed + 1);

    SolverState st = initialize(k, m, ip, nullspace, cfg);
    bool converged = false;
    while (st.iter < cfg.max_outer_iter) {
        if (iterate_once(st, k, m, ip, nullspace, cfg)) {
            converged = true;
            break;
        }
    }

    EigenResult res = assemble_result(st, k, m, ip, cfg, converged);
    res.stats.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

RegressionFit regression_coefficients(const std::vector<std::vector<double>>& history,
                                      std::size_t eigenindex, double tol) {
    std::vector<double> r;
    for (const auto& row : history) {
        if (eigenindex >= row.size()) continue;
        r.push_back(row[eigenindex]);
    }

    // consecutive pairs above the post-convergence noise floor
    std::vector<std::pair<double, double>> pts;
    for (std::size_t j = 1; j < r.size(); ++j) {
        if (!(r[j - 1] > 10.0 * tol) || !(r[j] > 10.0 * tol)) continue;
        if (!(r[j - 1] > 0.0) || !(r[j] > 0.0)) continue;
        pts.emplace_back(std::log(r[j - 1]), std::log(r[j]));
    }
    if (pts.size() < 2)
        throw NotEnoughSamples("regression_coefficients: need at least 3 iterations "
                               "of residuals above 10*tol");

    double sx = 0.0, sy = 0.0;
    for (auto& [px, py] : pts) {
        sx += px;
        sy += py;
    }
    const double mx = sx / pts.size();
    const double my = sy / pts.size();
    double sxx = 0.0, sxy = 0.0;
    for (auto& [px, py] : pts) {
        sxx += (px - mx) * (px - mx);
        sxy += (px - mx) * (py - my);
    }

    RegressionFit fit;
    if (sxx < 1e-24) {
        fit.degenerate = true;
        fit.beta = 0.0;
        fit.alpha = std::exp(my);
        return fit;
    }
    fit.beta = sxy / sxx;
    fit.alpha = std::exp(my - fit.beta * mx);
    return fit;
}

} // namespace bosp
