#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperspec/bipartite.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/tensor_ops.hpp"

namespace hyperspec {

struct PowerMethodOptions {
  double tol = 1e-10;       // gap between the min/max generalized-Rayleigh bounds
  long max_iters = 100000;
  std::optional<std::vector<double>> start;  // strictly positive; default all-ones
};

struct PowerMethodResult {
  EigenPair pair;      // tagged SignlessLaplacian
  long iterations = 0;
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
};

// Perron-style iteration x <- normalize((Q x^{k-1})^{[1/(k-1)]}) on a
// connected hypergraph; the positive limit certifies lambda(Q). Returns the
// bound midpoint once hi-lo < tol.
PowerMethodResult lambda_q_power_method(const Hypergraph& g, const PowerMethodOptions& opts = {});

struct ClosedForm {
  double alpha = 0.0;
  double lambda = 0.0;
};

// lambda(Q) of the s-cycle with 1 <= s < k/2 (every edge keeps k-2s core
// vertices): alpha is the unique (0,1) root of 2a^k + a^{2s} - 1, found by
// certified bisection to 1e-14, and lambda = 2 + 2 alpha^{k-2s}.
ClosedForm lambda_q_cored_cycle(int k, int s);

// lambda(Q) of the non-regular s-cycle with k/2 < s < k-1, where
// k = q(k-s) + r with 1 <= r < k-s: alpha is the unique (0,1) root of
// (q+1)a^k + a^{(q+1)r} - q and lambda = (q+1)(1 + alpha^{k-(q+1)r}).
ClosedForm lambda_q_gen_tight_cycle(int k, int s);

struct MultistartOptions {
  int starts = 500;
  std::uint64_t seed = 0;
  double newton_tol = 1e-12;     // max-norm of the full system defect
  int max_newton_iters = 200;
  double lambda_cluster_tol = 1e-6;
  std::optional<std::pair<double, double>> lambda_range;  // default [0, 2*Delta]
  // Entries of a converged canonical vector at or below this threshold are
  // snapped to exact zero and the reduced system re-solved; the snap is kept
  // only if the full residual re-certifies. Rescues Newton from the flat
  // valleys around eigenvectors with structural zeros. 0 disables.
  double snap_tol = 1e-3;
  int jobs = 1;       // worker threads; report is identical for any value
  int size_cap = 12;  // dense Newton guideline; TooLarge beyond
};

struct SpectralReport {
  OperatorTag op = OperatorTag::Laplacian;
  std::vector<double> distinct_lambdas;     // cluster representatives, ascending
  std::vector<EigenPair> representatives;   // least-residual member per cluster
  std::vector<int> hits;                    // converged starts per cluster
  int failures = 0;                         // non-converged or discarded starts
};

// Multistart Newton on F_i = lambda x_i^{k-1} - (L x^{k-1})_i, i in 1..n,
// plus the normalization sum x_i^2 = 1. Converged roots are canonicalized,
// optionally support-snapped, then clustered by lambda. The report is a
// residual-certified lower approximation of the H-spectrum and is fully
// determined by the seed.
SpectralReport enumerate_laplacian_spectrum(const Hypergraph& g, const MultistartOptions& opts = {});

// Full-system defect F (length n+1) at (lambda, x) with sum-of-squares
// normalization row; exposed for the finite-difference cross-checks.
std::vector<double> laplacian_system_residual(const Hypergraph& g, double lambda,
                                              const std::vector<double>& x);

// Analytic Jacobian of the same system, row-major (n+1) x (n+1); column n
// is d/d lambda.
std::vector<double> laplacian_system_jacobian(const Hypergraph& g, double lambda,
                                              const std::vector<double>& x);

// Maps a certified signless-Laplacian eigenpair through an odd bipartition:
// flipping signs on v1 gives a Laplacian eigenpair at the same lambda.
EigenPair signflip_transfer(const Hypergraph& g, const OddBipartition& p, const EigenPair& q_pair);

// Laplacian pair (d_i, indicator of i): exact in floating point for k >= 3.
EigenPair vertex_indicator_eigenpair(const Hypergraph& g, Vertex i);

// Laplacian pair (k+1, (1,-1,1,-1,...)) on the tight cycle when n is even
// and k = 3 (mod 4); k and n are cross-checked against g.
EigenPair alternating_eigenpair(const Hypergraph& g, int k, int n);

struct SupervertexBlockCheck {
  std::vector<Vertex> vertices;
  int degree = 0;
  bool checked = false;   // false when |degree - lambda| <= degree_gap (exempt)
  bool pass = true;
  double abs_spread = 0.0;     // max-min of |x_i| over the block
  double signed_spread = 0.0;  // max-min of x_i (checked for odd k)
};

struct SupervertexCheckReport {
  std::vector<SupervertexBlockCheck> blocks;  // only blocks of size >= 2
  bool all_pass = true;
};

// Equal-magnitude law across supervertex blocks: for blocks whose degree
// differs from pair.lambda by more than degree_gap, |x| must be constant on
// the block within tol (and x itself for odd k).
SupervertexCheckReport check_supervertex_property(const Hypergraph& g, const EigenPair& pair,
                                                  double tol = 1e-8, double degree_gap = 1e-6);

}  // namespace hyperspec
