#include "hyperspec/eigensolvers.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <thread>

#include "hyperspec/families.hpp"

namespace hyperspec {

namespace {

double pow_int(double v, int e) {
  double acc = 1.0;
  for (int t = 0; t < e; ++t) acc *= v;
  return acc;
}

bool all_finite(const std::vector<double>& v) {
  for (double t : v)
    if (!std::isfinite(t)) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Power iteration
// ---------------------------------------------------------------------------

PowerMethodResult lambda_q_power_method(const Hypergraph& g, const PowerMethodOptions& opts) {
  if (g.k() < 3) fail(errc::bad_params, "power method needs k >= 3, got k=" + std::to_string(g.k()));
  if (opts.tol <= 0) fail(errc::bad_params, "tol must be positive");
  if (!is_connected(g)) fail(errc::not_connected, "power method needs a connected hypergraph");

  const int n = g.n();
  const int km1 = g.k() - 1;
  std::vector<double> x;
  if (opts.start) {
    x = *opts.start;
    if (static_cast<int>(x.size()) != n)
      fail(errc::length_mismatch, "start vector has length " + std::to_string(x.size()) +
                                      ", graph has n=" + std::to_string(n));
    for (double v : x)
      if (!(v > 0.0)) fail(errc::bad_params, "start vector entries must be strictly positive");
  } else {
    x.assign(static_cast<size_t>(n), 1.0);
  }

  double lo = 0.0, hi = 0.0;
  for (long it = 1; it <= opts.max_iters; ++it) {
    const std::vector<double> y = apply_operator(g, OperatorTag::SignlessLaplacian, x);
    lo = y[0] / pow_int(x[0], km1);
    hi = lo;
    for (int i = 1; i < n; ++i) {
      const double ratio = y[static_cast<size_t>(i)] / pow_int(x[static_cast<size_t>(i)], km1);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    if (hi - lo < opts.tol) {
      const double lambda = 0.5 * (lo + hi);
      PowerMethodResult r;
      r.pair = make_certified_pair(g, OperatorTag::SignlessLaplacian, lambda, x);
      r.iterations = it;
      r.lambda_lo = lo;
      r.lambda_hi = hi;
      return r;
    }
    double mx = 0.0;
    for (int i = 0; i < n; ++i) {
      x[static_cast<size_t>(i)] = std::pow(y[static_cast<size_t>(i)], 1.0 / km1);
      mx = std::max(mx, x[static_cast<size_t>(i)]);
    }
    for (double& v : x) v /= mx;
  }
  fail(errc::no_convergence, "power method hit the iteration cap with bounds [" + std::to_string(lo) +
                                 ", " + std::to_string(hi) + "]");
}

// ---------------------------------------------------------------------------
// Closed forms (certified bisection)
// ---------------------------------------------------------------------------

namespace {

// Root of the strictly increasing f on (0,1) with f(0) < 0 < f(1), to
// absolute width 1e-14.
template <typename F>
double bisect_unit(F f) {
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ClosedForm lambda_q_cored_cycle(int k, int s) {
  if (k < 3) fail(errc::bad_params, "need k >= 3, got k=" + std::to_string(k));
  if (s < 1 || 2 * s >= k)
    fail(errc::bad_params, "the cored family needs 1 <= s < k/2, got s=" + std::to_string(s) +
                               " with k=" + std::to_string(k));
  const double alpha = bisect_unit([&](double a) { return 2.0 * pow_int(a, k) + pow_int(a, 2 * s) - 1.0; });
  ClosedForm r;
  r.alpha = alpha;
  r.lambda = 2.0 + 2.0 * pow_int(alpha, k - 2 * s);
  return r;
}

ClosedForm lambda_q_gen_tight_cycle(int k, int s) {
  if (k < 3) fail(errc::bad_params, "need k >= 3, got k=" + std::to_string(k));
  if (2 * s <= k || s >= k - 1)
    fail(errc::bad_params, "the generalized tight family needs k/2 < s < k-1, got s=" +
                               std::to_string(s) + " with k=" + std::to_string(k));
  const int step = k - s;
  const int q = k / step;
  const int r = k % step;
  if (r == 0)
    fail(errc::bad_params,
         "regular cycle (k divisible by k-s): lambda(Q) = 2q, no bisection form applies");
  const double alpha =
      bisect_unit([&](double a) { return (q + 1) * pow_int(a, k) + pow_int(a, (q + 1) * r) - q; });
  ClosedForm out;
  out.alpha = alpha;
  out.lambda = (q + 1) + (q + 1) * pow_int(alpha, k - (q + 1) * r);
  return out;
}

// ---------------------------------------------------------------------------
// Laplacian Newton system
// ---------------------------------------------------------------------------

std::vector<double> laplacian_system_residual(const Hypergraph& g, double lambda,
                                              const std::vector<double>& x) {
  const int n = g.n();
  const int km1 = g.k() - 1;
  const std::vector<double> y = apply_operator(g, OperatorTag::Laplacian, x);
  std::vector<double> F(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i)
    F[static_cast<size_t>(i)] = lambda * pow_int(x[static_cast<size_t>(i)], km1) - y[static_cast<size_t>(i)];
  double ss = 0.0;
  for (int i = 0; i < n; ++i) ss += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
  F[static_cast<size_t>(n)] = ss - 1.0;
  return F;
}

std::vector<double> laplacian_system_jacobian(const Hypergraph& g, double lambda,
                                              const std::vector<double>& x) {
  const int n = g.n();
  const int k = g.k();
  const size_t dim = static_cast<size_t>(n) + 1;
  std::vector<double> J(dim * dim, 0.0);
  auto at = [&](int r, int c) -> double& { return J[static_cast<size_t>(r) * dim + static_cast<size_t>(c)]; };

  for (int i = 0; i < n; ++i) {
    at(i, i) = (lambda - g.degree(i + 1)) * (k - 1) * pow_int(x[static_cast<size_t>(i)], k - 2);
    at(i, n) = pow_int(x[static_cast<size_t>(i)], k - 1);
    at(n, i) = 2.0 * x[static_cast<size_t>(i)];
  }
  // d/dx_j of + sum_{e with i,j} prod_{t in e minus {i,j}} x_t
  for (const Edge& e : g.edges()) {
    for (int p = 0; p < k; ++p) {
      for (int q = 0; q < k; ++q) {
        if (p == q) continue;
        double prod = 1.0;
        for (int t = 0; t < k; ++t)
          if (t != p && t != q) prod *= x[static_cast<size_t>(e[static_cast<size_t>(t)] - 1)];
        at(e[static_cast<size_t>(p)] - 1, e[static_cast<size_t>(q)] - 1) += prod;
      }
    }
  }
  return J;
}

// ---------------------------------------------------------------------------
// Multistart enumeration
// ---------------------------------------------------------------------------

namespace {

std::uint64_t splitmix_step(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seed scheme: the pair (seed, start index) fully determines the start.
std::mt19937_64 start_rng(std::uint64_t seed, int index) {
  std::uint64_t state = seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1));
  const std::uint64_t a = splitmix_step(state);
  const std::uint64_t b = splitmix_step(state);
  return std::mt19937_64(a ^ (b << 1));
}

double next_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;  // [0,1)
}

// Box-Muller on explicit 53-bit uniforms: no reliance on library
// distribution internals, so a seed pins the report everywhere.
class NormalSource {
 public:
  explicit NormalSource(std::mt19937_64& gen) : gen_(gen) {}
  double operator()() {
    if (have_) {
      have_ = false;
      return spare_;
    }
    double u1 = next_uniform(gen_);
    while (u1 <= 0.0) u1 = next_uniform(gen_);
    const double u2 = next_uniform(gen_);
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * 3.141592653589793238462643383279502884 * u2;
    spare_ = rad * std::sin(ang);
    have_ = true;
    return rad * std::cos(ang);
  }

 private:
  std::mt19937_64& gen_;
  double spare_ = 0.0;
  bool have_ = false;
};

struct StartOutcome {
  bool accepted = false;
  EigenPair pair;
};

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// One Newton / Gauss-Newton step over all n+1 equations, moving only the
// variables in `cols` (vertex indices; the lambda column is always kept).
// Rectangular when cols is a proper subset: the QR solve is then least
// squares. Returns false when the solve produces non-finite values.
bool newton_step(const Hypergraph& g, const std::vector<int>& cols, std::vector<double>& x,
                 double& lambda) {
  const int n = g.n();
  const std::vector<double> F = laplacian_system_residual(g, lambda, x);
  const std::vector<double> J = laplacian_system_jacobian(g, lambda, x);
  const size_t dim = static_cast<size_t>(n) + 1;
  const int cdim = static_cast<int>(cols.size()) + 1;

  Mat A(static_cast<int>(dim), cdim);
  Eigen::VectorXd rhs(static_cast<int>(dim));
  for (size_t row = 0; row < dim; ++row) {
    rhs(static_cast<int>(row)) = -F[row];
    for (int b = 0; b < cdim; ++b) {
      const size_t col = b + 1 < cdim ? static_cast<size_t>(cols[static_cast<size_t>(b)]) : dim - 1;
      A(static_cast<int>(row), b) = J[row * dim + col];
    }
  }
  Eigen::VectorXd dz = A.colPivHouseholderQr().solve(rhs);
  if (!dz.allFinite()) return false;
  const double norm = dz.norm();
  if (norm > 10.0) dz *= 10.0 / norm;  // keep steps sane near singular Jacobians
  for (int b = 0; b + 1 < cdim; ++b) x[static_cast<size_t>(cols[static_cast<size_t>(b)])] += dz(b);
  lambda += dz(cdim - 1);
  return std::isfinite(lambda) && all_finite(x);
}

double defect_inf(const Hypergraph& g, const std::vector<double>& x, double lambda) {
  const std::vector<double> F = laplacian_system_residual(g, lambda, x);
  double r = 0.0;
  for (double f : F) r = std::max(r, std::abs(f));
  return r;
}

struct CanonicalState {
  double lambda = 0.0;
  std::vector<double> x;
  double residual = 0.0;  // canonical-scale certified residual
};

CanonicalState canonical_snapshot(const Hypergraph& g, double lambda, const std::vector<double>& x) {
  CanonicalState s;
  s.lambda = lambda;
  s.x = x;
  canonicalize(s.x);
  s.residual = eigen_residual(g, OperatorTag::Laplacian, lambda, s.x);
  return s;
}

// Entries at or below snap_tol (canonical scale) become exact zeros and the
// pair is re-solved over the surviving support variables against ALL
// equations (Gauss-Newton least squares). The zeroed rows stay in the
// system, so a snap only converges when the zeros are structural; genuinely
// small entries leave those rows inconsistent and the snap is abandoned.
bool try_support_snap(const Hypergraph& g, const MultistartOptions& opts, const CanonicalState& in,
                      CanonicalState& out) {
  const int n = g.n();
  std::vector<int> support;
  for (int i = 0; i < n; ++i)
    if (std::abs(in.x[static_cast<size_t>(i)]) > opts.snap_tol) support.push_back(i);
  if (support.empty() || static_cast<int>(support.size()) == n) return false;

  std::vector<double> x(static_cast<size_t>(n), 0.0);
  double ss = 0.0;
  for (int i : support) {
    x[static_cast<size_t>(i)] = in.x[static_cast<size_t>(i)];
    ss += x[static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
  }
  const double norm = std::sqrt(ss);
  if (!(norm > 0.0)) return false;
  for (int i : support) x[static_cast<size_t>(i)] /= norm;

  double lambda = in.lambda;
  bool converged = false;
  for (int it = 0; it < opts.max_newton_iters; ++it) {
    if (defect_inf(g, x, lambda) <= opts.newton_tol) {
      converged = true;
      break;
    }
    if (!newton_step(g, support, x, lambda)) return false;
  }
  if (!converged) return false;

  CanonicalState snapped;
  try {
    snapped = canonical_snapshot(g, lambda, x);
  } catch (const Error&) {
    return false;
  }
  // Certification covers the off-support rows: the zeroed equations must
  // balance on their own.
  if (snapped.residual > opts.newton_tol * 10.0) return false;
  out = std::move(snapped);
  return true;
}

StartOutcome run_start(const Hypergraph& g, const MultistartOptions& opts, double lo, double hi,
                       int index) {
  StartOutcome out;
  const int n = g.n();

  std::mt19937_64 gen = start_rng(opts.seed, index);
  NormalSource normal(gen);
  std::vector<double> x(static_cast<size_t>(n));
  double ss = 0.0;
  for (double& v : x) {
    v = normal();
    ss += v * v;
  }
  if (!(ss > 0.0)) return out;
  const double nrm = std::sqrt(ss);
  for (double& v : x) v /= nrm;
  double lambda = lo + next_uniform(gen) * (hi - lo);

  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;

  bool converged = false;
  for (int it = 0; it < opts.max_newton_iters; ++it) {
    if (defect_inf(g, x, lambda) <= opts.newton_tol) {
      converged = true;
      break;
    }
    if (!newton_step(g, all, x, lambda)) return out;
  }
  if (!converged) return out;

  CanonicalState best;
  try {
    best = canonical_snapshot(g, lambda, x);
  } catch (const Error&) {
    return out;
  }
  // A few extra steps drive the canonical-scale residual toward roundoff
  // (rescaling from the unit sphere inflates it by up to max|x|^-(k-1)).
  for (int extra = 0; extra < 6 && best.residual > 0.1 * opts.newton_tol; ++extra) {
    if (!newton_step(g, all, x, lambda)) break;
    try {
      const CanonicalState cur = canonical_snapshot(g, lambda, x);
      if (cur.residual < best.residual) best = cur;
    } catch (const Error&) {
      break;
    }
  }

  if (opts.snap_tol > 0.0) {
    CanonicalState snapped;
    if (try_support_snap(g, opts, best, snapped)) best = std::move(snapped);
  }

  const double slack = opts.lambda_cluster_tol;
  if (best.residual > opts.newton_tol * 10.0) return out;
  if (best.lambda < lo - slack || best.lambda > hi + slack) return out;

  out.accepted = true;
  out.pair.lambda = best.lambda;
  out.pair.x = std::move(best.x);
  out.pair.residual = best.residual;
  out.pair.op = OperatorTag::Laplacian;
  return out;
}

}  // namespace

SpectralReport enumerate_laplacian_spectrum(const Hypergraph& g, const MultistartOptions& opts) {
  if (g.n() > opts.size_cap)
    fail(errc::too_large, "dense Newton enumeration is capped at n <= " + std::to_string(opts.size_cap) +
                              ", got n=" + std::to_string(g.n()));
  if (opts.starts < 1 || opts.newton_tol <= 0 || opts.max_newton_iters < 1 ||
      opts.lambda_cluster_tol <= 0 || opts.snap_tol < 0)
    fail(errc::bad_params, "multistart options must be positive");

  double lo = 0.0, hi = 0.0;
  if (opts.lambda_range) {
    lo = opts.lambda_range->first;
    hi = opts.lambda_range->second;
    if (!(hi >= lo)) fail(errc::bad_params, "lambda_range upper bound below lower bound");
  } else {
    const DegreeProfile prof = degrees(g);
    hi = 2.0 * prof.max;
  }

  std::vector<StartOutcome> outcomes(static_cast<size_t>(opts.starts));
  const int jobs = std::max(1, std::min(opts.jobs, opts.starts));
  if (jobs == 1) {
    for (int i = 0; i < opts.starts; ++i) outcomes[static_cast<size_t>(i)] = run_start(g, opts, lo, hi, i);
  } else {
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= opts.starts) return;
        outcomes[static_cast<size_t>(i)] = run_start(g, opts, lo, hi, i);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SpectralReport rep;
  rep.op = OperatorTag::Laplacian;
  std::vector<EigenPair> found;
  for (auto& o : outcomes) {
    if (o.accepted)
      found.push_back(std::move(o.pair));
    else
      ++rep.failures;
  }
  std::sort(found.begin(), found.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.x < b.x;
  });

  size_t pos = 0;
  while (pos < found.size()) {
    size_t end = pos + 1;
    while (end < found.size() && found[end].lambda - found[end - 1].lambda <= opts.lambda_cluster_tol)
      ++end;
    size_t best = pos;
    for (size_t t = pos + 1; t < end; ++t) {
      const EigenPair& a = found[t];
      const EigenPair& b = found[best];
      if (a.residual < b.residual || (a.residual == b.residual && (a.lambda < b.lambda || (a.lambda == b.lambda && a.x < b.x))))
        best = t;
    }
    rep.distinct_lambdas.push_back(found[best].lambda);
    rep.representatives.push_back(found[best]);
    rep.hits.push_back(static_cast<int>(end - pos));
    pos = end;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Constructive eigenpairs and checks
// ---------------------------------------------------------------------------

EigenPair signflip_transfer(const Hypergraph& g, const OddBipartition& p, const EigenPair& q_pair) {
  if (g.k() % 2 != 0)
    fail(errc::odd_uniformity, "sign-flip transfer needs even uniformity, got k=" + std::to_string(g.k()));
  if (q_pair.op != OperatorTag::SignlessLaplacian)
    fail(errc::uncertified_input, "input pair must be tagged as a signless Laplacian eigenpair");
  if (!(q_pair.residual <= 1e-8))
    fail(errc::uncertified_input, "input pair residual " + std::to_string(q_pair.residual) +
                                      " exceeds the 1e-8 certification threshold");
  if (static_cast<int>(q_pair.x.size()) != g.n())
    fail(errc::length_mismatch, "eigenvector length does not match the graph");
  if (!verify_odd_bipartition(g, p))
    fail(errc::invalid_partition, "the claimed bipartition leaves some edge with an even overlap");

  std::vector<double> y = q_pair.x;
  for (Vertex v : p.v1) y[static_cast<size_t>(v - 1)] = -y[static_cast<size_t>(v - 1)];
  return make_certified_pair(g, OperatorTag::Laplacian, q_pair.lambda, std::move(y));
}

EigenPair vertex_indicator_eigenpair(const Hypergraph& g, Vertex i) {
  if (g.k() < 3)
    fail(errc::bad_params, "indicator eigenpairs need k >= 3, got k=" + std::to_string(g.k()));
  const int d = g.degree(i);  // validates the vertex id
  std::vector<double> x(static_cast<size_t>(g.n()), 0.0);
  x[static_cast<size_t>(i - 1)] = 1.0;
  return make_certified_pair(g, OperatorTag::Laplacian, static_cast<double>(d), std::move(x));
}

EigenPair alternating_eigenpair(const Hypergraph& g, int k, int n) {
  if (k != g.k() || n != g.n())
    fail(errc::bad_shape, "k/n do not match the supplied hypergraph");
  if (n % 2 != 0) fail(errc::bad_shape, "the alternating vector needs even n, got n=" + std::to_string(n));
  if (k % 4 != 3)
    fail(errc::bad_shape, "the alternating construction needs k = 3 (mod 4), got k=" + std::to_string(k));
  bool tight = g.m() == n;
  if (tight) {
    try {
      const Hypergraph ref = build_s_cycle({k, k - 1, n});
      tight = ref.edges() == g.edges();
    } catch (const Error&) {
      tight = false;
    }
  }
  if (!tight) fail(errc::bad_shape, "graph is not the tight cycle on its vertex set");

  std::vector<double> x(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<size_t>(i)] = i % 2 == 0 ? 1.0 : -1.0;
  return make_certified_pair(g, OperatorTag::Laplacian, static_cast<double>(k) + 1.0, std::move(x));
}

SupervertexCheckReport check_supervertex_property(const Hypergraph& g, const EigenPair& pair,
                                                  double tol, double degree_gap) {
  if (static_cast<int>(pair.x.size()) != g.n())
    fail(errc::length_mismatch, "eigenvector length does not match the graph");
  SupervertexCheckReport rep;
  for (const SupervertexBlock& blk : supervertices(g).blocks) {
    if (blk.vertices.size() < 2) continue;
    SupervertexBlockCheck c;
    c.vertices = blk.vertices;
    c.degree = blk.degree;
    double abs_lo = 0.0, abs_hi = 0.0, lo = 0.0, hi = 0.0;
    bool first = true;
    for (Vertex v : blk.vertices) {
      const double t = pair.x[static_cast<size_t>(v - 1)];
      const double a = std::abs(t);
      if (first) {
        abs_lo = abs_hi = a;
        lo = hi = t;
        first = false;
      } else {
        abs_lo = std::min(abs_lo, a);
        abs_hi = std::max(abs_hi, a);
        lo = std::min(lo, t);
        hi = std::max(hi, t);
      }
    }
    c.abs_spread = abs_hi - abs_lo;
    c.signed_spread = hi - lo;
    c.checked = std::abs(static_cast<double>(blk.degree) - pair.lambda) > degree_gap;
    if (c.checked) {
      c.pass = c.abs_spread <= tol;
      if (g.k() % 2 == 1) c.pass = c.pass && c.signed_spread <= tol;
    }
    rep.all_pass = rep.all_pass && c.pass;
    rep.blocks.push_back(std::move(c));
  }
  return rep;
}

}  // namespace hyperspec
