#include "hyperspec/tensor_ops.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace hyperspec {

const char* operator_tag_name(OperatorTag op) noexcept {
  switch (op) {
    case OperatorTag::Adjacency: return "A";
    case OperatorTag::Laplacian: return "L";
    case OperatorTag::SignlessLaplacian: return "Q";
  }
  return "?";
}

namespace {

// Plain ascending multiply chain; the naive test oracle uses the same
// association so results compare bitwise.
double pow_int(double v, int e) {
  double acc = 1.0;
  for (int t = 0; t < e; ++t) acc *= v;
  return acc;
}

void check_length(const Hypergraph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.n())
    fail(errc::length_mismatch, "vector has length " + std::to_string(x.size()) + ", graph has n=" +
                                    std::to_string(g.n()));
}

}  // namespace

std::vector<double> apply_operator(const Hypergraph& g, OperatorTag op, const std::vector<double>& x) {
  check_length(g, x);
  const int n = g.n();
  const int k = g.k();

  // Adjacency sums, accumulated per vertex in ascending edge-index order.
  std::vector<double> adj(static_cast<size_t>(n), 0.0);
  std::vector<double> pre(static_cast<size_t>(k) + 1);
  std::vector<double> suf(static_cast<size_t>(k) + 1);
  for (const Edge& e : g.edges()) {
    pre[0] = 1.0;
    for (int t = 0; t < k; ++t) pre[static_cast<size_t>(t) + 1] = pre[static_cast<size_t>(t)] * x[static_cast<size_t>(e[static_cast<size_t>(t)] - 1)];
    suf[static_cast<size_t>(k)] = 1.0;
    for (int t = k - 1; t >= 0; --t) suf[static_cast<size_t>(t)] = x[static_cast<size_t>(e[static_cast<size_t>(t)] - 1)] * suf[static_cast<size_t>(t) + 1];
    for (int t = 0; t < k; ++t)
      adj[static_cast<size_t>(e[static_cast<size_t>(t)] - 1)] += pre[static_cast<size_t>(t)] * suf[static_cast<size_t>(t) + 1];
  }

  if (op == OperatorTag::Adjacency) return adj;

  std::vector<double> y(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double dpart = static_cast<double>(g.degree(i + 1)) * pow_int(x[static_cast<size_t>(i)], k - 1);
    y[static_cast<size_t>(i)] =
        op == OperatorTag::Laplacian ? dpart - adj[static_cast<size_t>(i)] : dpart + adj[static_cast<size_t>(i)];
  }
  return y;
}

double eigen_residual(const Hypergraph& g, OperatorTag op, double lambda, const std::vector<double>& x) {
  check_length(g, x);
  bool all_zero = true;
  for (double v : x) all_zero = all_zero && v == 0.0;
  if (all_zero) fail(errc::zero_vector, "eigen_residual needs a nonzero vector");

  const std::vector<double> y = apply_operator(g, op, x);
  double r = 0.0;
  for (int i = 0; i < g.n(); ++i) {
    const double defect = std::abs(lambda * pow_int(x[static_cast<size_t>(i)], g.k() - 1) - y[static_cast<size_t>(i)]);
    if (defect > r) r = defect;
  }
  return r;
}

void canonicalize(std::vector<double>& x) {
  double mx = 0.0;
  size_t arg = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    if (a > mx) {
      mx = a;
      arg = i;
    }
  }
  if (mx == 0.0) fail(errc::zero_vector, "cannot canonicalize the zero vector");
  const bool flip = x[arg] < 0.0;
  for (double& v : x) {
    v /= mx;  // the maximal entry lands on exactly +-1
    if (flip) v = -v;
    if (v == 0.0) v = 0.0;  // squash -0.0
  }
}

EigenPair make_certified_pair(const Hypergraph& g, OperatorTag op, double lambda, std::vector<double> x) {
  canonicalize(x);
  EigenPair p;
  p.lambda = lambda;
  p.residual = eigen_residual(g, op, lambda, x);
  p.x = std::move(x);
  p.op = op;
  return p;
}

}  // namespace hyperspec
