#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "checks.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/tensor_ops.hpp"

using namespace hyperspec;
using testutil::code_of;

namespace {

// Naive per-vertex evaluation, written independently of apply_operator but
// with the same association (left fold before the pivot, right fold after,
// ascending incident edges) so agreement must be bitwise.
std::vector<double> oracle_apply(const Hypergraph& g, OperatorTag op, const std::vector<double>& x) {
  const int k = g.k();
  std::vector<double> y(static_cast<size_t>(g.n()));
  for (Vertex i = 1; i <= g.n(); ++i) {
    double adj = 0.0;
    for (int j : g.incident(i)) {
      const Edge& e = g.edge(j);
      int pos = 0;
      while (e[static_cast<size_t>(pos)] != i) ++pos;
      double before = 1.0;
      for (int t = 0; t < pos; ++t) before = before * x[static_cast<size_t>(e[static_cast<size_t>(t)] - 1)];
      double after = 1.0;
      for (int t = k - 1; t > pos; --t) after = x[static_cast<size_t>(e[static_cast<size_t>(t)] - 1)] * after;
      adj += before * after;
    }
    double dpart = 1.0;
    for (int t = 0; t < k - 1; ++t) dpart *= x[static_cast<size_t>(i - 1)];
    dpart *= static_cast<double>(g.degree(i));
    switch (op) {
      case OperatorTag::Adjacency: y[static_cast<size_t>(i - 1)] = adj; break;
      case OperatorTag::Laplacian: y[static_cast<size_t>(i - 1)] = dpart - adj; break;
      case OperatorTag::SignlessLaplacian: y[static_cast<size_t>(i - 1)] = dpart + adj; break;
    }
  }
  return y;
}

Hypergraph random_graph(std::mt19937& gen) {
  std::uniform_int_distribution<int> kd(2, 5);
  const int k = kd(gen);
  std::uniform_int_distribution<int> nd(k, 10);
  const int n = nd(gen);
  std::uniform_int_distribution<int> md(1, 8);
  const int want = md(gen);
  std::set<std::vector<int>> edges;
  std::uniform_int_distribution<int> vd(1, n);
  for (int tries = 0; tries < 200 && static_cast<int>(edges.size()) < want; ++tries) {
    std::set<int> e;
    while (static_cast<int>(e.size()) < k) e.insert(vd(gen));
    edges.insert(std::vector<int>(e.begin(), e.end()));
  }
  return make_hypergraph(k, n, std::vector<std::vector<int>>(edges.begin(), edges.end()));
}

std::vector<double> random_vector(std::mt19937& gen, int n) {
  std::uniform_real_distribution<double> ud(-1.0, 1.0);
  std::bernoulli_distribution zero(0.3);
  std::vector<double> x(static_cast<size_t>(n));
  for (double& v : x) v = zero(gen) ? 0.0 : ud(gen);
  return x;
}

}  // namespace

TEST_CASE("operator tags") {
  CHECK(std::string(operator_tag_name(OperatorTag::Adjacency)) == "A");
  CHECK(std::string(operator_tag_name(OperatorTag::Laplacian)) == "L");
  CHECK(std::string(operator_tag_name(OperatorTag::SignlessLaplacian)) == "Q");
}

TEST_CASE("apply on the all-ones vector reads off degrees") {
  Hypergraph g = build_s_cycle({6, 3, 4});  // 2-regular
  std::vector<double> ones(12, 1.0);
  for (double v : apply_operator(g, OperatorTag::Adjacency, ones)) CHECK(v == 2.0);
  for (double v : apply_operator(g, OperatorTag::Laplacian, ones)) CHECK(v == 0.0);
  for (double v : apply_operator(g, OperatorTag::SignlessLaplacian, ones)) CHECK(v == 4.0);
}

TEST_CASE("indicator vectors are exact Laplacian fixed points") {
  Hypergraph g = build_s_cycle({5, 2, 3});
  for (Vertex i = 1; i <= g.n(); ++i) {
    std::vector<double> x(static_cast<size_t>(g.n()), 0.0);
    x[static_cast<size_t>(i - 1)] = 1.0;
    std::vector<double> y = apply_operator(g, OperatorTag::Laplacian, x);
    for (Vertex j = 1; j <= g.n(); ++j)
      CHECK(y[static_cast<size_t>(j - 1)] == (j == i ? static_cast<double>(g.degree(i)) : 0.0));
  }
}

TEST_CASE("apply is (k-1)-homogeneous, exactly for powers of two") {
  Hypergraph g = build_s_cycle({4, 2, 4});
  std::mt19937 gen(7);
  std::vector<double> x = random_vector(gen, g.n());
  std::vector<double> x2 = x;
  for (double& v : x2) v *= 2.0;
  const double scale = 8.0;  // 2^(k-1)
  std::vector<double> a = apply_operator(g, OperatorTag::SignlessLaplacian, x);
  std::vector<double> b = apply_operator(g, OperatorTag::SignlessLaplacian, x2);
  for (size_t i = 0; i < a.size(); ++i) CHECK(b[i] == scale * a[i]);
}

TEST_CASE("Q - L equals 2A up to roundoff") {
  Hypergraph g = build_s_cycle({5, 3, 4});
  std::mt19937 gen(11);
  std::vector<double> x = random_vector(gen, g.n());
  std::vector<double> q = apply_operator(g, OperatorTag::SignlessLaplacian, x);
  std::vector<double> l = apply_operator(g, OperatorTag::Laplacian, x);
  std::vector<double> a = apply_operator(g, OperatorTag::Adjacency, x);
  for (size_t i = 0; i < q.size(); ++i)
    CHECK(q[i] - l[i] == doctest::Approx(2.0 * a[i]).epsilon(1e-12));
}

TEST_CASE("apply matches the naive oracle bitwise on random graphs") {
  std::mt19937 gen(20260822);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = random_graph(gen);
    std::vector<double> x = random_vector(gen, g.n());
    for (OperatorTag op :
         {OperatorTag::Adjacency, OperatorTag::Laplacian, OperatorTag::SignlessLaplacian}) {
      std::vector<double> fast = apply_operator(g, op, x);
      std::vector<double> slow = oracle_apply(g, op, x);
      REQUIRE(fast.size() == slow.size());
      for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == slow[i]);
    }
  }
}

TEST_CASE("eigen_residual certifies and rejects") {
  Hypergraph g = build_s_cycle({4, 2, 4});
  std::vector<double> e1(8, 0.0);
  e1[0] = 1.0;
  CHECK(eigen_residual(g, OperatorTag::Laplacian, 2.0, e1) == 0.0);
  CHECK(eigen_residual(g, OperatorTag::Laplacian, 2.5, e1) == 0.5);
  CHECK(code_of([&] { eigen_residual(g, OperatorTag::Laplacian, 0.0, std::vector<double>(8, 0.0)); }) ==
        errc::zero_vector);
  CHECK(code_of([&] { eigen_residual(g, OperatorTag::Laplacian, 0.0, std::vector<double>(5, 1.0)); }) ==
        errc::length_mismatch);
  CHECK(code_of([&] { apply_operator(g, OperatorTag::Adjacency, std::vector<double>(9, 1.0)); }) ==
        errc::length_mismatch);
}

TEST_CASE("canonicalize lands on max-norm 1 with a positive leader") {
  std::vector<double> a{0.0, -2.0};
  canonicalize(a);
  CHECK(a == std::vector<double>{0.0, 1.0});
  CHECK_FALSE(std::signbit(a[0]));  // -0.0 squashed

  std::vector<double> b{3.0, -3.0};
  canonicalize(b);
  CHECK(b == std::vector<double>{1.0, -1.0});

  std::vector<double> c{-5.0, 5.0};
  canonicalize(c);
  CHECK(c == std::vector<double>{1.0, -1.0});

  std::vector<double> d{0.3, -0.7, 0.1};
  canonicalize(d);
  CHECK(d[1] == 1.0);  // exact after dividing by the max magnitude

  std::vector<double> z{0.0, 0.0};
  CHECK(code_of([&] { canonicalize(z); }) == errc::zero_vector);
}

TEST_CASE("make_certified_pair canonicalizes and certifies") {
  Hypergraph g = build_s_cycle({4, 2, 4});
  std::vector<double> x(8, 0.0);
  x[2] = -0.25;
  EigenPair p = make_certified_pair(g, OperatorTag::Laplacian, 2.0, x);
  CHECK(p.x[2] == 1.0);
  CHECK(p.residual == 0.0);
  CHECK(p.lambda == 2.0);
  CHECK(p.op == OperatorTag::Laplacian);
}
