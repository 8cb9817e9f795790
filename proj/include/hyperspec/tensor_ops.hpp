#pragma once

#include <string>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

enum class OperatorTag { Adjacency, Laplacian, SignlessLaplacian };

const char* operator_tag_name(OperatorTag op) noexcept;  // "A" | "L" | "Q"

// Candidate H-eigenpair with certification data. x is canonical: max-norm 1
// with the first maximal-magnitude entry positive; residual is the max-norm
// defect of the eigen equation for that x under the tagged operator.
struct EigenPair {
  double lambda = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  OperatorTag op = OperatorTag::Laplacian;
};

// y_i = (T x^{k-1})_i for the tagged operator: the adjacency part sums, per
// incident edge, the product of the other k-1 entries (prefix/suffix
// products, no division); Laplacian subtracts it from d_i x_i^{k-1},
// signless Laplacian adds it. O(m*k) per call.
std::vector<double> apply_operator(const Hypergraph& g, OperatorTag op, const std::vector<double>& x);

// max_i |lambda * x_i^{k-1} - (T x^{k-1})_i|; zero iff exact H-eigenpair.
double eigen_residual(const Hypergraph& g, OperatorTag op, double lambda, const std::vector<double>& x);

// Rescales to max-norm 1 and flips signs so the first maximal-magnitude
// entry is positive. Errors on the zero vector.
void canonicalize(std::vector<double>& x);

// Canonicalizes a copy of x and attaches the certified residual.
EigenPair make_certified_pair(const Hypergraph& g, OperatorTag op, double lambda, std::vector<double> x);

}  // namespace hyperspec
