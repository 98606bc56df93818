#pragma once

#include <vector>

#include "rgd/exactmath/matrix.hpp"
#include "rgd/exactmath/polynomial.hpp"
#include "rgd/graphgen/regular_graph.hpp"

namespace rgd {

enum class Criterion { A, D };

char to_char(Criterion c);
/// 'a'/'A' or 'd'/'D'; throws InvalidArgument otherwise.
Criterion criterion_from_char(char c);

/// Elementary symmetric functions S_0..S_{v-1} of the nontrivial Laplacian eigenvalues
/// of a connected regular graph.
struct SymVector {
  int v = 0;
  std::vector<BigInt> s;

  friend bool operator==(const SymVector&, const SymVector&) = default;
};

/// Exact A- and D-values of Lambda[x] for one graph.
struct CriterionValue {
  BigRational a_value;
  BigInt d_value;
  BigInt x;
};

/// delta I - T.
IntMatrix graph_laplacian(const Graph& g);
/// Lambda[x] = (delta + v x) I - T - x J.
IntMatrix augmented_laplacian(const Graph& g, const BigInt& x);

/// Reads S_j(psi) off char_poly(delta I - T). Throws InternalError if the constant
/// coefficient is nonzero or some S_j is not positive.
SymVector sym_vector(const Graph& g);
SymVector sym_vector(const RegularGraph& g);
/// Same coefficients for any regular graph, connected or not; entries may be zero.
SymVector laplacian_sym_vector(const Graph& g);

/// D(psi, x) = sum_j (v x)^(v-1-j) S_j.
IntPolynomial d_poly(const SymVector& s);

BigInt d_value(const SymVector& s, const BigInt& x);
/// A(psi, x) = v (v-1) D(x) / D'(x).
BigRational a_value(const SymVector& s, const BigInt& x);
/// v * A(psi, x) = (v-1) D / (dD/du) with u = v x; the scale of published value listings.
BigRational a_value_scaled(const SymVector& s, const BigInt& x);
CriterionValue criterion_value(const SymVector& s, const BigInt& x);

/// D_a D'_b - D_b D'_a; positive at x >= 0 exactly when A(a, x) > A(b, x).
IntPolynomial a_comparison_poly(const SymVector& a, const SymVector& b);
/// D_a - D_b.
IntPolynomial d_comparison_poly(const SymVector& a, const SymVector& b);
IntPolynomial comparison_poly(Criterion c, const SymVector& a, const SymVector& b);

}  // namespace rgd
