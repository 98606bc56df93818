#include "rgd/criteria/criteria.hpp"

#include "rgd/error.hpp"

namespace rgd {

char to_char(Criterion c) { return c == Criterion::A ? 'a' : 'd'; }

Criterion criterion_from_char(char c) {
  switch (c) {
    case 'a':
    case 'A':
      return Criterion::A;
    case 'd':
    case 'D':
      return Criterion::D;
    default:
      throw InvalidArgument(std::string("unknown criterion '") + c + "'");
  }
}

IntMatrix graph_laplacian(const Graph& g) { return augmented_laplacian(g, 0); }

IntMatrix augmented_laplacian(const Graph& g, const BigInt& x) {
  const int n = g.order();
  if (n == 0) return IntMatrix(0);
  const int delta = g.degree(0);
  if (!g.is_regular(delta)) throw InvalidArgument("augmented_laplacian: graph is not regular");
  IntMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = delta + n * x - x;
      } else {
        m(i, j) = -x - (g.has_edge(i, j) ? 1 : 0);
      }
    }
  }
  return m;
}

SymVector laplacian_sym_vector(const Graph& g) {
  const int v = g.order();
  const int delta = v > 0 ? g.degree(0) : 0;
  if (!g.is_regular(delta)) throw InvalidArgument("graph is not regular");
  IntPolynomial chi = char_poly(graph_laplacian(g));
  SymVector out;
  out.v = v;
  out.s.resize(static_cast<std::size_t>(v));
  for (int j = 0; j < v; ++j) out.s[j] = abs(chi.coeff(static_cast<std::size_t>(v - j)));
  return out;
}

SymVector sym_vector(const Graph& g) {
  const int v = g.order();
  IntPolynomial chi = char_poly(graph_laplacian(g));
  if (chi.coeff(0) != 0) throw InternalError("graph not regular/connected as claimed");
  SymVector out;
  out.v = v;
  out.s.resize(static_cast<std::size_t>(v));
  for (int j = 0; j < v; ++j) {
    out.s[j] = abs(chi.coeff(static_cast<std::size_t>(v - j)));
    if (out.s[j] <= 0) throw InternalError("graph not regular/connected as claimed");
  }
  return out;
}

SymVector sym_vector(const RegularGraph& g) { return sym_vector(g.graph()); }

IntPolynomial d_poly(const SymVector& s) {
  const int v = s.v;
  std::vector<BigInt> c(static_cast<std::size_t>(v));
  BigInt vp = 1;  // v^(v-1-j), built from j = v-1 downwards
  for (int j = v - 1; j >= 0; --j) {
    c[v - 1 - j] = vp * s.s[j];
    vp *= v;
  }
  return IntPolynomial(std::move(c));
}

BigInt d_value(const SymVector& s, const BigInt& x) { return d_poly(s).evaluate(x); }

BigRational a_value(const SymVector& s, const BigInt& x) {
  IntPolynomial d = d_poly(s);
  BigInt dx = d.derivative().evaluate(x);
  if (dx == 0) throw InvalidArgument("A-value undefined: D'(x) vanishes");
  BigRational a(BigInt(s.v) * (s.v - 1) * d.evaluate(x), dx);
  a.canonicalize();
  return a;
}

BigRational a_value_scaled(const SymVector& s, const BigInt& x) {
  BigRational a = a_value(s, x) * s.v;
  a.canonicalize();
  return a;
}

CriterionValue criterion_value(const SymVector& s, const BigInt& x) {
  return {a_value(s, x), d_value(s, x), x};
}

namespace {

void require_same_order(const SymVector& a, const SymVector& b) {
  if (a.v != b.v) throw InvalidArgument("comparison of graphs with different orders");
}

}  // namespace

IntPolynomial a_comparison_poly(const SymVector& a, const SymVector& b) {
  require_same_order(a, b);
  IntPolynomial da = d_poly(a), db = d_poly(b);
  return da * db.derivative() - db * da.derivative();
}

IntPolynomial d_comparison_poly(const SymVector& a, const SymVector& b) {
  require_same_order(a, b);
  return d_poly(a) - d_poly(b);
}

IntPolynomial comparison_poly(Criterion c, const SymVector& a, const SymVector& b) {
  return c == Criterion::A ? a_comparison_poly(a, b) : d_comparison_poly(a, b);
}

}  // namespace rgd
