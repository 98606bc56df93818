#include "rgd/exactmath/polynomial.hpp"

#include <sstream>
#include <utility>

#include "rgd/error.hpp"

namespace rgd {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  if (coeffs_.empty()) return 0;
  // Homogenized Horner: den^d * p(num/den) stays integral.
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc = den^(d) * p(x) where den_pow = den^(d+1)
  BigRational r(acc, BigInt(den_pow / den));
  r.canonicalize();
  return r;
}

int IntPolynomial::sign_at(const BigRational& x) const {
  if (coeffs_.empty()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (coeffs_.empty()) return {};
  BigInt g = content();
  if (sgn(coeffs_.back()) < 0) g = -g;
  std::vector<BigInt> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const BigInt& lb = b.leading();
  BigInt scale = abs(lb);
  int sign_lb = sgn(lb);
  // r <- |lb| * r - sign(lb) * r_top * x^(dr - db) * b, which scales by a positive factor each step.
  int steps = a.degree() - db + 1;
  int dr = a.degree();
  while (dr >= db && steps > 0) {
    BigInt top = r[dr];
    for (auto& c : r) c *= scale;
    if (top != 0) {
      BigInt f = sign_lb > 0 ? BigInt(top) : BigInt(-top);
      for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.coeffs()[i];
    }
    r.resize(dr);
    --dr;
    --steps;
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw InternalError("exact_quotient: divisor does not divide");
  std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> q(a.degree() - db + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw InternalError("exact_quotient: divisor does not divide");
    }
    BigInt c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b.coeffs()[i];
    q[k] = std::move(c);
  }
  for (const auto& c : r) {
    if (c != 0) throw InternalError("exact_quotient: nonzero remainder");
  }
  return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = signed_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  IntPolynomial g = gcd(p, p.derivative());
  if (g.is_zero()) return p.primitive_part();
  return exact_quotient(p.primitive_part(), g).primitive_part();
}

std::vector<IntPolynomial> square_free_factorization(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("square-free factorization of the zero polynomial");
  std::vector<IntPolynomial> out;
  IntPolynomial f = p.primitive_part();
  if (f.degree() == 0) return out;
  IntPolynomial fp = f.derivative();
  IntPolynomial a = gcd(f, fp);
  IntPolynomial b = exact_quotient(f, a).primitive_part();
  IntPolynomial c = exact_quotient(fp, a);
  IntPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    IntPolynomial factor = gcd(b, d);
    out.push_back(factor);
    // b/factor and d/factor are exact up to the primitive normalization of factor.
    b = exact_quotient(b, factor);
    c = exact_quotient(d, factor);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

IntPolynomial odd_multiplicity_part(const IntPolynomial& p) {
  IntPolynomial out = IntPolynomial::constant(1);
  auto factors = square_free_factorization(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) out = out * factors[i];
  return out.primitive_part();
}

}  // namespace rgd
