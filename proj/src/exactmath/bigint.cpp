#include "rgd/exactmath/bigint.hpp"

#include <algorithm>

#include "rgd/error.hpp"

namespace rgd {

BigInt ceil(const BigRational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt floor(const BigRational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_decimal(const BigRational& q, int digits) {
  if (digits < 0) throw InvalidArgument("to_decimal: negative digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  BigInt num = abs(q.get_num()) * scale;
  const BigInt& den = q.get_den();
  BigInt quot, rem;
  mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (2 * rem >= den) ++quot;

  std::string s = quot.get_str();
  if (s.size() <= static_cast<std::size_t>(digits)) {
    s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
  }
  if (digits > 0) s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  if (sgn(q) < 0 && quot != 0) s.insert(0, "-");
  return s;
}

std::string to_grouped(const BigInt& x) {
  std::string digits = BigInt(abs(x)).get_str();
  std::string out;
  int count = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (count > 0 && count % 3 == 0) out.push_back(',');
    out.push_back(*it);
    ++count;
  }
  if (sgn(x) < 0) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace rgd
