// Exact scalars a + b*sqrt(q), a,b in Q.  Normalized orbital integrals pick
// up half-integer powers of q from the |D^G|^{1/2} factor on ramified
// elements; this keeps those values exact.
#pragma once

#include <stdexcept>
#include <string>

#include "gradedlie/rational.hpp"

namespace glie {

struct QSqrt {
  Rat a, b;  // value = a + b*sqrt(q)
  long q = 0;

  QSqrt() : a(0), b(0), q(0) {}
  explicit QSqrt(Rat r) : a(std::move(r)), b(0), q(0) {}
  QSqrt(Rat a_, Rat b_, long q_) : a(std::move(a_)), b(std::move(b_)), q(q_) {
    if (b == 0) q = 0;
  }

  // q^{k/2} for integer k; odd k contributes one sqrt(q) factor.
  static QSqrt q_half_pow(long q, long k) {
    if (k % 2 == 0) return QSqrt(q_pow(q, k / 2));
    return QSqrt(Rat(0), q_pow(q, (k - 1) / 2), q);  // k odd: k-1 even, division exact
  }

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  friend QSqrt operator+(const QSqrt& x, const QSqrt& y) {
    return QSqrt(x.a + y.a, x.b + y.b, merge_q(x, y));
  }
  friend QSqrt operator-(const QSqrt& x, const QSqrt& y) {
    return QSqrt(x.a - y.a, x.b - y.b, merge_q(x, y));
  }
  friend QSqrt operator*(const QSqrt& x, const QSqrt& y) {
    long q = merge_q(x, y);
    return QSqrt(x.a * y.a + x.b * y.b * Rat(q), x.a * y.b + x.b * y.a, q);
  }
  friend QSqrt operator/(const QSqrt& x, const QSqrt& y) {
    long q = merge_q(x, y);
    Rat n = y.a * y.a - y.b * y.b * Rat(q);
    if (n == 0) throw std::domain_error("QSqrt: division by zero");
    QSqrt conj(y.a, -y.b, q);
    QSqrt prod = x * conj;
    return QSqrt(prod.a / n, prod.b / n, q);
  }
  QSqrt operator-() const { return QSqrt(-a, -b, q); }
  friend bool operator==(const QSqrt& x, const QSqrt& y) {
    return x.a == y.a && x.b == y.b;  // sqrt(q) irrational for our q
  }

  std::string str() const {
    if (b == 0) return rat_str(a);
    std::string s = rat_str(a) + "+" + rat_str(b) + "*sqrt(" + std::to_string(q) + ")";
    return s;
  }

 private:
  static long merge_q(const QSqrt& x, const QSqrt& y) {
    if (x.q != 0 && y.q != 0 && x.q != y.q)
      throw std::invalid_argument("QSqrt: mixed sqrt(q) bases");
    return x.q != 0 ? x.q : y.q;
  }
};

}  // namespace glie
