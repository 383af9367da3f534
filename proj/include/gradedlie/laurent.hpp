// Truncated Laurent series over F_q: elements of F_q((t)) known on a window
// of exponents.  Coefficients at exponent >= prec are unknown; everything
// below the stored window is known to vanish.  Ring operations track
// precision pessimistically (min rule) and report effective precision.
#pragma once

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradedlie/fq.hpp"

namespace glie {

// Sentinel precision for exactly-known series (Laurent polynomials).
inline constexpr long kExactPrec = LONG_MAX / 4;

struct Valuation {
  enum Kind { Finite, AtLeast, Infinite } kind;
  long v;  // meaningful for Finite ("= v") and AtLeast (">= v")

  static Valuation finite(long v) { return {Finite, v}; }
  static Valuation at_least(long v) { return {AtLeast, v}; }
  static Valuation infinite() { return {Infinite, 0}; }

  bool operator==(const Valuation&) const = default;
  std::string str() const {
    if (kind == Finite) return std::to_string(v);
    if (kind == AtLeast) return ">=" + std::to_string(v);
    return "+inf";
  }
};

class Laurent {
 public:
  explicit Laurent(const FqField* F) : F_(F), lo_(0), prec_(kExactPrec) {}

  static Laurent zero(const FqField* F) { return Laurent(F); }
  static Laurent constant(const FqField* F, int code) { return monomial(F, 0, code); }
  static Laurent monomial(const FqField* F, long n, int code) {
    Laurent f(F);
    if (code != 0) {
      f.lo_ = n;
      f.c_ = {code};
    }
    return f;
  }

  const FqField* field() const { return F_; }
  long prec() const { return prec_; }
  bool is_exact() const { return prec_ == kExactPrec; }

  // Coefficient at exponent n; throws if n is beyond the known window.
  int coeff(long n) const {
    if (n >= prec_) throw std::domain_error("Laurent::coeff: exponent beyond precision");
    if (n < lo_ || n >= lo_ + static_cast<long>(c_.size())) return 0;
    return c_[n - lo_];
  }

  bool known_zero() const { return c_.empty() && is_exact(); }

  Valuation valuation() const {
    if (c_.empty()) return is_exact() ? Valuation::infinite() : Valuation::at_least(prec_);
    return Valuation::finite(lo_);
  }

  // Smallest exponent with a nonzero known coefficient; requires one exists.
  long val_finite() const {
    auto v = valuation();
    if (v.kind != Valuation::Finite)
      throw std::domain_error("Laurent::val_finite: no known nonzero coefficient");
    return v.v;
  }

  int leading_coeff() const { return c_.empty() ? 0 : c_.front(); }

  Laurent truncated(long new_prec) const {
    Laurent r(F_);
    r.prec_ = std::min(prec_, new_prec);
    r.lo_ = lo_;
    for (long n = lo_; n < lo_ + static_cast<long>(c_.size()) && n < r.prec_; ++n)
      r.c_.push_back(c_[n - lo_]);
    r.normalize();
    return r;
  }

  Laurent shifted(long k) const {  // multiply by t^k
    Laurent r = *this;
    r.lo_ += k;
    if (r.prec_ != kExactPrec) r.prec_ += k;
    return r;
  }

  friend Laurent operator+(const Laurent& f, const Laurent& g) {
    const FqField* F = check(f, g);
    Laurent r(F);
    r.prec_ = std::min(f.prec_, g.prec_);
    long lo = std::min(f.c_.empty() ? r.prec_ : f.lo_, g.c_.empty() ? r.prec_ : g.lo_);
    long hi = std::min({r.prec_, std::max(f.top(), g.top())});
    if (lo < hi) {
      r.lo_ = lo;
      r.c_.assign(hi - lo, 0);
      for (long n = lo; n < hi; ++n)
        r.c_[n - lo] = F->add(f.safe_coeff(n), g.safe_coeff(n));
    }
    r.normalize();
    return r;
  }

  friend Laurent operator-(const Laurent& f, const Laurent& g) { return f + (-g); }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& x : r.c_) x = F_->neg(x);
    return r;
  }

  Laurent scaled(int code) const {
    Laurent r = *this;
    if (code == 0) return Laurent(F_).with_prec(prec_ == kExactPrec ? kExactPrec : prec_);
    for (auto& x : r.c_) x = F_->mul(x, code);
    r.normalize();
    return r;
  }

  friend Laurent operator*(const Laurent& f, const Laurent& g) {
    const FqField* F = check(f, g);
    // known-zero factors keep the min-rule precision but have no terms
    long fp = f.c_.empty() ? (f.is_exact() ? kExactPrec : f.prec_) : f.lo_;
    long gp = g.c_.empty() ? (g.is_exact() ? kExactPrec : g.prec_) : g.lo_;
    long prec = kExactPrec;
    if (f.prec_ != kExactPrec) prec = std::min(prec, sat_add(f.prec_, gp));
    if (g.prec_ != kExactPrec) prec = std::min(prec, sat_add(g.prec_, fp));
    Laurent r(F);
    r.prec_ = prec;
    if (!f.c_.empty() && !g.c_.empty()) {
      long lo = f.lo_ + g.lo_;
      long hi = std::min(prec, f.top() + g.top() - 1);
      if (lo < hi) {
        r.lo_ = lo;
        r.c_.assign(hi - lo, 0);
        for (size_t i = 0; i < f.c_.size(); ++i) {
          if (f.c_[i] == 0) continue;
          for (size_t j = 0; j < g.c_.size(); ++j) {
            long n = f.lo_ + static_cast<long>(i) + g.lo_ + static_cast<long>(j);
            if (n >= hi) break;
            r.c_[n - lo] = F->add(r.c_[n - lo], F->mul(f.c_[i], g.c_[j]));
          }
        }
      }
    }
    r.normalize();
    return r;
  }

  // Multiplicative inverse; requires a known nonzero leading coefficient.
  Laurent inverse(long out_prec = kExactPrec) const {
    long v = val_finite();
    long terms;  // number of coefficients of the inverse we can certify
    if (is_exact() && out_prec == kExactPrec)
      throw std::invalid_argument("Laurent::inverse: unbounded inverse of a series; pass out_prec");
    if (out_prec == kExactPrec)
      terms = prec_ - v;  // inverse known to precision prec - 2v
    else
      terms = out_prec + v;
    if (!is_exact()) terms = std::min(terms, prec_ - v);
    if (terms <= 0) throw std::domain_error("Laurent::inverse: no certified terms");
    // invert the unit part u = t^{-v} f coefficient by coefficient
    std::vector<int> u(terms, 0), w(terms, 0);
    for (long i = 0; i < terms; ++i) u[i] = safe_known(v + i);
    int u0i = F_->inv(u[0]);
    w[0] = u0i;
    for (long k = 1; k < terms; ++k) {
      int s = 0;
      for (long i = 1; i <= k; ++i) s = F_->add(s, F_->mul(u[i], w[k - i]));
      w[k] = F_->neg(F_->mul(s, u0i));
    }
    Laurent r(F_);
    r.lo_ = -v;
    r.c_ = std::move(w);
    r.prec_ = -v + terms;
    r.normalize();
    return r;
  }

  // Square root with the same valuation parity trick avoided: requires even
  // valuation and a square leading coefficient.  char != 2 always here.
  Laurent sqrt() const {
    long v = val_finite();
    if (v % 2 != 0) throw std::domain_error("Laurent::sqrt: odd valuation");
    long terms = is_exact() ? kExactPrec : prec_ - v;
    if (is_exact()) {
      // exact polynomials: compute enough terms to cover the window, then
      // verify squaring reproduces the input exactly
      terms = static_cast<long>(c_.size()) + 1;
    }
    std::vector<int> u(terms, 0);
    for (long i = 0; i < terms && (is_exact() ? i < static_cast<long>(c_.size()) : true); ++i)
      u[i] = safe_known(v + i);
    int s0 = sqrt_in_field(u[0]);
    std::vector<int> s(terms, 0);
    s[0] = s0;
    int inv2s0 = F_->inv(F_->add(s0, s0));
    for (long k = 1; k < terms; ++k) {
      int acc = u[k];
      for (long i = 1; i < k; ++i) acc = F_->sub(acc, F_->mul(s[i], s[k - i]));
      s[k] = F_->mul(acc, inv2s0);
    }
    Laurent r(F_);
    r.lo_ = v / 2;
    r.c_ = std::move(s);
    r.prec_ = is_exact() ? v / 2 + terms : v / 2 + (prec_ - v);
    r.normalize();
    if (is_exact()) {
      Laurent chk = r * r;
      if (!(chk == *this))
        throw std::domain_error("Laurent::sqrt: input is not a perfect square");
      r.prec_ = kExactPrec;
    }
    return r;
  }

  bool operator==(const Laurent& g) const {
    if (F_ != g.F_) return false;
    long p = std::min(prec_, g.prec_);
    long lo = std::min(c_.empty() ? p : lo_, g.c_.empty() ? p : g.lo_);
    for (long n = lo; n < p; ++n)
      if (safe_coeff(n) != g.safe_coeff(n)) return false;
    // equal on the common window; exactness must match for full equality
    return prec_ == g.prec_;
  }

  std::map<long, int> terms() const {
    std::map<long, int> m;
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) m[lo_ + static_cast<long>(i)] = c_[i];
    return m;
  }

  std::string str() const;

 private:
  Laurent& with_prec(long p) {
    prec_ = p;
    return *this;
  }
  long top() const { return c_.empty() ? lo_ : lo_ + static_cast<long>(c_.size()); }
  int safe_coeff(long n) const {
    if (n < lo_ || n >= top()) return 0;
    return c_[n - lo_];
  }
  int safe_known(long n) const { return n >= prec_ ? 0 : safe_coeff(n); }
  static long sat_add(long a, long b) {
    if (a >= kExactPrec || b >= kExactPrec) return kExactPrec;
    return a + b;
  }
  int sqrt_in_field(int a) const {
    for (int x = 1; x < F_->q(); ++x)
      if (F_->mul(x, x) == a) return x;
    throw std::domain_error("Laurent::sqrt: leading coefficient is not a square");
  }
  static const FqField* check(const Laurent& f, const Laurent& g) {
    if (f.F_ != g.F_) throw std::invalid_argument("Laurent: mismatched fields");
    return f.F_;
  }
  void normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead) {
      c_.erase(c_.begin(), c_.begin() + lead);
      lo_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    if (prec_ != kExactPrec && !c_.empty()) {
      long hi = std::min(top(), prec_);
      if (hi <= lo_) {
        c_.clear();
      } else {
        c_.resize(hi - lo_);
      }
      while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    if (c_.empty()) lo_ = 0;
  }

  const FqField* F_;
  long lo_;
  std::vector<int> c_;
  long prec_;
};

inline std::string Laurent::str() const {
  std::string s;
  for (auto& [n, v] : terms()) {
    if (!s.empty()) s += " + ";
    s += F_->to_string(v) + "*t^" + std::to_string(n);
  }
  if (s.empty()) s = "0";
  if (!is_exact()) s += " + O(t^" + std::to_string(prec_) + ")";
  return s;
}

}  // namespace glie
