// Finite fields F_{p^r} with table-driven arithmetic.
//
// Elements are codes in [0, q) encoding polynomial coefficients base p
// (code = c_0 + c_1 p + ... + c_{r-1} p^{r-1}).  Prime fields are the r = 1
// case with the canonical representative itself as code.  Extension fields
// take an irreducible monic modulus; when none is given a fixed Conway-style
// table supplies one so representations are reproducible bit for bit.
//
// Fields are interned: descriptors with equal (p, r, modulus) share one
// immutable FqField, so pointer equality is field equality.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace glie {

class FqField {
 public:
  // modulus: ascending coefficients of a monic degree-r polynomial over F_p;
  // empty means "use the built-in table" (required only for r > 1).
  static const FqField* get(int p, int r = 1, std::vector<int> modulus = {});

  int p() const { return p_; }
  int r() const { return r_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("FqField::inv: division by zero");
    return inv_[a];
  }
  int div(int a, int b) const { return mul(a, inv(b)); }
  int pow(int a, long e) const;

  // Embedding of the prime field: n mod p as an element code.
  int from_int(long n) const {
    long m = n % p_;
    if (m < 0) m += p_;
    return static_cast<int>(m);
  }

  // Coefficient vector (length r) of an element code.
  std::vector<int> coeffs(int a) const;
  // Element code from coefficient vector over F_p.
  int from_coeffs(const std::vector<int>& c) const;

  // A fixed multiplicative generator (smallest code that generates F_q^x).
  int generator() const { return gen_; }
  // Order-m root of unity; throws unless m | q-1.
  int root_of_unity(int m) const;

  bool is_square(int a) const;  // a != 0 and a in (F_q^x)^2

  std::string to_string(int a) const;

 private:
  FqField(int p, int r, std::vector<int> modulus);
  int p_, r_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_, inv_;
  int gen_ = 0;
};

// Value type pairing a code with its field; used at module boundaries and in
// serialization.  Hot loops work on raw codes plus one FqField pointer.
struct Fq {
  const FqField* F = nullptr;
  int v = 0;

  Fq() = default;
  Fq(const FqField* f, int code) : F(f), v(code) {}

  friend Fq operator+(Fq a, Fq b) { return {check(a, b), a.F->add(a.v, b.v)}; }
  friend Fq operator-(Fq a, Fq b) { return {check(a, b), a.F->sub(a.v, b.v)}; }
  friend Fq operator*(Fq a, Fq b) { return {check(a, b), a.F->mul(a.v, b.v)}; }
  friend Fq operator/(Fq a, Fq b) { return {check(a, b), a.F->div(a.v, b.v)}; }
  Fq operator-() const { return {F, F->neg(v)}; }
  friend bool operator==(Fq a, Fq b) { return check(a, b) && a.v == b.v; }
  bool is_zero() const { return v == 0; }

 private:
  static const FqField* check(Fq a, Fq b) {
    if (a.F != b.F) throw std::invalid_argument("Fq: mismatched field descriptors");
    return a.F;
  }
};

}  // namespace glie
