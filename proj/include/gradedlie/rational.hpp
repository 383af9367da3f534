// Exact rational arithmetic (GMP-backed) plus parsing/printing helpers.
// All interchange formats write rationals as "p/q" strings, integers as "p".
#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace glie {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat ratio(long num, long den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Largest integer <= r.
inline Int floor_int(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline Int ceil_int(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

inline long to_long(const Int& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return n.get_si();
}

// "3", "-1/4" -> Rat. Rejects malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
  r.canonicalize();
  return r;
}

// Canonical form: integers print without the "/1".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// q^e for integer e (e may be negative).
inline Rat q_pow(long q, long e) {
  Rat r;
  if (e >= 0) {
    Int n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    r = Rat(n);
  } else {
    Int n;
    mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(-e));
    r = ratio(Int(1), n);
  }
  return r;
}

}  // namespace glie
