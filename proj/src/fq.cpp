#include "gradedlie/fq.hpp"

#include <algorithm>
#include <mutex>

namespace glie {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Conway polynomials (ascending coefficients, monic) for the extensions this
// workbench configures.  Shipping them as data keeps extension-field
// representations reproducible across machines.
const std::map<std::pair<int, int>, std::vector<int>> kConwayTable = {
    {{3, 2}, {2, 2, 1}},     // x^2 + 2x + 2
    {{3, 3}, {1, 2, 0, 1}},  // x^3 + 2x + 1
    {{5, 2}, {2, 4, 1}},     // x^2 + 4x + 2
    {{5, 3}, {3, 3, 0, 1}},  // x^3 + 3x + 3
    {{7, 2}, {3, 6, 1}},     // x^2 + 6x + 3
};

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

FqField::FqField(int p, int r, std::vector<int> modulus)
    : p_(p), r_(r), q_(ipow(p, r)), modulus_(std::move(modulus)) {
  // Polynomial multiplication mod (modulus, p), tabulated once.
  auto decode = [&](int a) {
    std::vector<int> c(r_);
    for (int i = 0; i < r_; ++i) {
      c[i] = a % p_;
      a /= p_;
    }
    return c;
  };
  auto encode = [&](const std::vector<int>& c) {
    int a = 0;
    for (int i = r_ - 1; i >= 0; --i) a = a * p_ + c[i];
    return a;
  };

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  for (int a = 0; a < q_; ++a) {
    auto ca = decode(a);
    std::vector<int> cn(r_);
    for (int i = 0; i < r_; ++i) cn[i] = (p_ - ca[i]) % p_;
    neg_[a] = encode(cn);
    for (int b = 0; b < q_; ++b) {
      auto cb = decode(b);
      std::vector<int> cs(r_);
      for (int i = 0; i < r_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
      add_[static_cast<size_t>(a) * q_ + b] = encode(cs);

      std::vector<int> prod(2 * r_ - 1, 0);
      for (int i = 0; i < r_; ++i)
        for (int j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
      // reduce by the monic modulus
      for (int d = 2 * r_ - 2; d >= r_; --d) {
        int c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < r_; ++i)
          prod[d - r_ + i] = ((prod[d - r_ + i] - c * modulus_[i]) % p_ + p_) % p_;
      }
      prod.resize(r_);
      mul_[static_cast<size_t>(a) * q_ + b] = encode(prod);
    }
  }

  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b)
      if (mul_[static_cast<size_t>(a) * q_ + b] == 1) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] == 0)
      throw std::invalid_argument("FqField: modulus is not irreducible over F_p");
  }

  for (int g = 1; g < q_; ++g) {
    int x = g, ord = 1;
    while (x != 1) {
      x = mul_[static_cast<size_t>(x) * q_ + g];
      ++ord;
    }
    if (ord == q_ - 1) {
      gen_ = g;
      break;
    }
  }
}

const FqField* FqField::get(int p, int r, std::vector<int> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("FqField: p must be prime");
  if (p == 2) throw std::invalid_argument("FqField: characteristic 2 is unsupported");
  if (r < 1) throw std::invalid_argument("FqField: r must be positive");
  if (r == 1) {
    modulus = {0, 1};  // x, a placeholder; unused for prime fields
  } else if (modulus.empty()) {
    auto it = kConwayTable.find({p, r});
    if (it == kConwayTable.end())
      throw std::invalid_argument("FqField: no built-in modulus for p=" + std::to_string(p) +
                                  ", r=" + std::to_string(r) + "; pass one explicitly");
    modulus = it->second;
  } else {
    if (static_cast<int>(modulus.size()) != r + 1 || modulus.back() != 1)
      throw std::invalid_argument("FqField: modulus must be monic of degree r");
    for (int& c : modulus) c = ((c % p) + p) % p;
  }

  static std::mutex mu;
  static std::map<std::tuple<int, int, std::vector<int>>, std::unique_ptr<FqField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(p, r, modulus);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::unique_ptr<FqField>(new FqField(p, r, modulus))).first;
  return it->second.get();
}

int FqField::pow(int a, long e) const {
  if (a == 0) {
    if (e < 0) throw std::domain_error("FqField::pow: 0 to negative power");
    return e == 0 ? 1 : 0;
  }
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  e %= (q_ - 1);
  int r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<int> FqField::coeffs(int a) const {
  std::vector<int> c(r_);
  for (int i = 0; i < r_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int FqField::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) > r_)
    throw std::invalid_argument("FqField::from_coeffs: too many coefficients");
  int a = 0;
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
    int ci = ((c[i] % p_) + p_) % p_;
    a = a * p_ + ci;
  }
  return a;
}

int FqField::root_of_unity(int m) const {
  if (m <= 0 || (q_ - 1) % m != 0)
    throw std::domain_error("FqField::root_of_unity: order does not divide q-1");
  return pow(gen_, (q_ - 1) / m);
}

bool FqField::is_square(int a) const {
  if (a == 0) return false;
  return pow(a, (q_ - 1) / 2) == 1;
}

std::string FqField::to_string(int a) const {
  if (r_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s = "[";
  for (int i = 0; i < r_; ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

}  // namespace glie
