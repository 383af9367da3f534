// Dense exact linear algebra over a runtime field (F_q or Q).
// No floating point anywhere: rank, kernel and solve are exact.
#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gradedlie/fq.hpp"
#include "gradedlie/rational.hpp"

namespace glie {

// Field abstractions used by Mat<Dom>.  Elem is a plain value; the domain
// object carries whatever context arithmetic needs.
struct FqDom {
  using Elem = int;
  const FqField* F;
  explicit FqDom(const FqField* f) : F(f) {}
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return F->add(a, b); }
  Elem sub(Elem a, Elem b) const { return F->sub(a, b); }
  Elem mul(Elem a, Elem b) const { return F->mul(a, b); }
  Elem neg(Elem a) const { return F->neg(a); }
  Elem inv(Elem a) const { return F->inv(a); }
  bool is_zero(Elem a) const { return a == 0; }
};

struct QDom {
  using Elem = Rat;
  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("QDom::inv: division by zero");
    return Rat(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
};

template <class Dom>
class Mat {
 public:
  using Elem = typename Dom::Elem;

  Mat(Dom dom, size_t rows, size_t cols)
      : dom_(dom), rows_(rows), cols_(cols), a_(rows * cols, dom.zero()) {}

  static Mat identity(Dom dom, size_t n) {
    Mat m(dom, n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = dom.one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const Dom& dom() const { return dom_; }

  Elem& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Elem& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Mat: shape mismatch");
    Mat z(x.dom_, x.rows_, y.cols_);
    for (size_t i = 0; i < x.rows_; ++i)
      for (size_t k = 0; k < x.cols_; ++k) {
        const Elem& xik = x(i, k);
        if (x.dom_.is_zero(xik)) continue;
        for (size_t j = 0; j < y.cols_; ++j)
          z(i, j) = x.dom_.add(z(i, j), x.dom_.mul(xik, y(k, j)));
      }
    return z;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
    Mat z(x.dom_, x.rows_, x.cols_);
    for (size_t i = 0; i < x.a_.size(); ++i) z.a_[i] = x.dom_.add(x.a_[i], y.a_[i]);
    return z;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
    for (size_t i = 0; i < x.a_.size(); ++i) {
      if (x.dom_.is_zero(x.dom_.sub(x.a_[i], y.a_[i])) == false) return false;
    }
    return true;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: shape mismatch");
    std::vector<Elem> w(rows_, dom_.zero());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (!dom_.is_zero((*this)(i, j))) w[i] = dom_.add(w[i], dom_.mul((*this)(i, j), v[j]));
    return w;
  }

  // Row-reduce in place; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t sel = row;
      while (sel < rows_ && dom_.is_zero((*this)(sel, col))) ++sel;
      if (sel == rows_) continue;
      for (size_t j = 0; j < cols_; ++j) std::swap((*this)(row, j), (*this)(sel, j));
      Elem piv_inv = dom_.inv((*this)(row, col));
      for (size_t j = col; j < cols_; ++j) (*this)(row, j) = dom_.mul((*this)(row, j), piv_inv);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row || dom_.is_zero((*this)(i, col))) continue;
        Elem f = (*this)(i, col);
        for (size_t j = col; j < cols_; ++j)
          (*this)(i, j) = dom_.sub((*this)(i, j), dom_.mul(f, (*this)(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    Mat copy = *this;
    return copy.rref().size();
  }

  // Basis of the right kernel {v : Mv = 0}.
  std::vector<std::vector<Elem>> kernel_basis() const {
    Mat red = *this;
    auto pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (size_t freec = 0; freec < cols_; ++freec) {
      if (is_pivot[freec]) continue;
      std::vector<Elem> v(cols_, dom_.zero());
      v[freec] = dom_.one();
      for (size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = dom_.neg(red(r, freec));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of Mx = b, or nullopt when inconsistent.
  std::optional<std::vector<Elem>> solve(const std::vector<Elem>& b) const {
    if (b.size() != rows_) throw std::invalid_argument("Mat::solve: shape mismatch");
    Mat aug(dom_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_) = b[i];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Elem> x(cols_, dom_.zero());
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
  }

  std::optional<Mat> inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: not square");
    Mat aug(dom_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, cols_ + i) = dom_.one();
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_) return std::nullopt;
    for (size_t r = 0; r < rows_; ++r)
      if (pivots[r] != r) return std::nullopt;
    Mat inv(dom_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) inv(i, j) = aug(i, cols_ + j);
    return inv;
  }

 private:
  Dom dom_;
  size_t rows_, cols_;
  std::vector<Elem> a_;
};

using MatF = Mat<FqDom>;
using MatQ = Mat<QDom>;

}  // namespace glie
