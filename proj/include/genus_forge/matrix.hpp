#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace genus_forge {

/// Small dense square matrix over a commutative ring R (KElem, Laurent<F>).
/// R must provide zero_like(), one_like(), is_zero() and ring operators.
template <typename R>
class Matrix {
 public:
  Matrix(std::size_t n, const R& zero) : n_(n), e_(n * n, zero.zero_like()) {}

  explicit Matrix(std::vector<std::vector<R>> rows) : n_(rows.size()) {
    if (n_ == 0) throw std::invalid_argument("matrix: empty");
    e_.reserve(n_ * n_);
    for (auto& row : rows) {
      if (row.size() != n_) throw std::invalid_argument("matrix: not square");
      for (auto& x : row) e_.push_back(std::move(x));
    }
  }

  static Matrix identity(std::size_t n, const R& proto) {
    Matrix m(n, proto);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = proto.one_like();
    return m;
  }

  static Matrix diagonal(const std::vector<R>& d) {
    if (d.empty()) throw std::invalid_argument("matrix: empty diagonal");
    Matrix m(d.size(), d.front());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t size() const { return n_; }
  R& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

  std::vector<std::vector<R>> rows() const {
    std::vector<std::vector<R>> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i].assign(e_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                                                      e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
    return out;
  }

  Matrix transpose() const {
    Matrix t = *this;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(i, j) = (*this)(j, i);
    return t;
  }

  bool is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix: dimension mismatch");
    Matrix c(a.n_, a.e_.front());
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix: dimension mismatch");
    for (std::size_t i = 0; i < a.e_.size(); ++i) a.e_[i] += b.e_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.e_ == b.e_; }

  /// Laplace expansion along the first row; ranks here are at most ~6.
  R det() const { return minor_det(std::vector<std::size_t>(), 0); }

  /// Block-diagonal a (+) b.
  friend Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.n_ + b.n_, a.e_.front());
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t j = 0; j < a.n_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.n_; ++i)
      for (std::size_t j = 0; j < b.n_; ++j) m(a.n_ + i, a.n_ + j) = b(i, j);
    return m;
  }

 private:
  R minor_det(std::vector<std::size_t> used_cols, std::size_t row) const {
    const R& proto = e_.front();
    if (row == n_) return proto.one_like();
    R acc = proto.zero_like();
    bool negate = false;
    for (std::size_t j = 0; j < n_; ++j) {
      bool used = false;
      for (auto c : used_cols) used = used || c == j;
      if (used) continue;
      const R& entry = (*this)(row, j);
      if (!entry.is_zero()) {
        used_cols.push_back(j);
        R term = entry * minor_det(used_cols, row + 1);
        used_cols.pop_back();
        if (negate) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      negate = !negate;
    }
    return acc;
  }

  std::size_t n_;
  std::vector<R> e_;
};

}  // namespace genus_forge
