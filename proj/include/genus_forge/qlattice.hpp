#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "genus_forge/coord_ring.hpp"
#include "genus_forge/elliptic.hpp"
#include "genus_forge/ideals.hpp"
#include "genus_forge/laurent.hpp"
#include "genus_forge/matrix.hpp"

namespace genus_forge {

/// Symmetric Gram matrix M of a quadratic lattice, q(v) = v M v^t.
template <typename R>
class GramMatrix {
 public:
  explicit GramMatrix(Matrix<R> m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw std::domain_error("gram matrix is not symmetric");
  }
  explicit GramMatrix(std::vector<std::vector<R>> rows) : GramMatrix(Matrix<R>(std::move(rows))) {}

  static GramMatrix diagonal(const std::vector<R>& d) { return GramMatrix(Matrix<R>::diagonal(d)); }

  std::size_t rank() const { return m_.size(); }
  const Matrix<R>& matrix() const { return m_; }
  const R& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  R det() const { return m_.det(); }

  bool is_diagonal() const {
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (i != j && !m_(i, j).is_zero()) return false;
    return true;
  }

  friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }
  friend GramMatrix orthogonal_sum(const GramMatrix& a, const GramMatrix& b) {
    return GramMatrix(direct_sum(a.m_, b.m_));
  }

 private:
  Matrix<R> m_;
};

template <typename R>
R evaluate(const GramMatrix<R>& m, const std::vector<R>& v) {
  if (v.size() != m.rank()) throw std::invalid_argument("evaluate: vector length does not match rank");
  R acc = m(0, 0).zero_like();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    R row = m(0, 0).zero_like();
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero() && !m(i, j).is_zero()) row += m(i, j) * v[j];
    acc += v[i] * row;
  }
  return acc;
}

/// det(M) is a unit of the base ring.
template <typename R>
bool is_regular(const GramMatrix<R>& m) {
  R d = m.det();
  return !d.is_zero() && is_unit(d);
}

/// B^t M B, the Gram matrix of M in the basis given by the columns of B.
template <typename R>
GramMatrix<R> congruence(const GramMatrix<R>& m, const Matrix<R>& b) {
  if (b.size() != m.rank()) throw std::invalid_argument("congruence: dimension mismatch");
  if (b.det().is_zero()) throw std::domain_error("congruence: singular transform");
  return GramMatrix<R>(b.transpose() * m.matrix() * b);
}

/// H(L_0) (+) V_0 with H = [[0, 1], [1, 0]]; V_0 may be absent (rank 2).
struct SplitForm {
  std::optional<GramMatrix<KElem>> v0;

  GramMatrix<KElem> hyperbolic(const EllipticCurve& e) const;
  GramMatrix<KElem> full(const EllipticCurve& e) const;
};

enum class Algorithm1Mode { mod2, full };

struct ClassRepresentative {
  CurvePoint point;
  Matrix<KElem> transform;  // B = A_{m_P}^{-1}; the hyperbolic block is B^t H B
  GramMatrix<KElem> gram;
};

/// One lattice per coset of C(F_p)/2 (mod2) or per point (full), in point order.
std::vector<ClassRepresentative> algorithm1(const EllipticCurve& e, const SplitForm& f0,
                                            Algorithm1Mode mode = Algorithm1Mode::mod2,
                                            SignConvention sign = SignConvention::paper);

/// Elements of bounded size, small ones first: a + b y with deg a, deg b <=
/// bound (ordered by pole order at infinity), or sum c_k t^k with |k| <= bound
/// (exponents 0, 1, -1, 2, -2, ...).
std::vector<KElem> bounded_elements(const KElem& proto, int bound);
std::vector<LaurentElem> bounded_elements(const LaurentElem& proto, int bound);

/// Refuse searches beyond this many candidate prefixes.
inline constexpr std::uint64_t kMaxIsotropyCandidates = 50'000'000;

/// Nonzero v with q(v) = 0 and all entries of bounded size, searching the
/// first n-1 coordinates and solving the quadratic for the last.
template <typename R>
std::optional<std::vector<R>> isotropy_search(const GramMatrix<R>& m, int bound) {
  const std::size_t n = m.rank();
  const R zero = m(0, 0).zero_like();
  if (n == 1) {
    if (m(0, 0).is_zero()) return std::vector<R>{zero.one_like()};
    return std::nullopt;
  }
  const std::vector<R> elems = bounded_elements(zero, bound);
  const std::size_t k = n - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= elems.size();
    if (total > kMaxIsotropyCandidates) throw std::domain_error("isotropy_search: search space too large");
  }
  const R& a = m(k, k);
  const R two = zero.one_like() + zero.one_like();
  const bool diagonal = m.is_diagonal();
  // With A a unit, -M_ii v^2 / A for every candidate v; the last coordinate
  // is then the square root of a plain sum.
  std::optional<R> neg_inv_a;
  if (!a.is_zero() && is_unit(a)) neg_inv_a = exact_div(-zero.one_like(), a);
  std::vector<std::vector<R>> squares;
  if (diagonal) {
    squares.resize(k);
    for (std::size_t i = 0; i < k; ++i)
      for (const auto& v : elems) squares[i].push_back(neg_inv_a ? m(i, i) * v * v * *neg_inv_a : m(i, i) * v * v);
  }

  auto solve_last = [&](const R& b, const R& c) -> std::optional<R> {
    if (a.is_zero()) {
      if (b.is_zero()) return c.is_zero() ? std::optional<R>(zero) : std::nullopt;
      return exact_div(-c, two * b);
    }
    if (b.is_zero()) {
      auto w = exact_div(-c, a);
      if (!w) return std::nullopt;
      return sqrt(*w);
    }
    auto s = sqrt(b * b - a * c);
    if (!s) return std::nullopt;
    if (auto z = exact_div(*s - b, a)) return z;
    return exact_div(-*s - b, a);
  };

  std::vector<std::size_t> idx(k, 0);
  std::vector<R> v(n, zero);
  for (std::uint64_t step = 1; step < total; ++step) {
    for (std::size_t i = k; i-- > 0;) {
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
    }
    R b = zero;
    R c = zero;
    if (diagonal) {
      for (std::size_t i = 0; i < k; ++i)
        if (idx[i] != 0) c += squares[i][idx[i]];
      if (neg_inv_a) {
        if (auto z = sqrt(c)) {
          for (std::size_t i = 0; i < k; ++i) v[i] = elems[idx[i]];
          v[k] = *z;
          return v;
        }
        continue;
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) v[i] = elems[idx[i]];
      for (std::size_t i = 0; i < k; ++i) {
        if (v[i].is_zero()) continue;
        if (!m(i, k).is_zero()) b += m(i, k) * v[i];
        R row = zero;
        for (std::size_t j = 0; j < k; ++j)
          if (!v[j].is_zero() && !m(i, j).is_zero()) row += m(i, j) * v[j];
        c += v[i] * row;
      }
    }
    if (auto z = solve_last(b, c)) {
      for (std::size_t i = 0; i < k; ++i) v[i] = elems[idx[i]];
      v[k] = *z;
      return v;
    }
  }
  if (a.is_zero()) {
    v.assign(n, zero);
    v[k] = zero.one_like();
    return v;
  }
  return std::nullopt;
}

}  // namespace genus_forge
