#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genus_forge/field.hpp"
#include "genus_forge/poly.hpp"
#include "genus_forge/text.hpp"

namespace genus_forge {

/// Laurent polynomial sum_k c_k t^k over a finite field F (Fp or
/// ExtFieldElem): an element of F[t, 1/t]. Stored densely from the lowest
/// nonzero exponent; no zero coefficients at either end.
template <typename F>
class Laurent {
 public:
  explicit Laurent(F zero) : zero_(zero.zero_like()) {}

  static Laurent monomial(const F& c, int exponent) {
    Laurent r(c);
    if (!c.is_zero()) {
      r.low_ = exponent;
      r.c_.push_back(c);
    }
    return r;
  }

  /// sum_i c[i] t^(low + i).
  static Laurent from_dense(const F& zero, int low, std::vector<F> c) {
    Laurent r(zero);
    r.low_ = low;
    r.c_ = std::move(c);
    r.trim();
    return r;
  }

  static Laurent from_terms(const F& zero, const std::map<int, F>& terms) {
    Laurent r(zero);
    for (const auto& [e, c] : terms) r += monomial(c, e);
    return r;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && low_ == 0 && c_[0].is_one(); }
  /// Units of F[t, 1/t] are exactly the nonzero monomials.
  bool is_unit() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& dense() const { return c_; }
  F coeff(int e) const {
    if (e < low_ || e > high() || c_.empty()) return zero_;
    return c_[static_cast<std::size_t>(e - low_)];
  }
  std::map<int, F> terms() const {
    std::map<int, F> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) out.emplace(low_ + static_cast<int>(i), c_[i]);
    }
    return out;
  }
  const F& zero_coeff() const { return zero_; }

  Laurent zero_like() const { return Laurent(zero_); }
  Laurent one_like() const { return monomial(zero_.one_like(), 0); }

  /// Multiply by t^k.
  Laurent shifted(int k) const {
    Laurent r = *this;
    if (!r.c_.empty()) r.low_ += k;
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return accumulate(o, false); }
  Laurent& operator-=(const Laurent& o) { return accumulate(o, true); }

  Laurent& operator*=(const Laurent& o) {
    if (is_zero() || o.is_zero()) {
      c_.clear();
      low_ = 0;
      return *this;
    }
    std::vector<F> prod(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    }
    low_ += o.low_;
    c_ = std::move(prod);
    trim();
    return *this;
  }

  Laurent& operator*=(const F& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend Laurent operator*(Laurent a, const F& s) { return a *= s; }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.low_ == b.low_ && a.c_ == b.c_ && a.zero_ == b.zero_;
  }

 private:
  Laurent& accumulate(const Laurent& o, bool subtract) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
      *this = subtract ? -o : o;
      return *this;
    }
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    std::vector<F> sum(static_cast<std::size_t>(hi - lo + 1), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) sum[static_cast<std::size_t>(low_ - lo) + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      F& s = sum[static_cast<std::size_t>(o.low_ - lo) + i];
      if (subtract) {
        s -= o.c_[i];
      } else {
        s += o.c_[i];
      }
    }
    low_ = lo;
    c_ = std::move(sum);
    trim();
    return *this;
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
      low_ += static_cast<int>(lead);
    }
    if (c_.empty()) low_ = 0;
  }

  F zero_;
  int low_ = 0;
  std::vector<F> c_;
};

using LaurentElem = Laurent<Fp>;

template <typename F>
bool is_unit(const Laurent<F>& u) {
  return u.is_unit();
}

/// Monomial test used for units of F_p[t, 1/t].
inline bool laurent_is_unit(const LaurentElem& u) { return u.is_unit(); }

namespace detail {

/// Quotient of dense polynomials with nonzero constant terms, if exact.
template <typename F>
std::optional<std::vector<F>> dense_exact_div(std::vector<F> num, const std::vector<F>& den, const F& zero) {
  if (den.empty()) throw std::domain_error("Laurent: division by zero");
  if (num.empty()) return std::vector<F>{};
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t dd = den.size() - 1;
  std::vector<F> q(num.size() - dd, zero);
  const F inv = den.back().inverse();
  for (std::size_t k = num.size(); k-- > dd;) {
    F f = num[k] * inv;
    q[k - dd] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= f * den[j];
  }
  for (std::size_t j = 0; j < dd; ++j) {
    if (!num[j].is_zero()) return std::nullopt;
  }
  return q;
}

}  // namespace detail

/// u / v inside F[t, 1/t], if v divides u there.
template <typename F>
std::optional<Laurent<F>> exact_div(const Laurent<F>& u, const Laurent<F>& v) {
  if (v.is_zero()) throw std::domain_error("Laurent: division by zero");
  if (u.is_zero()) return u;
  auto q = detail::dense_exact_div(u.dense(), v.dense(), u.zero_coeff());
  if (!q) return std::nullopt;
  return Laurent<F>::from_dense(u.zero_coeff(), u.low() - v.low(), std::move(*q));
}

/// Square root inside F[t, 1/t], if one exists.
template <typename F>
std::optional<Laurent<F>> sqrt(const Laurent<F>& u) {
  if (u.is_zero()) return u;
  if (u.low() % 2 != 0) return std::nullopt;
  const auto& c = u.dense();
  const std::size_t n = c.size() - 1;
  if (n % 2 != 0) return std::nullopt;
  // Cheap rejections before solving for the root.
  auto top = sqrt(c.back());
  if (!top) return std::nullopt;
  if (!is_square(c.front())) return std::nullopt;
  const std::size_t k = n / 2;
  const F zero = u.zero_coeff();
  std::vector<F> r(k + 1, zero);
  r[k] = *top;
  const F inv = (*top + *top).inverse();
  for (std::size_t j = k; j-- > 0;) {
    F acc = c[k + j];
    for (std::size_t i = j + 1; i < k; ++i) acc -= r[i] * r[k + j - i];
    r[j] = acc * inv;
  }
  Laurent<F> root = Laurent<F>::from_dense(zero, u.low() / 2, std::move(r));
  if (!(root * root == u)) return std::nullopt;
  return root;
}

/// Applies a coefficient map, e.g. the embedding F_p -> F_{p^2}.
template <typename G, typename F, typename Fn>
Laurent<G> map_coefficients(const Laurent<F>& u, const G& zero, Fn fn) {
  Laurent<G> r(zero);
  for (const auto& [e, c] : u.terms()) r += Laurent<G>::monomial(fn(c), e);
  return r;
}

/// Element of F_p(t) equal to u.
inline RatFun to_ratfun(const LaurentElem& u) {
  const std::uint32_t p = u.zero_coeff().modulus();
  if (u.is_zero()) return RatFun(p);
  Poly num(p, u.dense());
  if (u.low() >= 0) return RatFun(num * Poly::monomial(p, 1, static_cast<std::size_t>(u.low())));
  return RatFun(num, Poly::monomial(p, 1, static_cast<std::size_t>(-u.low())));
}

/// "-t", "2*t^-3", "t^2+1"; coefficients in signed form.
std::string to_string(const LaurentElem& u, std::string_view var = "t");
std::string to_string(const Laurent<ExtFieldElem>& u, std::string_view var = "t");
LaurentElem parse_laurent(std::string_view text, std::uint32_t p, std::string_view var = "t");

}  // namespace genus_forge
