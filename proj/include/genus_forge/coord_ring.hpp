#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "genus_forge/elliptic.hpp"
#include "genus_forge/poly.hpp"

namespace genus_forge {

/// Element (a(x) + b(x) y) / d(x) of the function field K of an elliptic
/// curve y^2 = f(x). Canonical form: gcd(a, b, d) = 1 and d monic, so equal
/// elements compare equal structurally.
class KElem {
 public:
  explicit KElem(const EllipticCurve& e);
  KElem(const EllipticCurve& e, Poly a, Poly b, Poly d);
  KElem(std::shared_ptr<const EllipticCurve> e, Poly a, Poly b, Poly d);

  static KElem from_poly(const EllipticCurve& e, Poly a) {
    const std::uint32_t p = e.p();
    return KElem(e, std::move(a), Poly(p), Poly::constant(p, 1));
  }
  static KElem constant(const EllipticCurve& e, std::int64_t c) { return from_poly(e, Poly::constant(e.p(), c)); }
  static KElem x(const EllipticCurve& e) { return from_poly(e, Poly::monomial(e.p(), 1, 1)); }
  static KElem y(const EllipticCurve& e) {
    const std::uint32_t p = e.p();
    return KElem(e, Poly(p), Poly::constant(p, 1), Poly::constant(p, 1));
  }

  const Poly& a() const { return a_; }
  const Poly& b() const { return b_; }
  const Poly& d() const { return d_; }
  const EllipticCurve& curve() const { return *curve_; }
  const std::shared_ptr<const EllipticCurve>& curve_ptr() const { return curve_; }
  std::uint32_t modulus() const { return curve_->p(); }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_one() const { return a_.is_one() && b_.is_zero() && d_.is_one(); }
  /// Denominator 1: the element lies in F_p[x] + F_p[x] y.
  bool is_polynomial() const { return d_.is_one(); }

  /// Image under y -> -y.
  KElem conjugate() const;
  /// (a^2 - f b^2) / d^2.
  RatFun norm() const;
  /// 2a / d.
  RatFun trace() const;
  /// Value at an affine point where d does not vanish.
  Fp eval(const CurvePoint& pt) const;

  KElem inverse() const;
  KElem operator-() const;
  KElem& operator+=(const KElem& o);
  KElem& operator-=(const KElem& o);
  KElem& operator*=(const KElem& o);
  KElem& operator/=(const KElem& o);
  friend KElem operator+(KElem u, const KElem& v) { return u += v; }
  friend KElem operator-(KElem u, const KElem& v) { return u -= v; }
  friend KElem operator*(KElem u, const KElem& v) { return u *= v; }
  friend KElem operator/(KElem u, const KElem& v) { return u /= v; }
  friend bool operator==(const KElem& u, const KElem& v);

  KElem zero_like() const { return KElem(curve_, Poly(modulus()), Poly(modulus()), Poly::constant(modulus(), 1)); }
  KElem one_like() const {
    return KElem(curve_, Poly::constant(modulus(), 1), Poly(modulus()), Poly::constant(modulus(), 1));
  }

 private:
  void check_same(const KElem& o) const;
  void normalize();

  std::shared_ptr<const EllipticCurve> curve_;
  Poly a_;
  Poly b_;
  Poly d_;
};

/// (norm, trace) of u over F_p(x).
std::pair<RatFun, RatFun> norm_trace(const KElem& u);

/// Membership in O_S = F_p[x, y]/(y^2 - f): norm and trace are polynomials.
bool is_integral(const KElem& u);
/// u and 1/u both in O_S.
bool is_unit(const KElem& u);
/// u / v when the quotient lies in O_S.
std::optional<KElem> exact_div(const KElem& u, const KElem& v);
/// A square root inside O_S of an integral u, if one exists.
std::optional<KElem> sqrt(const KElem& u);

/// "2*x*y", "-2*x^2-1", "-y/x", "(y+1)/(x+1)".
std::string to_string(const KElem& u);
/// Parses "2*x*y - 2*x^2 - 1" style polynomial expressions in x and y, with an
/// optional "/(...)" denominator in x.
KElem parse_kelem(std::string_view text, const EllipticCurve& e);

}  // namespace genus_forge
