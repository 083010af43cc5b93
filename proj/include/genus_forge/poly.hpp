#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genus_forge/field.hpp"

namespace genus_forge {

/// Univariate polynomial over F_p with ascending coefficients and no
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(std::uint32_t p) : p_(p) {}
  Poly(std::uint32_t p, const std::vector<std::int64_t>& ascending);
  Poly(std::uint32_t p, std::initializer_list<std::int64_t> ascending)
      : Poly(p, std::vector<std::int64_t>(ascending)) {}
  Poly(std::uint32_t p, std::vector<Fp> ascending);

  static Poly constant(std::uint32_t p, std::int64_t c);
  static Poly monomial(std::uint32_t p, std::int64_t c, std::size_t degree);
  /// The polynomial X - root.
  static Poly linear(std::uint32_t p, std::int64_t root);

  std::uint32_t modulus() const { return p_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Fp coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Fp(0, p_); }
  Fp lead() const { return c_.empty() ? Fp(0, p_) : c_.back(); }
  const std::vector<Fp>& coeffs() const { return c_; }

  Poly monic() const;
  Poly derivative() const;
  Fp eval(const Fp& x) const;
  /// g(X) = f(X + shift).
  Poly shifted(std::int64_t shift) const;
  Poly pow(unsigned e) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Fp& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Fp& c) { return a *= c; }
  friend Poly operator*(const Fp& c, Poly a) { return a *= c; }
  /// Exact-or-truncating quotient and remainder; divisor must be nonzero.
  friend Poly operator/(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  /// Deterministic total order: by degree, then coefficients from the top.
  friend bool operator<(const Poly& a, const Poly& b);

 private:
  void trim();
  void check_same(const Poly& o) const;

  std::uint32_t p_;
  std::vector<Fp> c_;
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// a / b when b divides a exactly.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

struct XgcdResult {
  Poly d;  // monic gcd
  Poly u;
  Poly v;  // d == u*f + v*g
};

XgcdResult xgcd(const Poly& f, const Poly& g);
Poly gcd(const Poly& f, const Poly& g);

/// Multiplicity of the irreducible `prime` in a nonzero f.
int valuation(const Poly& f, const Poly& prime);

/// Square root in F_p[X] when f is a perfect square.
std::optional<Poly> sqrt(const Poly& f);

/// Ben-Or distinct-degree test. Throws for constant input.
bool is_irreducible(const Poly& f);
/// Irreducibility by trial division against every monic polynomial of degree
/// <= deg f / 2. Independent slow route used by tests.
bool is_irreducible_trial(const Poly& f);

/// All monic polynomials of exact degree d, in index order (digits base p,
/// low coefficient least significant).
std::vector<Poly> monic_polys(std::uint32_t p, int d);
std::vector<Poly> monic_irreducibles(std::uint32_t p, int d);

/// Irreducible factorization by trial division with irreducibles of degree <=
/// max_deg. Factors are monic, sorted; throws std::domain_error when a factor
/// of larger degree remains.
struct Factorization {
  Fp unit;
  std::vector<std::pair<Poly, int>> factors;
};
Factorization factor(const Poly& f, int max_deg);

/// F_p[X]/(prime) as an ExtField. Throws unless prime is monic irreducible.
ExtFieldPtr residue_field(const Poly& prime);
/// Image of f in F_p[X]/(prime).
ExtFieldElem reduce(const Poly& f, const ExtFieldPtr& field);

/// Human form with signed representatives, e.g. "-2*x^2-1".
std::string to_string(const Poly& f, std::string_view var = "x");
/// Human form with canonical representatives in [0, p), e.g. "t^2+2*t+2".
std::string to_canonical_string(const Poly& f, std::string_view var = "x");
/// Accepts "2*t^2+1", "t-3", "[1,0,2]" (ascending coefficients).
Poly parse_poly(std::string_view text, std::uint32_t p, std::string_view var);

/// Element num/den of F_p(X), reduced with den monic.
class RatFun {
 public:
  explicit RatFun(std::uint32_t p) : num_(p), den_(Poly::constant(p, 1)) {}
  RatFun(Poly num);  // NOLINT(google-explicit-constructor)
  RatFun(Poly num, Poly den);

  static RatFun constant(std::uint32_t p, std::int64_t c) { return RatFun(Poly::constant(p, c)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  std::uint32_t modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun inverse() const;
  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o);
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

std::string to_string(const RatFun& f, std::string_view var = "t");

/// A place of F_p(t): a monic irreducible polynomial, or the infinite place.
class Place {
 public:
  static Place finite(Poly prime);
  static Place infinity(std::uint32_t p);

  bool is_infinite() const { return !prime_.has_value(); }
  const Poly& prime() const;
  std::uint32_t modulus() const { return p_; }
  int degree() const { return prime_ ? prime_->degree() : 1; }
  /// "t+1", "t^2+1", "inf".
  std::string name() const;

  /// Valuation of a nonzero rational function at this place.
  int valuation(const RatFun& f) const;

  friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_ && a.prime_ == b.prime_; }
  /// Finite places by (degree, coefficients), infinity last.
  friend bool operator<(const Place& a, const Place& b);

 private:
  Place(std::uint32_t p, std::optional<Poly> prime) : p_(p), prime_(std::move(prime)) {}

  std::uint32_t p_;
  std::optional<Poly> prime_;
};

/// Monic irreducibles of degree <= max_deg (degree-major), then infinity.
std::vector<Place> enumerate_places(std::uint32_t p, int max_deg);

/// Parses "inf" or a monic irreducible polynomial in t.
Place parse_place(std::string_view text, std::uint32_t p);

}  // namespace genus_forge
