#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genus_forge/field.hpp"
#include "genus_forge/poly.hpp"

namespace genus_forge {

/// A point of y^2 = x^3 + a x + b over F_p, or the point at infinity.
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint(); }
  static CurvePoint affine(Fp x, Fp y) { return CurvePoint(x, y); }

  bool is_infinity() const { return infinity_; }
  const Fp& x() const { return x_; }
  const Fp& y() const { return y_; }

  /// "inf" or "(x,y)" with canonical residues.
  std::string to_string() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity_ || b.infinity_) return a.infinity_ == b.infinity_;
    return a.x_ == b.x_ && a.y_ == b.y_;
  }
  /// Infinity first, then lexicographic in (x, y).
  friend bool operator<(const CurvePoint& a, const CurvePoint& b);

 private:
  CurvePoint() = default;
  CurvePoint(Fp x, Fp y) : infinity_(false), x_(x), y_(y) {}

  bool infinity_ = true;
  Fp x_;
  Fp y_;
};

/// Smooth short Weierstrass curve y^2 = x^3 + a x + b over F_p, p odd.
class EllipticCurve {
 public:
  /// Throws std::invalid_argument for a bad modulus and std::domain_error
  /// when 4a^3 + 27b^2 = 0.
  EllipticCurve(std::uint32_t p, std::int64_t a, std::int64_t b,
                std::uint32_t max_prime = kDefaultMaxPrime);

  std::uint32_t p() const { return p_; }
  const Fp& a() const { return a_; }
  const Fp& b() const { return b_; }
  /// x^3 + a x + b.
  const Poly& rhs() const { return rhs_; }

  bool contains(const CurvePoint& pt) const;
  CurvePoint point(std::int64_t x, std::int64_t y) const;

  std::string to_string() const;

  friend bool operator==(const EllipticCurve& u, const EllipticCurve& v) {
    return u.p_ == v.p_ && u.a_ == v.a_ && u.b_ == v.b_;
  }

 private:
  std::uint32_t p_;
  Fp a_;
  Fp b_;
  Poly rhs_;
};

bool is_smooth(std::uint32_t p, std::int64_t a, std::int64_t b);

/// All F_p-rational points, infinity first then lexicographic.
std::vector<CurvePoint> enumerate_points(const EllipticCurve& e);

CurvePoint negate(const EllipticCurve& e, const CurvePoint& pt);
/// Chord-tangent law; throws std::domain_error for off-curve input.
CurvePoint add(const EllipticCurve& e, const CurvePoint& pt, const CurvePoint& q);
CurvePoint multiply(const EllipticCurve& e, std::int64_t n, const CurvePoint& pt);
std::uint64_t point_order(const EllipticCurve& e, const CurvePoint& pt);

/// Invariant factors n1 | n2 with C(F_p) = Z/n1 x Z/n2.
struct GroupStructure {
  std::uint64_t n1 = 1;
  std::uint64_t n2 = 1;
  std::uint64_t order() const { return n1 * n2; }
  /// |G/2G|.
  std::uint64_t mod2_order() const;
  std::string to_string() const;
  friend bool operator==(const GroupStructure&, const GroupStructure&) = default;
};

GroupStructure group_structure(const EllipticCurve& e);

/// The image 2C of the doubling map, sorted.
std::vector<CurvePoint> doubling_image(const EllipticCurve& e);
/// Smallest point of the coset pt + 2C.
CurvePoint coset_representative(const EllipticCurve& e, const CurvePoint& pt);
/// One representative per coset of C/2C, each the minimum of its coset, sorted.
std::vector<CurvePoint> cosets_mod_2(const EllipticCurve& e);

}  // namespace genus_forge
