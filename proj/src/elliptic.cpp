#include "genus_forge/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace genus_forge {

std::string CurvePoint::to_string() const {
  if (infinity_) return "inf";
  return "(" + std::to_string(x_.value()) + "," + std::to_string(y_.value()) + ")";
}

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  if (a.infinity_ != b.infinity_) return a.infinity_;
  if (a.infinity_) return false;
  if (a.x_.value() != b.x_.value()) return a.x_.value() < b.x_.value();
  return a.y_.value() < b.y_.value();
}

bool is_smooth(std::uint32_t p, std::int64_t a, std::int64_t b) {
  Fp fa(a, p), fb(b, p);
  return !(Fp(4, p) * fa * fa * fa + Fp(27, p) * fb * fb).is_zero();
}

namespace {

std::uint32_t checked_modulus(std::uint32_t p, std::uint32_t max_prime) {
  check_odd_prime(p, max_prime);
  return p;
}

}  // namespace

EllipticCurve::EllipticCurve(std::uint32_t p, std::int64_t a, std::int64_t b, std::uint32_t max_prime)
    : p_(checked_modulus(p, max_prime)), a_(a, p_), b_(b, p_), rhs_(p_) {
  if (!is_smooth(p, a, b)) {
    throw std::domain_error("singular curve: 4a^3 + 27b^2 = 0 over F_" + std::to_string(p));
  }
  rhs_ = Poly(p, std::vector<Fp>{b_, a_, Fp(0, p), Fp(1, p)});
}

bool EllipticCurve::contains(const CurvePoint& pt) const {
  if (pt.is_infinity()) return true;
  if (pt.x().modulus() != p_ || pt.y().modulus() != p_) return false;
  return pt.y() * pt.y() == rhs_.eval(pt.x());
}

CurvePoint EllipticCurve::point(std::int64_t x, std::int64_t y) const {
  CurvePoint pt = CurvePoint::affine(Fp(x, p_), Fp(y, p_));
  if (!contains(pt)) throw std::domain_error("point " + pt.to_string() + " is not on " + to_string());
  return pt;
}

std::string EllipticCurve::to_string() const {
  return "y^2 = " + genus_forge::to_string(rhs_, "x") + " over F_" + std::to_string(p_);
}

std::vector<CurvePoint> enumerate_points(const EllipticCurve& e) {
  std::vector<CurvePoint> pts{CurvePoint::infinity()};
  const std::uint32_t p = e.p();
  for (std::uint32_t xv = 0; xv < p; ++xv) {
    Fp x(xv, p);
    Fp r = e.rhs().eval(x);
    if (!is_square(r)) continue;
    if (r.is_zero()) {
      pts.push_back(CurvePoint::affine(x, r));
      continue;
    }
    Fp y = *sqrt(r);
    Fp lo = y.value() < (-y).value() ? y : -y;
    pts.push_back(CurvePoint::affine(x, lo));
    pts.push_back(CurvePoint::affine(x, -lo));
  }
  return pts;
}

CurvePoint negate(const EllipticCurve& e, const CurvePoint& pt) {
  if (!e.contains(pt)) throw std::domain_error("negate: point not on curve");
  if (pt.is_infinity()) return pt;
  return CurvePoint::affine(pt.x(), -pt.y());
}

CurvePoint add(const EllipticCurve& e, const CurvePoint& pt, const CurvePoint& q) {
  if (!e.contains(pt) || !e.contains(q)) throw std::domain_error("add: point not on curve");
  if (pt.is_infinity()) return q;
  if (q.is_infinity()) return pt;
  const std::uint32_t p = e.p();
  Fp lambda(0, p);
  if (pt.x() == q.x()) {
    if (pt.y() == -q.y()) return CurvePoint::infinity();
    // Tangent; y != 0 here since y == -y would have returned above.
    lambda = (Fp(3, p) * pt.x() * pt.x() + e.a()) / (Fp(2, p) * pt.y());
  } else {
    lambda = (q.y() - pt.y()) / (q.x() - pt.x());
  }
  Fp x3 = lambda * lambda - pt.x() - q.x();
  Fp y3 = lambda * (pt.x() - x3) - pt.y();
  return CurvePoint::affine(x3, y3);
}

CurvePoint multiply(const EllipticCurve& e, std::int64_t n, const CurvePoint& pt) {
  CurvePoint base = n < 0 ? negate(e, pt) : pt;
  std::uint64_t k = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  CurvePoint acc = CurvePoint::infinity();
  while (k != 0) {
    if (k & 1) acc = add(e, acc, base);
    base = add(e, base, base);
    k >>= 1;
  }
  return acc;
}

std::uint64_t point_order(const EllipticCurve& e, const CurvePoint& pt) {
  std::uint64_t n = 1;
  CurvePoint acc = pt;
  while (!acc.is_infinity()) {
    acc = add(e, acc, pt);
    ++n;
  }
  return n;
}

std::uint64_t GroupStructure::mod2_order() const {
  return std::gcd(n1, std::uint64_t{2}) * std::gcd(n2, std::uint64_t{2});
}

std::string GroupStructure::to_string() const {
  if (n1 == 1) return "Z/" + std::to_string(n2);
  return "Z/" + std::to_string(n1) + " x Z/" + std::to_string(n2);
}

GroupStructure group_structure(const EllipticCurve& e) {
  const auto pts = enumerate_points(e);
  std::uint64_t exponent = 1;
  for (const auto& pt : pts) exponent = std::lcm(exponent, point_order(e, pt));
  const std::uint64_t n = pts.size();
  // The group has rank <= 2, so the exponent is the largest invariant factor.
  GroupStructure g{n / exponent, exponent};
  if (g.n1 * g.n2 != n || g.n2 % g.n1 != 0) {
    throw std::logic_error("group_structure: inconsistent invariant factors");
  }
  return g;
}

std::vector<CurvePoint> doubling_image(const EllipticCurve& e) {
  std::set<CurvePoint> img;
  for (const auto& pt : enumerate_points(e)) img.insert(add(e, pt, pt));
  return {img.begin(), img.end()};
}

CurvePoint coset_representative(const EllipticCurve& e, const CurvePoint& pt) {
  CurvePoint best = pt;
  for (const auto& d : doubling_image(e)) {
    CurvePoint c = add(e, pt, d);
    if (c < best) best = c;
  }
  return best;
}

std::vector<CurvePoint> cosets_mod_2(const EllipticCurve& e) {
  const auto twice = doubling_image(e);
  std::set<CurvePoint> reps;
  for (const auto& pt : enumerate_points(e)) {
    CurvePoint best = pt;
    for (const auto& d : twice) {
      CurvePoint c = add(e, pt, d);
      if (c < best) best = c;
    }
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

}  // namespace genus_forge
