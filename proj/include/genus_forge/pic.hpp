#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genus_forge/elliptic.hpp"
#include "genus_forge/ideals.hpp"
#include "genus_forge/poly.hpp"

namespace genus_forge {

enum class PicBase { elliptic, genus0 };

/// Pic(O_S) for an elliptic curve minus infinity (isomorphic to C(F_p) via
/// P -> [m_P]) or for P^1 minus a finite set of places (cyclic of order
/// gcd of the place degrees).
struct PicGroup {
  PicBase base;
  GroupStructure structure;
  std::optional<EllipticCurve> curve;
  /// Elliptic base: every point, and one representative per class of Pic/2.
  std::vector<CurvePoint> points;
  std::vector<CurvePoint> cosets;
  /// Genus-0 base: the removed places.
  std::vector<Place> places;

  std::uint64_t order() const { return structure.order(); }
};

PicGroup pic_group(const EllipticCurve& e);
PicGroup pic_group(const std::vector<Place>& s);
/// F_p[t, 1/t], that is S = {t, inf}.
PicGroup pic_group_laurent(std::uint32_t p);

/// |Pic / 2 Pic|.
std::uint64_t pic_mod2_order(const PicGroup& g);

/// The ideal class attached to a point: phi(P) = m_P (the unit ideal at infinity).
FracIdeal phi(const EllipticCurve& e, const CurvePoint& pt);

}  // namespace genus_forge
