#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genus_forge/coord_ring.hpp"
#include "genus_forge/elliptic.hpp"
#include "genus_forge/matrix.hpp"
#include "genus_forge/poly.hpp"

namespace genus_forge {

/// Fractional ideal O_S g1 + O_S g2 of the elliptic coordinate ring.
struct FracIdeal {
  FracIdeal(KElem g1, KElem g2);

  KElem g1;
  KElem g2;

  const EllipticCurve& curve() const { return g1.curve(); }
  /// Both generators lie in O_S.
  bool is_integral() const;
};

std::string to_string(const FracIdeal& ideal);

/// Hermite normal form of an integral ideal viewed as an F_p[x]-submodule of
/// O_S = F_p[x] + F_p[x] y: rows (h11, h12), (0, h22), h11 and h22 monic,
/// deg h12 < deg h22.
struct IdealHnf {
  Poly h11;
  Poly h12;
  Poly h22;

  friend bool operator==(const IdealHnf&, const IdealHnf&) = default;
};

/// HNF of denominator * I, with denominator the monic lcm of the generator
/// denominators.
struct ScaledHnf {
  Poly denominator;
  IdealHnf hnf;
};

ScaledHnf hermite_form(const FracIdeal& ideal);

/// Exact ideal membership.
bool contains(const FracIdeal& ideal, const KElem& u);
/// Mutual containment of generators.
bool same_ideal(const FracIdeal& i, const FracIdeal& j);
/// dim_{F_p} O_S / I for an integral ideal I.
int ideal_index(const FracIdeal& ideal);
/// Product, reduced to two generators through the HNF basis.
FracIdeal ideal_product(const FracIdeal& i, const FracIdeal& j);

/// <x - x_P, y - y_P>; the unit ideal for P = infinity.
FracIdeal maximal_ideal(const EllipticCurve& e, const CurvePoint& pt);
/// <1, (y + y_P)/(x - x_P)>; the unit ideal for P = infinity.
FracIdeal inverse_ideal(const EllipticCurve& e, const CurvePoint& pt);

/// a1, b2 in m_P and a2, b1 in m_P^-1 with a1 b1 + a2 b2 = 1.
struct BezoutQuadruple {
  CurvePoint point;
  KElem a1;
  KElem a2;
  KElem b1;
  KElem b2;
};

BezoutQuadruple bezout_quadruple(const EllipticCurve& e, const CurvePoint& pt);

enum class SignConvention { paper, raw };

/// raw: [[a1, a2], [-b2, b1]]; paper: [[a1, -a2], [b2, b1]]. Determinant 1.
Matrix<KElem> transition_matrix_inverse(const EllipticCurve& e, const CurvePoint& pt,
                                        SignConvention sign = SignConvention::paper);

/// A generator g = a(x) + b(x) y of the integral ideal I with deg a, deg b <=
/// deg_bound, if one exists.
std::optional<KElem> is_principal(const FracIdeal& ideal, int deg_bound);

}  // namespace genus_forge
