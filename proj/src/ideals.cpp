#include "genus_forge/ideals.hpp"

#include <stdexcept>
#include <utility>

namespace genus_forge {

namespace {

struct Row {
  Poly a;
  Poly b;
};

Poly lcm(const Poly& f, const Poly& g) { return (f * g / gcd(f, g)).monic(); }

// Rows (a, b) and (f b, a) for u = a + b y and u y.
void push_generator_rows(const KElem& u, std::vector<Row>& rows) {
  rows.push_back({u.a(), u.b()});
  rows.push_back({u.curve().rhs() * u.b(), u.a()});
}

IdealHnf hnf_of_rows(std::vector<Row> rows, std::uint32_t p) {
  Row pivot{Poly(p), Poly(p)};
  std::vector<Poly> second;
  for (auto& r : rows) {
    if (r.a.is_zero()) {
      second.push_back(std::move(r.b));
      continue;
    }
    if (pivot.a.is_zero()) {
      pivot = std::move(r);
      continue;
    }
    // [[u, v], [s/d, -u/d]] is unimodular and clears the first column of r.
    auto [d, u, v] = xgcd(pivot.a, r.a);
    const Poly ps = r.a / d;
    const Poly pu = pivot.a / d;
    second.push_back(ps * pivot.b - pu * r.b);
    pivot = Row{u * pivot.a + v * r.a, u * pivot.b + v * r.b};
  }
  Poly h22(p);
  for (const auto& s : second) h22 = s.is_zero() ? h22 : (h22.is_zero() ? s.monic() : gcd(h22, s));
  if (pivot.a.is_zero() || h22.is_zero()) throw std::domain_error("ideal: zero or degenerate ideal");
  const Fp inv = pivot.a.lead().inverse();
  pivot.a *= inv;
  pivot.b *= inv;
  return IdealHnf{pivot.a, pivot.b % h22, h22};
}

bool hnf_contains(const IdealHnf& h, const Poly& a, const Poly& b) {
  auto q = exact_div(a, h.h11);
  if (!q) return false;
  return exact_div(b - *q * h.h12, h.h22).has_value();
}

KElem scaled(const KElem& u, const Poly& denominator) {
  return u * KElem::from_poly(u.curve(), denominator);
}

void check_point(const EllipticCurve& e, const CurvePoint& pt) {
  if (!e.contains(pt)) throw std::domain_error("ideal: point " + pt.to_string() + " is not on the curve");
}

}  // namespace

FracIdeal::FracIdeal(KElem a, KElem b) : g1(std::move(a)), g2(std::move(b)) {
  if (!(g1.curve() == g2.curve())) throw std::domain_error("ideal: curve mismatch");
  if (g1.is_zero() && g2.is_zero()) throw std::domain_error("ideal: both generators are zero");
}

bool FracIdeal::is_integral() const { return genus_forge::is_integral(g1) && genus_forge::is_integral(g2); }

std::string to_string(const FracIdeal& ideal) {
  return "<" + to_string(ideal.g1) + ", " + to_string(ideal.g2) + ">";
}

ScaledHnf hermite_form(const FracIdeal& ideal) {
  const Poly den = lcm(ideal.g1.d(), ideal.g2.d());
  std::vector<Row> rows;
  for (const auto* g : {&ideal.g1, &ideal.g2}) {
    KElem s = scaled(*g, den);
    if (!s.is_polynomial()) throw std::logic_error("ideal: scaling did not clear denominators");
    if (!s.is_zero()) push_generator_rows(s, rows);
  }
  return ScaledHnf{den, hnf_of_rows(std::move(rows), ideal.curve().p())};
}

bool contains(const FracIdeal& ideal, const KElem& u) {
  if (u.is_zero()) return true;
  const ScaledHnf h = hermite_form(ideal);
  KElem s = scaled(u, h.denominator);
  if (!s.is_polynomial()) return false;
  return hnf_contains(h.hnf, s.a(), s.b());
}

bool same_ideal(const FracIdeal& i, const FracIdeal& j) {
  return contains(i, j.g1) && contains(i, j.g2) && contains(j, i.g1) && contains(j, i.g2);
}

int ideal_index(const FracIdeal& ideal) {
  if (!ideal.is_integral()) throw std::domain_error("ideal: index of a non-integral ideal");
  const ScaledHnf h = hermite_form(ideal);
  return h.hnf.h11.degree() + h.hnf.h22.degree();
}

FracIdeal ideal_product(const FracIdeal& i, const FracIdeal& j) {
  const Poly den = lcm(i.g1.d(), i.g2.d()) * lcm(j.g1.d(), j.g2.d());
  std::vector<Row> rows;
  for (const auto* u : {&i.g1, &i.g2}) {
    for (const auto* v : {&j.g1, &j.g2}) {
      KElem s = scaled(*u * *v, den);
      if (!s.is_zero()) push_generator_rows(s, rows);
    }
  }
  const EllipticCurve& e = i.curve();
  const IdealHnf h = hnf_of_rows(std::move(rows), e.p());
  const auto curve = i.g1.curve_ptr();
  return FracIdeal(KElem(curve, h.h11, h.h12, den), KElem(curve, Poly(e.p()), h.h22, den));
}

FracIdeal maximal_ideal(const EllipticCurve& e, const CurvePoint& pt) {
  check_point(e, pt);
  const std::uint32_t p = e.p();
  if (pt.is_infinity()) return FracIdeal(KElem::constant(e, 1), KElem(e));
  auto curve = std::make_shared<const EllipticCurve>(e);
  const Poly one = Poly::constant(p, 1);
  KElem g1(curve, Poly::linear(p, pt.x().value()), Poly(p), one);
  KElem g2(curve, Poly::constant(p, -static_cast<std::int64_t>(pt.y().value())), one, one);
  return FracIdeal(std::move(g1), std::move(g2));
}

FracIdeal inverse_ideal(const EllipticCurve& e, const CurvePoint& pt) {
  check_point(e, pt);
  const std::uint32_t p = e.p();
  if (pt.is_infinity()) return FracIdeal(KElem::constant(e, 1), KElem(e));
  auto curve = std::make_shared<const EllipticCurve>(e);
  const Poly one = Poly::constant(p, 1);
  KElem g1(curve, one, Poly(p), one);
  KElem g2(curve, Poly::constant(p, pt.y().value()), one, Poly::linear(p, pt.x().value()));
  return FracIdeal(std::move(g1), std::move(g2));
}

BezoutQuadruple bezout_quadruple(const EllipticCurve& e, const CurvePoint& pt) {
  check_point(e, pt);
  const std::uint32_t p = e.p();
  auto curve = std::make_shared<const EllipticCurve>(e);
  const Poly one = Poly::constant(p, 1);
  auto elem = [&](Poly a, Poly b, Poly d) { return KElem(curve, std::move(a), std::move(b), std::move(d)); };
  if (pt.is_infinity()) {
    return BezoutQuadruple{pt, elem(one, Poly(p), one), elem(Poly(p), Poly(p), one), elem(one, Poly(p), one),
                           elem(Poly(p), Poly(p), one)};
  }

  // b2 = (y - y_P) + c (x - x_P) vanishes to order exactly 1 at P; its norm is
  // (x - x_P) n(x) with n(x_P) != 0, so s n + t (x - x_P)^2 = 1 is solvable.
  const Poly u = Poly::linear(p, pt.x().value());
  const Fp c = e.rhs().derivative().eval(pt.x()).is_zero() ? Fp(1, p) : Fp(0, p);
  const Poly b2_a = u * c - Poly::constant(p, pt.y().value());
  const KElem b2 = elem(b2_a, one, one);
  const Poly n = exact_div(b2_a * b2_a - e.rhs(), u).value();
  if (n.eval(pt.x()).is_zero()) throw std::logic_error("bezout: uniformizer construction failed at " + pt.to_string());
  auto [g, s, t] = xgcd(n, u * u);
  if (!g.is_one()) throw std::logic_error("bezout: norm cofactor not coprime at " + pt.to_string());

  BezoutQuadruple q{pt, elem(u, Poly(p), one), b2.conjugate() * elem(s, Poly(p), u), elem(t * u, Poly(p), one), b2};

  const FracIdeal m = maximal_ideal(e, pt);
  const FracIdeal minv = inverse_ideal(e, pt);
  if (!(q.a1 * q.b1 + q.a2 * q.b2).is_one()) throw std::logic_error("bezout: a1 b1 + a2 b2 != 1 at " + pt.to_string());
  for (const KElem* in_m : {&q.a1, &q.b2}) {
    if (!contains(m, *in_m)) throw std::logic_error("bezout: element outside m_P at " + pt.to_string());
    for (const KElem* g : {&minv.g1, &minv.g2}) {
      if (!is_integral(*in_m * *g)) throw std::logic_error("bezout: m_P m_P^-1 not integral at " + pt.to_string());
    }
  }
  for (const KElem* in_inv : {&q.a2, &q.b1}) {
    if (!contains(minv, *in_inv)) throw std::logic_error("bezout: element outside m_P^-1 at " + pt.to_string());
    for (const KElem* g : {&m.g1, &m.g2}) {
      if (!is_integral(*in_inv * *g)) throw std::logic_error("bezout: m_P^-1 m_P not integral at " + pt.to_string());
    }
  }
  return q;
}

Matrix<KElem> transition_matrix_inverse(const EllipticCurve& e, const CurvePoint& pt, SignConvention sign) {
  const BezoutQuadruple q = bezout_quadruple(e, pt);
  if (sign == SignConvention::paper) return Matrix<KElem>({{q.a1, -q.a2}, {q.b2, q.b1}});
  return Matrix<KElem>({{q.a1, q.a2}, {-q.b2, q.b1}});
}

std::optional<KElem> is_principal(const FracIdeal& ideal, int deg_bound) {
  if (!ideal.is_integral()) throw std::domain_error("is_principal: ideal must be generated by elements of O_S");
  const EllipticCurve& e = ideal.curve();
  const std::uint32_t p = e.p();
  const IdealHnf h = hermite_form(ideal).hnf;
  // deg N(a + b y) = max(2 deg a, 2 deg b + 3) equals the index of <a + b y>;
  // a generator has norm degree exactly the index of I.
  const int n = h.h11.degree() + h.h22.degree();
  const auto curve = ideal.g1.curve_ptr();
  const Poly one = Poly::constant(p, 1);

  auto accept = [&](const Poly& a, const Poly& b) -> std::optional<KElem> {
    if (!hnf_contains(h, a, b)) return std::nullopt;
    KElem g(curve, a, b, one);
    if (!exact_div(ideal.g1, g) || !exact_div(ideal.g2, g)) return std::nullopt;
    return g;
  };
  // Polynomials of degree <= d, enumerated by base-p digits.
  auto all_polys = [&](int d) {
    std::vector<Poly> out{Poly(p)};
    for (int k = 0; k <= d; ++k) {
      std::vector<Poly> next;
      next.reserve(out.size() * p);
      for (std::uint32_t c = 0; c < p; ++c)
        for (const auto& f : out) next.push_back(f + Poly::monomial(p, c, static_cast<std::size_t>(k)));
      out = std::move(next);
    }
    return out;
  };

  if (n % 2 == 0) {
    const int da = n / 2;
    if (da > deg_bound) return std::nullopt;
    const int db_max = std::min((n - 4) / 2, deg_bound);
    const std::vector<Poly> tails = all_polys(da - 1);
    const std::vector<Poly> bs = db_max >= 0 ? all_polys(db_max) : std::vector<Poly>{Poly(p)};
    for (const auto& tail : tails) {
      const Poly a = Poly::monomial(p, 1, static_cast<std::size_t>(da)) + tail;
      for (const auto& b : bs)
        if (auto g = accept(a, b)) return g;
    }
    return std::nullopt;
  }
  if (n < 3) return std::nullopt;
  const int db = (n - 3) / 2;
  const int da_max = std::min((n - 1) / 2, deg_bound);
  if (db > deg_bound) return std::nullopt;
  const std::vector<Poly> tails = all_polys(db - 1);
  const std::vector<Poly> as = all_polys(da_max);
  for (const auto& tail : tails) {
    const Poly b = Poly::monomial(p, 1, static_cast<std::size_t>(db)) + tail;
    for (const auto& a : as)
      if (auto g = accept(a, b)) return g;
  }
  return std::nullopt;
}

}  // namespace genus_forge
