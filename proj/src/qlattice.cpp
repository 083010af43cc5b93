#include "genus_forge/qlattice.hpp"

#include <stdexcept>

namespace genus_forge {

namespace {

std::uint64_t checked_count(std::uint32_t p, std::size_t digits) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < digits; ++i) {
    count *= p;
    if (count > kMaxIsotropyCandidates) throw std::domain_error("bounded_elements: bound too large");
  }
  return count;
}

}  // namespace

GramMatrix<KElem> SplitForm::hyperbolic(const EllipticCurve& e) const {
  const KElem zero(e);
  const KElem one = KElem::constant(e, 1);
  return GramMatrix<KElem>({{zero, one}, {one, zero}});
}

GramMatrix<KElem> SplitForm::full(const EllipticCurve& e) const {
  if (!v0) return hyperbolic(e);
  return orthogonal_sum(hyperbolic(e), *v0);
}

std::vector<ClassRepresentative> algorithm1(const EllipticCurve& e, const SplitForm& f0, Algorithm1Mode mode,
                                            SignConvention sign) {
  if (f0.v0) {
    if (!((*f0.v0)(0, 0).curve() == e)) throw std::domain_error("algorithm1: V0 is over a different curve");
    if (!is_regular(*f0.v0)) throw std::domain_error("algorithm1: V0 is not regular");
  }
  const GramMatrix<KElem> h = f0.hyperbolic(e);
  const std::vector<CurvePoint> points = mode == Algorithm1Mode::mod2 ? cosets_mod_2(e) : enumerate_points(e);
  std::vector<ClassRepresentative> out;
  out.reserve(points.size());
  for (const auto& pt : points) {
    Matrix<KElem> b = transition_matrix_inverse(e, pt, sign);
    GramMatrix<KElem> block = congruence(h, b);
    GramMatrix<KElem> gram = f0.v0 ? orthogonal_sum(block, *f0.v0) : block;
    out.push_back(ClassRepresentative{pt, std::move(b), std::move(gram)});
  }
  return out;
}

std::vector<KElem> bounded_elements(const KElem& proto, int bound) {
  const EllipticCurve& e = proto.curve();
  const std::uint32_t p = e.p();
  if (bound < 0) return {proto.zero_like()};
  // Basis monomials by pole order at infinity: 1, x, y, x^2, x y, ...
  struct Monomial {
    std::size_t power;
    bool has_y;
  };
  std::vector<Monomial> basis{{0, false}};
  for (int w = 2; w <= 2 * bound + 3; ++w) {
    if (w % 2 == 0 && w / 2 <= bound) basis.push_back({static_cast<std::size_t>(w / 2), false});
    if (w % 2 == 1 && (w - 3) / 2 <= bound) basis.push_back({static_cast<std::size_t>((w - 3) / 2), true});
  }
  const std::uint64_t count = checked_count(p, basis.size());
  const auto curve = proto.curve_ptr();
  const Poly one = Poly::constant(p, 1);
  std::vector<KElem> out;
  out.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    Poly a(p);
    Poly b(p);
    std::uint64_t rest = index;
    for (const auto& m : basis) {
      const auto digit = static_cast<std::int64_t>(rest % p);
      rest /= p;
      if (digit == 0) continue;
      (m.has_y ? b : a) += Poly::monomial(p, digit, m.power);
    }
    out.emplace_back(curve, std::move(a), std::move(b), one);
  }
  return out;
}

std::vector<LaurentElem> bounded_elements(const LaurentElem& proto, int bound) {
  const std::uint32_t p = proto.zero_coeff().modulus();
  if (bound < 0) return {proto.zero_like()};
  std::vector<int> exponents{0};
  for (int k = 1; k <= bound; ++k) {
    exponents.push_back(k);
    exponents.push_back(-k);
  }
  const std::uint64_t count = checked_count(p, exponents.size());
  std::vector<LaurentElem> out;
  out.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    std::map<int, Fp> terms;
    std::uint64_t rest = index;
    for (int e : exponents) {
      const auto digit = static_cast<std::int64_t>(rest % p);
      rest /= p;
      if (digit != 0) terms.emplace(e, Fp(digit, p));
    }
    out.push_back(LaurentElem::from_terms(proto.zero_coeff(), terms));
  }
  return out;
}

}  // namespace genus_forge
