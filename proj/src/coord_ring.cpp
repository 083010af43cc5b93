#include "genus_forge/coord_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "genus_forge/text.hpp"

namespace genus_forge {

KElem::KElem(const EllipticCurve& e)
    : KElem(std::make_shared<const EllipticCurve>(e), Poly(e.p()), Poly(e.p()), Poly::constant(e.p(), 1)) {}

KElem::KElem(const EllipticCurve& e, Poly a, Poly b, Poly d)
    : KElem(std::make_shared<const EllipticCurve>(e), std::move(a), std::move(b), std::move(d)) {}

KElem::KElem(std::shared_ptr<const EllipticCurve> e, Poly a, Poly b, Poly d)
    : curve_(std::move(e)), a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  const std::uint32_t p = curve_->p();
  if (a_.modulus() != p || b_.modulus() != p || d_.modulus() != p) {
    throw std::domain_error("KElem: coefficient modulus mismatch");
  }
  if (d_.is_zero()) throw std::domain_error("KElem: zero denominator");
  normalize();
}

void KElem::normalize() {
  const std::uint32_t p = curve_->p();
  if (is_zero()) {
    d_ = Poly::constant(p, 1);
    return;
  }
  Poly g = gcd(gcd(a_, b_), d_);
  if (!g.is_one()) {
    a_ = a_ / g;
    b_ = b_ / g;
    d_ = d_ / g;
  }
  if (!d_.is_monic()) {
    Fp inv = d_.lead().inverse();
    a_ *= inv;
    b_ *= inv;
    d_ *= inv;
  }
}

void KElem::check_same(const KElem& o) const {
  if (curve_ != o.curve_ && !(*curve_ == *o.curve_)) throw std::domain_error("KElem: curve mismatch");
}

bool operator==(const KElem& u, const KElem& v) {
  if (u.curve_ != v.curve_ && !(*u.curve_ == *v.curve_)) return false;
  return u.a_ == v.a_ && u.b_ == v.b_ && u.d_ == v.d_;
}

KElem KElem::conjugate() const { return KElem(curve_, a_, -b_, d_); }

RatFun KElem::norm() const { return RatFun(a_ * a_ - curve_->rhs() * b_ * b_, d_ * d_); }

RatFun KElem::trace() const { return RatFun(a_ * Fp(2, modulus()), d_); }

Fp KElem::eval(const CurvePoint& pt) const {
  if (pt.is_infinity() || !curve_->contains(pt)) throw std::domain_error("KElem::eval: need an affine curve point");
  Fp den = d_.eval(pt.x());
  if (den.is_zero()) throw std::domain_error("KElem::eval: denominator vanishes at " + pt.to_string());
  return (a_.eval(pt.x()) + b_.eval(pt.x()) * pt.y()) / den;
}

KElem KElem::inverse() const {
  if (is_zero()) throw std::domain_error("KElem: division by zero");
  // 1 / ((a + b y)/d) = d (a - b y) / (a^2 - f b^2); f is not a square in F_p(x).
  Poly n = a_ * a_ - curve_->rhs() * b_ * b_;
  return KElem(curve_, d_ * a_, -(d_ * b_), std::move(n));
}

KElem KElem::operator-() const { return KElem(curve_, -a_, -b_, d_); }

KElem& KElem::operator+=(const KElem& o) {
  check_same(o);
  *this = KElem(curve_, a_ * o.d_ + o.a_ * d_, b_ * o.d_ + o.b_ * d_, d_ * o.d_);
  return *this;
}

KElem& KElem::operator-=(const KElem& o) {
  check_same(o);
  *this = KElem(curve_, a_ * o.d_ - o.a_ * d_, b_ * o.d_ - o.b_ * d_, d_ * o.d_);
  return *this;
}

KElem& KElem::operator*=(const KElem& o) {
  check_same(o);
  Poly a = a_ * o.a_ + curve_->rhs() * b_ * o.b_;
  Poly b = a_ * o.b_ + b_ * o.a_;
  *this = KElem(curve_, std::move(a), std::move(b), d_ * o.d_);
  return *this;
}

KElem& KElem::operator/=(const KElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

std::pair<RatFun, RatFun> norm_trace(const KElem& u) { return {u.norm(), u.trace()}; }

bool is_integral(const KElem& u) { return u.norm().is_polynomial() && u.trace().is_polynomial(); }

bool is_unit(const KElem& u) { return !u.is_zero() && is_integral(u) && is_integral(u.inverse()); }

std::optional<KElem> exact_div(const KElem& u, const KElem& v) {
  if (v.is_zero()) throw std::domain_error("KElem: division by zero");
  KElem q = u / v;
  if (!is_integral(q)) return std::nullopt;
  return q;
}

std::optional<KElem> sqrt(const KElem& u) {
  if (!is_integral(u)) return std::nullopt;
  if (u.is_zero()) return u;
  const std::uint32_t p = u.modulus();
  const Poly& f = u.curve().rhs();
  // h = c + e y with h^2 = u: N(h)^2 = N(u) and T(h)^2 = T(u) + 2 N(h).
  auto s = sqrt(u.norm().num());
  if (!s) return std::nullopt;
  const Fp two(2, p);
  const Fp half = two.inverse();
  for (const Fp sign : {Fp(1, p), Fp(-1, p)}) {
    auto t = sqrt(u.a() * two + *s * (two * sign));
    if (!t) continue;
    Poly c = *t * half;
    std::optional<Poly> e;
    if (!c.is_zero()) {
      e = exact_div(u.b() * half, c);
    } else if (u.b().is_zero()) {
      if (auto q = exact_div(u.a(), f)) e = sqrt(*q);
    }
    if (!e) continue;
    KElem h(u.curve_ptr(), c, *e, Poly::constant(p, 1));
    if (h * h == u) return h;
  }
  return std::nullopt;
}

namespace {

// Monomials ordered by pole order at infinity: x^k has weight 2k, x^k y has 2k+3.
std::string numerator_string(const Poly& a, const Poly& b) {
  std::vector<std::pair<int, std::pair<std::int64_t, std::string>>> weighted;
  auto xpow = [](std::size_t k) {
    if (k == 0) return std::string();
    return k == 1 ? std::string("x") : "x^" + std::to_string(k);
  };
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) {
    weighted.push_back({static_cast<int>(2 * k), {a.coeffs()[k].signed_value(), xpow(k)}});
  }
  for (std::size_t k = 0; k < b.coeffs().size(); ++k) {
    std::string m = xpow(k);
    weighted.push_back({static_cast<int>(2 * k + 3), {b.coeffs()[k].signed_value(), m.empty() ? "y" : m + "*y"}});
  }
  std::sort(weighted.begin(), weighted.end(), [](const auto& l, const auto& r) { return l.first > r.first; });
  std::vector<std::pair<std::int64_t, std::string>> terms;
  for (auto& w : weighted) terms.push_back(std::move(w.second));
  return format_terms(terms);
}

std::size_t term_count(const Poly& a, const Poly& b) {
  std::size_t n = 0;
  for (const auto& c : a.coeffs()) n += !c.is_zero();
  for (const auto& c : b.coeffs()) n += !c.is_zero();
  return n;
}

}  // namespace

std::string to_string(const KElem& u) {
  std::string num = numerator_string(u.a(), u.b());
  if (u.is_polynomial()) return num;
  std::string den = to_string(u.d(), "x");
  if (term_count(u.a(), u.b()) > 1) num = "(" + num + ")";
  if (term_count(u.d(), Poly(u.modulus())) > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

namespace {

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return trim(s.substr(1, s.size() - 2));
  return s;
}

}  // namespace

KElem parse_kelem(std::string_view text, const EllipticCurve& e) {
  const std::uint32_t p = e.p();
  std::string_view s = trim(text);
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == '/' && depth == 0) slash = i;
  }
  std::string_view num = strip_parens(s.substr(0, slash));
  Poly d = Poly::constant(p, 1);
  if (slash != std::string_view::npos) d = parse_poly(strip_parens(s.substr(slash + 1)), p, "x");
  Poly a(p), b(p);
  for (const auto& t : split_signed_terms(num)) {
    std::string term = t;
    const std::size_t at = term.find('y');
    if (at == std::string::npos) {
      a += parse_poly(term, p, "x");
      continue;
    }
    term.erase(at, 1);
    if (at > 0 && term[at - 1] == '*') {
      term.erase(at - 1, 1);
    } else if (at < term.size() && term[at] == '*') {
      term.erase(at, 1);
    }
    if (term.empty() || term == "+" || term == "-") term += "1";
    if (term.find('y') != std::string::npos) throw std::invalid_argument("y^2 terms are not accepted: " + t);
    b += parse_poly(term, p, "x");
  }
  if (d.is_zero()) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return KElem(e, a, b, d);
}

}  // namespace genus_forge
