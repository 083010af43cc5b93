#include "genus_forge/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "genus_forge/text.hpp"

namespace genus_forge {

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::uint32_t p, const std::vector<std::int64_t>& ascending) : p_(p) {
  c_.reserve(ascending.size());
  for (auto v : ascending) c_.emplace_back(v, p);
  trim();
}

Poly::Poly(std::uint32_t p, std::vector<Fp> ascending) : p_(p), c_(std::move(ascending)) {
  for (const auto& c : c_) {
    if (c.modulus() != p_) throw std::domain_error("Poly: coefficient modulus mismatch");
  }
  trim();
}

Poly Poly::constant(std::uint32_t p, std::int64_t c) { return Poly(p, std::vector<std::int64_t>{c}); }

Poly Poly::monomial(std::uint32_t p, std::int64_t c, std::size_t degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return Poly(p, v);
}

Poly Poly::linear(std::uint32_t p, std::int64_t root) { return Poly(p, std::vector<std::int64_t>{-root, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (p_ != o.p_) throw std::domain_error("Poly: modulus mismatch");
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  r *= lead().inverse();
  return r;
}

Poly Poly::derivative() const {
  std::vector<Fp> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Fp(static_cast<std::int64_t>(i), p_));
  return Poly(p_, std::move(d));
}

Fp Poly::eval(const Fp& x) const {
  Fp acc(0, p_);
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

Poly Poly::shifted(std::int64_t shift) const {
  // Horner in the polynomial ring: f(X + s).
  Poly lin(p_, std::vector<std::int64_t>{shift, 1});
  Poly acc(p_);
  for (std::size_t k = c_.size(); k-- > 0;) {
    acc *= lin;
    acc += Poly(p_, std::vector<Fp>{c_[k]});
  }
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(p_, 1);
  Poly base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fp(0, p_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Fp(0, p_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_same(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Fp> prod(c_.size() + o.c_.size() - 1, Fp(0, p_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(prod);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Fp& c) {
  if (c.modulus() != p_) throw std::domain_error("Poly: scalar modulus mismatch");
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (a.modulus() != b.modulus()) throw std::domain_error("Poly: modulus mismatch");
  if (b.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
  const std::uint32_t p = a.modulus();
  std::vector<Fp> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  if (r.size() <= db) return {Poly(p), a};
  std::vector<Fp> q(r.size() - db, Fp(0, p));
  const Fp inv_lead = b.lead().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    Fp factor = r[k] * inv_lead;
    q[k - db] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= factor * bc[j];
  }
  r.resize(db);
  return {Poly(p, std::move(q)), Poly(p, std::move(r))};
}

Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.p_ != b.p_) return a.p_ < b.p_;
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t k = a.c_.size(); k-- > 0;) {
    if (a.c_[k].value() != b.c_[k].value()) return a.c_[k].value() < b.c_[k].value();
  }
  return false;
}

XgcdResult xgcd(const Poly& f, const Poly& g) {
  if (f.modulus() != g.modulus()) throw std::domain_error("xgcd: modulus mismatch");
  const std::uint32_t p = f.modulus();
  if (f.is_zero() && g.is_zero()) throw std::domain_error("xgcd: both inputs are zero");
  Poly r0 = f, r1 = g;
  Poly s0 = Poly::constant(p, 1), s1(p);
  Poly t0(p), t1 = Poly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Fp inv = r0.lead().inverse();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero() && g.is_zero()) return Poly(f.modulus());
  return xgcd(f, g).d;
}

int valuation(const Poly& f, const Poly& prime) {
  if (f.is_zero()) throw std::domain_error("valuation of the zero polynomial");
  int v = 0;
  Poly g = f;
  while (true) {
    auto [q, r] = divmod(g, prime);
    if (!r.is_zero()) return v;
    g = std::move(q);
    ++v;
  }
}

std::optional<Poly> sqrt(const Poly& f) {
  const std::uint32_t p = f.modulus();
  if (f.is_zero()) return f;
  if (f.degree() % 2 != 0) return std::nullopt;
  auto top = sqrt(f.lead());
  if (!top) return std::nullopt;
  const std::size_t k = static_cast<std::size_t>(f.degree() / 2);
  std::vector<Fp> r(k + 1, Fp(0, p));
  r[k] = *top;
  const Fp inv_two_top = (Fp(2, p) * *top).inverse();
  for (std::size_t j = k; j-- > 0;) {
    Fp acc = f.coeff(k + j);
    for (std::size_t i = j + 1; i < k; ++i) acc -= r[i] * r[k + j - i];
    r[j] = acc * inv_two_top;
  }
  Poly root(p, std::move(r));
  if (root * root != f) return std::nullopt;
  return root;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("is_irreducible: constant polynomial");
  const Poly g = f.monic();
  const std::uint32_t p = g.modulus();
  const Poly x = Poly::monomial(p, 1, 1);
  Poly h = x;
  for (int i = 1; 2 * i <= g.degree(); ++i) {
    // h <- h^p mod g
    Poly acc = Poly::constant(p, 1);
    Poly base = h;
    for (std::uint32_t e = p; e != 0; e >>= 1) {
      if (e & 1) acc = (acc * base) % g;
      base = (base * base) % g;
    }
    h = acc;
    if (!gcd(h - x, g).is_one()) return false;
  }
  return true;
}

std::vector<Poly> monic_polys(std::uint32_t p, int d) {
  std::vector<Poly> out;
  if (d < 0) return out;
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= p;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
    std::uint64_t rem = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<std::int64_t>(rem % p);
      rem /= p;
    }
    c[d] = 1;
    out.emplace_back(p, c);
  }
  return out;
}

bool is_irreducible_trial(const Poly& f) {
  if (f.degree() < 1) throw std::domain_error("is_irreducible: constant polynomial");
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    for (const auto& g : monic_polys(f.modulus(), d)) {
      if ((f % g).is_zero()) return false;
    }
  }
  return true;
}

std::vector<Poly> monic_irreducibles(std::uint32_t p, int d) {
  std::vector<Poly> out;
  if (d < 1) return out;
  for (auto& g : monic_polys(p, d)) {
    if (is_irreducible(g)) out.push_back(std::move(g));
  }
  return out;
}

Factorization factor(const Poly& f, int max_deg) {
  if (f.is_zero()) throw std::domain_error("factor: zero polynomial");
  const std::uint32_t p = f.modulus();
  Factorization out{f.lead(), {}};
  Poly g = f.monic();
  for (int d = 1; g.degree() > 0; ++d) {
    if (2 * d > g.degree()) {
      // No factor of degree < d remains, so g itself is irreducible.
      if (g.degree() > max_deg) {
        throw std::domain_error("factor: irreducible factor of degree " + std::to_string(g.degree()) +
                                " exceeds bound " + std::to_string(max_deg));
      }
      out.factors.emplace_back(g, 1);
      break;
    }
    if (d > max_deg) {
      throw std::domain_error("factor: factorization bound " + std::to_string(max_deg) + " exceeded");
    }
    // Every monic divisor of degree d is irreducible once smaller factors are gone.
    for (const auto& cand : monic_polys(p, d)) {
      if (cand.degree() > g.degree()) break;
      int mult = 0;
      while (true) {
        auto q = exact_div(g, cand);
        if (!q) break;
        g = std::move(*q);
        ++mult;
      }
      if (mult > 0) out.factors.emplace_back(cand, mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

ExtFieldPtr residue_field(const Poly& prime) {
  if (!prime.is_monic() || prime.degree() < 1 || !is_irreducible(prime)) {
    throw std::domain_error("residue_field: modulus is not monic irreducible");
  }
  return ExtField::create(prime.modulus(), prime.coeffs());
}

ExtFieldElem reduce(const Poly& f, const ExtFieldPtr& field) {
  if (f.modulus() != field->characteristic()) throw std::domain_error("reduce: modulus mismatch");
  return ExtFieldElem(field, f.coeffs());
}

namespace {

std::string power(std::string_view var, long long k) {
  if (k == 0) return "";
  std::string s(var);
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_string(const Poly& f, std::string_view var) {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    terms.emplace_back(f.coeffs()[k].signed_value(), power(var, static_cast<long long>(k)));
  }
  return format_terms(terms);
}

std::string to_canonical_string(const Poly& f, std::string_view var) {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) {
    terms.emplace_back(f.coeffs()[k].value(), power(var, static_cast<long long>(k)));
  }
  return format_terms(terms);
}

Poly parse_poly(std::string_view text, std::uint32_t p, std::string_view var) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated coefficient list: " + std::string(text));
    std::vector<std::int64_t> coeffs;
    for (const auto& item : split(s.substr(1, s.size() - 2), ',')) {
      if (!trim(item).empty()) coeffs.push_back(parse_int(trim(item)));
    }
    return Poly(p, coeffs);
  }
  Poly out(p);
  for (const auto& [coef, exp] : parse_terms(s, var)) {
    if (exp < 0) throw std::invalid_argument("negative exponent in polynomial: " + std::string(text));
    out += Poly::monomial(p, coef, static_cast<std::size_t>(exp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.modulus(), 1)) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.modulus(), 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Fp lc = den_.lead();
  if (!lc.is_one()) {
    Fp inv = lc.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(den_, num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  *this = RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) {
  *this = RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFun& RatFun::operator*=(const RatFun& o) {
  *this = RatFun(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
  if (o.is_zero()) throw std::domain_error("RatFun: division by zero");
  *this = RatFun(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string to_string(const RatFun& f, std::string_view var) {
  std::string n = to_string(f.num(), var);
  if (f.is_polynomial()) return n;
  std::string d = to_string(f.den(), var);
  auto wrap = [](const Poly& q, const std::string& s) {
    std::size_t terms = 0;
    for (const auto& c : q.coeffs()) terms += c.is_zero() ? 0 : 1;
    return terms > 1 || s.find('*') != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(f.num(), n) + "/" + wrap(f.den(), d);
}

// ---------------------------------------------------------------------------
// Place

Place Place::finite(Poly prime) {
  if (!prime.is_monic() || prime.degree() < 1 || !is_irreducible(prime)) {
    throw std::invalid_argument("place must be a monic irreducible polynomial, got " +
                                to_string(prime, "t"));
  }
  const std::uint32_t p = prime.modulus();
  return Place(p, std::move(prime));
}

Place Place::infinity(std::uint32_t p) { return Place(p, std::nullopt); }

const Poly& Place::prime() const {
  if (!prime_) throw std::logic_error("Place: infinite place has no prime polynomial");
  return *prime_;
}

std::string Place::name() const { return prime_ ? to_canonical_string(*prime_, "t") : "inf"; }

int Place::valuation(const RatFun& f) const {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  if (!prime_) return f.den().degree() - f.num().degree();
  return genus_forge::valuation(f.num(), *prime_) - genus_forge::valuation(f.den(), *prime_);
}

bool operator<(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return b.is_infinite();
  if (a.is_infinite()) return false;
  return *a.prime_ < *b.prime_;
}

std::vector<Place> enumerate_places(std::uint32_t p, int max_deg) {
  if (max_deg < 1) throw std::invalid_argument("enumerate_places: max_deg must be >= 1");
  std::vector<Place> out;
  for (int d = 1; d <= max_deg; ++d) {
    for (auto& g : monic_irreducibles(p, d)) out.push_back(Place::finite(std::move(g)));
  }
  out.push_back(Place::infinity(p));
  return out;
}

Place parse_place(std::string_view text, std::uint32_t p) {
  std::string_view s = trim(text);
  if (s == "inf" || s == "infinity" || s == "oo") return Place::infinity(p);
  return Place::finite(parse_poly(s, p, "t"));
}

}  // namespace genus_forge
