#include "genus_forge/field.hpp"

#include <sstream>
#include <stdexcept>

namespace genus_forge {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_odd_prime(std::uint64_t p, std::uint64_t max_prime) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not an odd prime");
  }
  if (p > max_prime) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds bound " +
                                std::to_string(max_prime));
  }
}

// ---------------------------------------------------------------------------
// Fp

Fp::Fp(std::int64_t value, std::uint32_t p) : p_(p) {
  if (p == 0) throw std::invalid_argument("Fp: modulus must be positive");
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

std::int64_t Fp::signed_value() const {
  if (value_ > p_ / 2) return static_cast<std::int64_t>(value_) - p_;
  return value_;
}

void Fp::check_same(const Fp& o) const {
  if (p_ != o.p_) throw std::domain_error("Fp: modulus mismatch");
}

Fp Fp::operator-() const { return Fp(value_ == 0 ? 0 : p_ - value_, p_); }

Fp& Fp::operator+=(const Fp& o) {
  check_same(o);
  value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + o.value_) % p_);
  return *this;
}

Fp& Fp::operator-=(const Fp& o) {
  check_same(o);
  value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) + p_ - o.value_) % p_);
  return *this;
}

Fp& Fp::operator*=(const Fp& o) {
  check_same(o);
  value_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(value_) * o.value_) % p_);
  return *this;
}

Fp& Fp::operator/=(const Fp& o) {
  check_same(o);
  return *this *= o.inverse();
}

Fp Fp::pow(std::uint64_t e) const {
  Fp result(1, p_);
  Fp base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

Fp Fp::inverse() const {
  if (value_ == 0) throw std::domain_error("Fp: division by zero");
  // Extended Euclid on machine integers.
  std::int64_t r0 = p_, r1 = value_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return Fp(s0, p_);
}

// ---------------------------------------------------------------------------
// ExtField

std::shared_ptr<const ExtField> ExtField::create(std::uint32_t p, std::vector<Fp> modulus) {
  return std::shared_ptr<const ExtField>(new ExtField(p, std::move(modulus)));
}

ExtField::ExtField(std::uint32_t p, std::vector<Fp> modulus) : p_(p), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2) throw std::invalid_argument("ExtField: modulus must have degree >= 1");
  for (const auto& c : modulus_) {
    if (c.modulus() != p_) throw std::invalid_argument("ExtField: coefficient modulus mismatch");
  }
  if (!modulus_.back().is_one()) throw std::invalid_argument("ExtField: modulus must be monic");
  order_ = 1;
  for (std::size_t i = 0; i < degree(); ++i) order_ *= p_;
}

// ---------------------------------------------------------------------------
// ExtFieldElem

ExtFieldElem::ExtFieldElem(ExtFieldPtr field, std::vector<Fp> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("ExtFieldElem: null field");
  const auto& m = field_->modulus();
  const std::size_t n = field_->degree();
  const std::uint32_t p = field_->characteristic();
  for (auto& c : coeffs_) {
    if (c.modulus() != p) throw std::domain_error("ExtFieldElem: coefficient modulus mismatch");
  }
  // Reduce by the monic modulus.
  for (std::size_t k = coeffs_.size(); k-- > n;) {
    Fp lead = coeffs_[k];
    if (lead.is_zero()) continue;
    for (std::size_t j = 0; j <= n; ++j) coeffs_[k - n + j] -= lead * m[j];
  }
  coeffs_.resize(n, Fp(0, p));
}

ExtFieldElem::ExtFieldElem(ExtFieldPtr field, std::int64_t constant)
    : ExtFieldElem(field, std::vector<Fp>{Fp(constant, field->characteristic())}) {}

ExtFieldElem ExtFieldElem::from_index(ExtFieldPtr field, std::uint64_t index) {
  const std::uint32_t p = field->characteristic();
  std::vector<Fp> c;
  for (std::size_t i = 0; i < field->degree(); ++i) {
    c.emplace_back(static_cast<std::int64_t>(index % p), p);
    index /= p;
  }
  return ExtFieldElem(std::move(field), std::move(c));
}

ExtFieldElem ExtFieldElem::generator(ExtFieldPtr field) {
  const std::uint32_t p = field->characteristic();
  return ExtFieldElem(std::move(field), std::vector<Fp>{Fp(0, p), Fp(1, p)});
}

bool ExtFieldElem::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool ExtFieldElem::is_one() const {
  if (coeffs_.empty() || !coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

void ExtFieldElem::check_same(const ExtFieldElem& o) const {
  if (!field_ || !o.field_) throw std::domain_error("ExtFieldElem: uninitialized element");
  if (field_ != o.field_ && !(*field_ == *o.field_)) {
    throw std::domain_error("ExtFieldElem: field mismatch");
  }
}

bool operator==(const ExtFieldElem& a, const ExtFieldElem& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_;
  if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

ExtFieldElem ExtFieldElem::operator-() const {
  ExtFieldElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ExtFieldElem& ExtFieldElem::operator+=(const ExtFieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ExtFieldElem& ExtFieldElem::operator-=(const ExtFieldElem& o) {
  check_same(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ExtFieldElem& ExtFieldElem::operator*=(const ExtFieldElem& o) {
  check_same(o);
  const std::uint32_t p = field_->characteristic();
  std::vector<Fp> prod(coeffs_.size() + o.coeffs_.size(), Fp(0, p));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  *this = ExtFieldElem(field_, std::move(prod));
  return *this;
}

ExtFieldElem& ExtFieldElem::operator/=(const ExtFieldElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

ExtFieldElem ExtFieldElem::pow(std::uint64_t e) const {
  ExtFieldElem result(field_, 1);
  ExtFieldElem base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

ExtFieldElem ExtFieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("ExtFieldElem: division by zero");
  return pow(field_->order() - 2);
}

// ---------------------------------------------------------------------------
// Squares

namespace {

template <typename F>
F element_at(const F& like, std::uint64_t index);

template <>
Fp element_at(const Fp& like, std::uint64_t index) {
  return Fp(static_cast<std::int64_t>(index), like.modulus());
}

template <>
ExtFieldElem element_at(const ExtFieldElem& like, std::uint64_t index) {
  return ExtFieldElem::from_index(like.field(), index);
}

template <typename F>
bool exhaustive_square(const F& a) {
  const std::uint64_t q = a.field_order();
  for (std::uint64_t i = 0; i < q; ++i) {
    F b = element_at(a, i);
    if (b * b == a) return true;
  }
  return false;
}

template <typename F>
bool euler_square(const F& a) {
  if (a.is_zero()) return true;
  return a.pow((a.field_order() - 1) / 2).is_one();
}

template <typename F>
std::optional<F> tonelli_shanks(const F& a) {
  if (a.is_zero()) return a;
  if (!euler_square(a)) return std::nullopt;
  const std::uint64_t q = a.field_order();
  std::uint64_t odd = q - 1;
  unsigned twos = 0;
  while ((odd & 1) == 0) {
    odd >>= 1;
    ++twos;
  }
  F z = a.one_like();
  for (std::uint64_t i = 2; i < q; ++i) {
    z = element_at(a, i);
    if (!euler_square(z)) break;
  }
  F c = z.pow(odd);
  F t = a.pow(odd);
  F r = a.pow((odd + 1) / 2);
  unsigned m = twos;
  while (!t.is_one()) {
    unsigned i = 0;
    F t2 = t;
    while (!t2.is_one()) {
      t2 *= t2;
      ++i;
    }
    F b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  return r;
}

}  // namespace

bool is_square_exhaustive(const Fp& a) { return exhaustive_square(a); }
bool is_square_exhaustive(const ExtFieldElem& a) { return exhaustive_square(a); }

bool is_square(const Fp& a) {
  return a.field_order() > kExhaustiveSquareLimit ? euler_square(a) : exhaustive_square(a);
}

bool is_square(const ExtFieldElem& a) {
  return a.field_order() > kExhaustiveSquareLimit ? euler_square(a) : exhaustive_square(a);
}

std::optional<Fp> sqrt(const Fp& a) { return tonelli_shanks(a); }
std::optional<ExtFieldElem> sqrt(const ExtFieldElem& a) { return tonelli_shanks(a); }

std::string to_string(const Fp& a) { return std::to_string(a.signed_value()); }

std::string to_string(const ExtFieldElem& a, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  const auto& c = a.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    std::int64_t v = c[k].signed_value();
    if (v == 0) continue;
    if (v < 0) {
      os << "-";
      v = -v;
    } else if (!first) {
      os << "+";
    }
    if (k == 0 || v != 1) os << v;
    if (k > 0 && v != 1) os << "*";
    if (k > 0) os << var;
    if (k > 1) os << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace genus_forge
