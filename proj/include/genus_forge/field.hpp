#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace genus_forge {

/// Largest prime accepted as a base field modulus unless the caller raises it.
inline constexpr std::uint32_t kDefaultMaxPrime = 997;

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is an odd prime <= max_prime.
void check_odd_prime(std::uint64_t p, std::uint64_t max_prime = kDefaultMaxPrime);

/// Element of the prime field F_p.
class Fp {
 public:
  Fp() = default;
  Fp(std::int64_t value, std::uint32_t p);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }
  bool is_one() const { return value_ == 1; }

  /// Representative in (-p/2, p/2], used for human-readable output.
  std::int64_t signed_value() const;

  Fp operator-() const;
  Fp& operator+=(const Fp& o);
  Fp& operator-=(const Fp& o);
  Fp& operator*=(const Fp& o);
  Fp& operator/=(const Fp& o);
  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) {
    return a.value_ == b.value_ && a.p_ == b.p_;
  }

  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  std::uint64_t field_order() const { return p_; }
  Fp zero_like() const { return Fp(0, p_); }
  Fp one_like() const { return Fp(1, p_); }

 private:
  void check_same(const Fp& o) const;

  std::uint32_t value_ = 0;
  std::uint32_t p_ = 0;
};

/// The finite field F_p[X]/(m) for a monic irreducible m. Irreducibility is
/// the caller's responsibility; see residue_field() in poly.hpp.
class ExtField {
 public:
  /// `modulus` holds ascending coefficients of a monic polynomial of degree >= 1.
  static std::shared_ptr<const ExtField> create(std::uint32_t p,
                                                std::vector<Fp> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::size_t degree() const { return modulus_.size() - 1; }
  std::uint64_t order() const { return order_; }
  const std::vector<Fp>& modulus() const { return modulus_; }

  bool operator==(const ExtField& o) const {
    return p_ == o.p_ && modulus_ == o.modulus_;
  }

 private:
  ExtField(std::uint32_t p, std::vector<Fp> modulus);

  std::uint32_t p_;
  std::vector<Fp> modulus_;
  std::uint64_t order_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

/// Element of an ExtField, stored as a residue of degree < deg(m).
class ExtFieldElem {
 public:
  ExtFieldElem() = default;
  ExtFieldElem(ExtFieldPtr field, std::vector<Fp> coeffs);
  ExtFieldElem(ExtFieldPtr field, std::int64_t constant);

  /// Element with base-p digits of `index` as coefficients; enumerates the field.
  static ExtFieldElem from_index(ExtFieldPtr field, std::uint64_t index);
  /// The class of X.
  static ExtFieldElem generator(ExtFieldPtr field);

  const ExtFieldPtr& field() const { return field_; }
  const std::vector<Fp>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  bool is_one() const;

  ExtFieldElem operator-() const;
  ExtFieldElem& operator+=(const ExtFieldElem& o);
  ExtFieldElem& operator-=(const ExtFieldElem& o);
  ExtFieldElem& operator*=(const ExtFieldElem& o);
  ExtFieldElem& operator/=(const ExtFieldElem& o);
  friend ExtFieldElem operator+(ExtFieldElem a, const ExtFieldElem& b) { return a += b; }
  friend ExtFieldElem operator-(ExtFieldElem a, const ExtFieldElem& b) { return a -= b; }
  friend ExtFieldElem operator*(ExtFieldElem a, const ExtFieldElem& b) { return a *= b; }
  friend ExtFieldElem operator/(ExtFieldElem a, const ExtFieldElem& b) { return a /= b; }
  friend bool operator==(const ExtFieldElem& a, const ExtFieldElem& b);

  ExtFieldElem inverse() const;
  ExtFieldElem pow(std::uint64_t e) const;

  std::uint64_t field_order() const { return field_->order(); }
  ExtFieldElem zero_like() const { return ExtFieldElem(field_, 0); }
  ExtFieldElem one_like() const { return ExtFieldElem(field_, 1); }

 private:
  void check_same(const ExtFieldElem& o) const;

  ExtFieldPtr field_;
  std::vector<Fp> coeffs_;
};

/// Fields up to this size decide squareness by exhaustive search.
inline constexpr std::uint64_t kExhaustiveSquareLimit = 64;

bool is_square(const Fp& a);
bool is_square(const ExtFieldElem& a);

bool is_square_exhaustive(const Fp& a);
bool is_square_exhaustive(const ExtFieldElem& a);

/// Some b with b*b == a, or nullopt when a is a non-square (Tonelli-Shanks).
std::optional<Fp> sqrt(const Fp& a);
std::optional<ExtFieldElem> sqrt(const ExtFieldElem& a);

std::string to_string(const Fp& a);
std::string to_string(const ExtFieldElem& a, const std::string& var = "i");

}  // namespace genus_forge
