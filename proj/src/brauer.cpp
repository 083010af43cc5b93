#include "genus_forge/brauer.hpp"

#include <set>
#include <stdexcept>

#include "genus_forge/field.hpp"

namespace genus_forge {

namespace {

// f = pi^v * unit; the unit with the pi-part removed.
RatFun unit_part(const RatFun& f, const Poly& pi, int v) {
  const std::uint32_t p = f.modulus();
  const Poly one = Poly::constant(p, 1);
  if (v >= 0) return f / RatFun(pi.pow(static_cast<unsigned>(v)), one);
  return f * RatFun(pi.pow(static_cast<unsigned>(-v)), one);
}

void add_prime_factors(const Poly& f, int max_deg, std::set<Place>& out) {
  if (f.degree() < 1) return;
  for (const auto& [prime, mult] : factor(f, max_deg).factors) out.insert(Place::finite(prime));
}

}  // namespace

QuaternionSymbol::QuaternionSymbol(RatFun x, RatFun y) : a(std::move(x)), b(std::move(y)) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("quaternion symbol: entries must be nonzero");
  if (a.modulus() != b.modulus()) throw std::domain_error("quaternion symbol: modulus mismatch");
  if (a.modulus() == 2) throw std::domain_error("quaternion symbol: characteristic 2");
}

std::string to_string(const QuaternionSymbol& s) { return "(" + to_string(s.a) + ", " + to_string(s.b) + ")"; }

int residue(const QuaternionSymbol& s, const Place& v) {
  const std::uint32_t p = s.a.modulus();
  if (v.modulus() != p) throw std::domain_error("residue: place over a different field");
  const int va = v.valuation(s.a);
  const int vb = v.valuation(s.b);
  const bool negate = (va * vb) % 2 != 0;
  const bool use_a = vb % 2 != 0;
  const bool use_b = va % 2 != 0;

  if (v.is_infinite()) {
    // Unit part at infinity: ratio of leading coefficients.
    Fp u(negate ? -1 : 1, p);
    if (use_a) u *= s.a.num().lead() / s.a.den().lead();
    if (use_b) u *= s.b.num().lead() / s.b.den().lead();
    return is_square(u) ? 0 : 1;
  }
  const Poly& pi = v.prime();
  const ExtFieldPtr k = residue_field(pi);
  ExtFieldElem u(k, negate ? -1 : 1);
  // Square classes only: a^{vb} ~ a^{vb mod 2}, b^{-va} ~ b^{va mod 2}.
  auto reduce_unit = [&](const RatFun& f, int vf) {
    RatFun w = unit_part(f, pi, vf);
    return reduce(w.num(), k) / reduce(w.den(), k);
  };
  if (use_a) u *= reduce_unit(s.a, va);
  if (use_b) u *= reduce_unit(s.b, vb);
  return is_square(u) ? 0 : 1;
}

int BrauerVector::at(const Place& v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Place> BrauerVector::support() const {
  std::vector<Place> out;
  for (const auto& [v, x] : entries_)
    if (x != 0) out.push_back(v);
  return out;
}

int BrauerVector::sum() const {
  int s = 0;
  for (const auto& [v, x] : entries_) s ^= x;
  return s;
}

bool BrauerVector::supported_in(const std::vector<Place>& s) const {
  for (const auto& v : support()) {
    bool found = false;
    for (const auto& w : s) found = found || w == v;
    if (!found) return false;
  }
  return true;
}

BrauerVector operator+(const BrauerVector& x, const BrauerVector& y) {
  BrauerVector r = x;
  for (const auto& [v, value] : y.entries()) r.set(v, r.at(v) ^ value);
  return r;
}

std::string to_string(const BrauerVector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& [place, x] : v.entries()) {
    if (!first) out += ", ";
    first = false;
    out += place.name() + ": " + std::to_string(x);
  }
  return out + "}";
}

BrauerVector brauer_class(const QuaternionSymbol& s, int max_deg) {
  std::set<Place> places;
  for (const RatFun* f : {&s.a, &s.b}) {
    add_prime_factors(f->num(), max_deg, places);
    add_prime_factors(f->den(), max_deg, places);
  }
  places.insert(Place::infinity(s.a.modulus()));
  BrauerVector out;
  for (const auto& v : places) out.set(v, residue(s, v));
  if (out.sum() != 0) throw std::logic_error("brauer_class: residues violate reciprocity for " + to_string(s));
  return out;
}

QuaternionSymbol witt_invariant(const std::vector<RatFun>& diag) {
  for (const auto& d : diag)
    if (d.is_zero()) throw std::domain_error("witt_invariant: form is not regular");
  if (diag.size() == 2) return QuaternionSymbol(diag[0], diag[1]);
  if (diag.size() == 3) return QuaternionSymbol(-(diag[0] * diag[1]), -(diag[1] * diag[2]));
  throw std::domain_error("witt_invariant: rank must be 2 or 3");
}

std::vector<BrauerVector> enumerate_2Br(const std::vector<Place>& s) {
  if (s.empty()) throw std::domain_error("enumerate_2Br: S must be nonempty");
  if (s.size() > 30) throw std::domain_error("enumerate_2Br: S too large");
  const std::size_t free = s.size() - 1;
  std::vector<BrauerVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free); ++mask) {
    BrauerVector v;
    int parity = 0;
    for (std::size_t i = 0; i < free; ++i) {
      const int bit = static_cast<int>((mask >> i) & 1);
      v.set(s[i], bit);
      parity ^= bit;
    }
    v.set(s.back(), parity);
    out.push_back(std::move(v));
  }
  return out;
}

GenusReport genus_report(std::size_t num_places, int rank, std::uint64_t pic_order, std::uint64_t pic_mod2_order,
                         bool isotropic) {
  if (num_places < 1) throw std::domain_error("genus_report: S must be nonempty");
  if (num_places > 62) throw std::domain_error("genus_report: S too large");
  if (rank < 3) throw std::domain_error("genus_report: rank must be at least 3");
  if (pic_order == 0 || pic_mod2_order == 0 || pic_order % pic_mod2_order != 0) {
    throw std::domain_error("genus_report: inconsistent Picard data");
  }
  GenusReport r;
  r.genera = std::uint64_t{1} << (num_places - 1);
  r.classes_per_genus = pic_mod2_order;
  r.exact = rank >= 5 || isotropic;
  r.total_classes = r.genera * r.classes_per_genus;
  r.hasse_principle = pic_order % 2 == 1;
  return r;
}

}  // namespace genus_forge
