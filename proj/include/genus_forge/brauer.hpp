#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus_forge/poly.hpp"

namespace genus_forge {

/// The quaternion algebra (a, b) over F_p(t): i^2 = a, j^2 = b, ij = -ji.
struct QuaternionSymbol {
  QuaternionSymbol(RatFun a, RatFun b);

  RatFun a;
  RatFun b;
};

std::string to_string(const QuaternionSymbol& s);

/// Tame residue of (a, b) at a place, as an element of Z/2: 1 iff
/// (-1)^{v(a)v(b)} a^{v(b)} / b^{v(a)} is a non-square in the residue field.
int residue(const QuaternionSymbol& s, const Place& v);

/// Finitely supported local invariants Place -> Z/2. Zero entries may be
/// listed (for display) but do not affect equality.
class BrauerVector {
 public:
  BrauerVector() = default;

  void set(const Place& v, int value) { entries_.insert_or_assign(v, value & 1); }
  int at(const Place& v) const;
  const std::map<Place, int>& entries() const { return entries_; }
  std::vector<Place> support() const;
  int sum() const;
  bool is_zero() const { return support().empty(); }
  /// Support contained in S.
  bool supported_in(const std::vector<Place>& s) const;

  friend bool operator==(const BrauerVector& x, const BrauerVector& y) { return x.support() == y.support(); }
  friend BrauerVector operator+(const BrauerVector& x, const BrauerVector& y);

 private:
  std::map<Place, int> entries_;
};

std::string to_string(const BrauerVector& v);

/// Residues at every place dividing a or b and at infinity. Throws
/// std::domain_error when a factor has degree above max_deg.
BrauerVector brauer_class(const QuaternionSymbol& s, int max_deg = 6);

/// <a, b> -> (a, b); <a, b, c> -> (-ab, -bc), the even Clifford algebra.
QuaternionSymbol witt_invariant(const std::vector<RatFun>& diag);

/// All sum-zero vectors on S, in binary counting order.
std::vector<BrauerVector> enumerate_2Br(const std::vector<Place>& s);

struct GenusReport {
  std::uint64_t genera = 0;
  /// |Pic/2|: exact class count per genus when `exact`, otherwise a lower bound.
  std::uint64_t classes_per_genus = 0;
  bool exact = false;
  std::uint64_t total_classes = 0;
  bool hasse_principle = false;
};

/// Counting statements for regular forms of rank n >= 3 over O_S with |S|
/// places: 2^{|S|-1} genera, each of size |Pic/2| when n >= 5 or the form is
/// isotropic; the class set is a singleton iff |Pic| is odd.
GenusReport genus_report(std::size_t num_places, int rank, std::uint64_t pic_order, std::uint64_t pic_mod2_order,
                         bool isotropic);

}  // namespace genus_forge
