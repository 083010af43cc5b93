#include "genus_forge/pic.hpp"

#include <numeric>
#include <stdexcept>

namespace genus_forge {

PicGroup pic_group(const EllipticCurve& e) {
  PicGroup g{PicBase::elliptic, group_structure(e), e, enumerate_points(e), cosets_mod_2(e), {}};
  if (g.points.size() != g.order()) throw std::logic_error("pic: group structure disagrees with point count");
  return g;
}

PicGroup pic_group(const std::vector<Place>& s) {
  if (s.empty()) throw std::domain_error("pic: S must be nonempty");
  std::uint64_t d = 0;
  for (const auto& v : s) {
    if (v.modulus() != s.front().modulus()) throw std::domain_error("pic: places over different fields");
    d = std::gcd(d, static_cast<std::uint64_t>(v.degree()));
  }
  return PicGroup{PicBase::genus0, GroupStructure{1, d}, std::nullopt, {}, {}, s};
}

PicGroup pic_group_laurent(std::uint32_t p) {
  return pic_group(std::vector<Place>{Place::finite(Poly::monomial(p, 1, 1)), Place::infinity(p)});
}

std::uint64_t pic_mod2_order(const PicGroup& g) { return g.structure.mod2_order(); }

FracIdeal phi(const EllipticCurve& e, const CurvePoint& pt) { return maximal_ideal(e, pt); }

}  // namespace genus_forge
