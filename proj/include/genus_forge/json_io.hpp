#pragma once

#include <json.hpp>

#include "genus_forge/brauer.hpp"
#include "genus_forge/coord_ring.hpp"
#include "genus_forge/elliptic.hpp"
#include "genus_forge/ideals.hpp"
#include "genus_forge/laurent.hpp"
#include "genus_forge/qlattice.hpp"

namespace genus_forge::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "genus-forge/1";

// Encoders. Field elements are canonical residues in [0, p); polynomials are
// ascending coefficient lists.
Json encode(const Poly& f);
Json encode(const RatFun& f);
Json encode(const KElem& u);
Json encode(const LaurentElem& u);
Json encode(const CurvePoint& pt);
Json encode(const EllipticCurve& e);
Json encode(const FracIdeal& ideal);
Json encode(const GramMatrix<KElem>& m);
Json encode(const GramMatrix<LaurentElem>& m);
Json encode(const Matrix<KElem>& m);
Json encode(const BrauerVector& v);

// Decoders; malformed input throws std::invalid_argument, mathematically
// invalid input (singular curve, off-curve point, asymmetric gram) throws
// std::domain_error.
Poly decode_poly(const Json& j, std::uint32_t p);
RatFun decode_ratfun(const Json& j, std::uint32_t p);
KElem decode_kelem(const Json& j, const EllipticCurve& e);
LaurentElem decode_laurent(const Json& j, std::uint32_t p);
CurvePoint decode_point(const Json& j, const EllipticCurve& e);
EllipticCurve decode_curve(const Json& j);
FracIdeal decode_ideal(const Json& j, const EllipticCurve& e);
GramMatrix<KElem> decode_gram(const Json& j, const EllipticCurve& e);
GramMatrix<LaurentElem> decode_laurent_gram(const Json& j, std::uint32_t p);

}  // namespace genus_forge::json
