#include "genus_forge/json_io.hpp"

#include <stdexcept>
#include <string>

#include "genus_forge/text.hpp"

namespace genus_forge::json {

namespace {

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string("json: expected integer for ") + what);
  return j.get<std::int64_t>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("json: missing field '") + key + "'");
  return j.at(key);
}

template <typename R, typename Decode>
std::vector<std::vector<R>> decode_rows(const Json& j, Decode decode) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("json: gram must be a nonempty array of rows");
  std::vector<std::vector<R>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw std::invalid_argument("json: gram must be square");
    std::vector<R> r;
    for (const auto& x : row) r.push_back(decode(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

template <typename R>
Json encode_rows(const Matrix<R>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(encode(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json encode(const Poly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(c.value());
  return out;
}

Json encode(const RatFun& f) { return Json{{"num", encode(f.num())}, {"den", encode(f.den())}}; }

Json encode(const KElem& u) { return Json{{"a", encode(u.a())}, {"b", encode(u.b())}, {"d", encode(u.d())}}; }

Json encode(const LaurentElem& u) {
  Json terms = Json::object();
  for (const auto& [e, c] : u.terms()) terms[std::to_string(e)] = c.value();
  return Json{{"terms", std::move(terms)}};
}

Json encode(const CurvePoint& pt) {
  if (pt.is_infinity()) return "inf";
  return Json::array({pt.x().value(), pt.y().value()});
}

Json encode(const EllipticCurve& e) { return Json{{"p", e.p()}, {"a", e.a().value()}, {"b", e.b().value()}}; }

Json encode(const FracIdeal& ideal) { return Json{{"g1", encode(ideal.g1)}, {"g2", encode(ideal.g2)}}; }

Json encode(const GramMatrix<KElem>& m) { return encode_rows(m.matrix()); }
Json encode(const GramMatrix<LaurentElem>& m) { return encode_rows(m.matrix()); }
Json encode(const Matrix<KElem>& m) { return encode_rows(m); }

Json encode(const BrauerVector& v) {
  Json out = Json::object();
  for (const auto& [place, x] : v.entries()) out[place.name()] = x;
  return out;
}

Poly decode_poly(const Json& j, std::uint32_t p) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), p, "x");
  if (!j.is_array()) throw std::invalid_argument("json: polynomial must be a coefficient list");
  std::vector<std::int64_t> c;
  for (const auto& x : j) c.push_back(as_int(x, "coefficient"));
  return Poly(p, c);
}

RatFun decode_ratfun(const Json& j, std::uint32_t p) {
  Poly den = decode_poly(field(j, "den"), p);
  if (den.is_zero()) throw std::domain_error("json: zero denominator");
  return RatFun(decode_poly(field(j, "num"), p), std::move(den));
}

KElem decode_kelem(const Json& j, const EllipticCurve& e) {
  if (j.is_string()) return parse_kelem(j.get<std::string>(), e);
  Poly d = j.contains("d") ? decode_poly(j.at("d"), e.p()) : Poly::constant(e.p(), 1);
  if (d.is_zero()) throw std::domain_error("json: zero denominator");
  return KElem(e, decode_poly(field(j, "a"), e.p()), decode_poly(field(j, "b"), e.p()), std::move(d));
}

LaurentElem decode_laurent(const Json& j, std::uint32_t p) {
  if (j.is_string()) return parse_laurent(j.get<std::string>(), p);
  const Json& terms = field(j, "terms");
  if (!terms.is_object()) throw std::invalid_argument("json: terms must be an object");
  LaurentElem u{Fp(0, p)};
  for (const auto& [key, value] : terms.items()) {
    u += LaurentElem::monomial(Fp(as_int(value, "coefficient"), p), static_cast<int>(parse_int(key)));
  }
  return u;
}

CurvePoint decode_point(const Json& j, const EllipticCurve& e) {
  if (j.is_string() && j.get<std::string>() == "inf") return CurvePoint::infinity();
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("json: point must be [x, y] or \"inf\"");
  return e.point(as_int(j[0], "x"), as_int(j[1], "y"));
}

EllipticCurve decode_curve(const Json& j) {
  const std::int64_t p = as_int(field(j, "p"), "p");
  if (p < 3 || p > static_cast<std::int64_t>(kDefaultMaxPrime)) throw std::invalid_argument("json: p out of range");
  return EllipticCurve(static_cast<std::uint32_t>(p), as_int(field(j, "a"), "a"), as_int(field(j, "b"), "b"));
}

FracIdeal decode_ideal(const Json& j, const EllipticCurve& e) {
  return FracIdeal(decode_kelem(field(j, "g1"), e), decode_kelem(field(j, "g2"), e));
}

GramMatrix<KElem> decode_gram(const Json& j, const EllipticCurve& e) {
  return GramMatrix<KElem>(decode_rows<KElem>(j, [&](const Json& x) { return decode_kelem(x, e); }));
}

GramMatrix<LaurentElem> decode_laurent_gram(const Json& j, std::uint32_t p) {
  return GramMatrix<LaurentElem>(decode_rows<LaurentElem>(j, [&](const Json& x) { return decode_laurent(x, p); }));
}

}  // namespace genus_forge::json
