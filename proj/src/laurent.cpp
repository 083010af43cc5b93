#include "genus_forge/laurent.hpp"

namespace genus_forge {

namespace {

std::string monomial(std::string_view var, int k) {
  if (k == 0) return "";
  std::string s(var);
  if (k != 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_string(const LaurentElem& u, std::string_view var) {
  std::vector<std::pair<std::int64_t, std::string>> terms;
  const auto t = u.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) terms.emplace_back(it->second.signed_value(), monomial(var, it->first));
  return format_terms(terms);
}

std::string to_string(const Laurent<ExtFieldElem>& u, std::string_view var) {
  std::string out;
  const auto t = u.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    std::string c = to_string(it->second, "i");
    std::string m = monomial(var, it->first);
    const bool compound = c.find_first_of("+-", 1) != std::string::npos;
    std::string term;
    if (m.empty()) {
      term = compound ? "(" + c + ")" : c;
    } else if (c == "1") {
      term = m;
    } else if (c == "-1") {
      term = "-" + m;
    } else {
      term = (compound ? "(" + c + ")" : c) + "*" + m;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out.empty() ? "0" : out;
}

LaurentElem parse_laurent(std::string_view text, std::uint32_t p, std::string_view var) {
  LaurentElem out(Fp(0, p));
  for (const auto& [c, e] : parse_terms(text, var)) out += LaurentElem::monomial(Fp(c, p), e);
  return out;
}

}  // namespace genus_forge
