#include "genus_forge/text.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace genus_forge {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

namespace {

std::pair<std::int64_t, int> parse_monomial(std::string_view term, std::string_view var,
                                            std::string_view whole) {
  const std::size_t at = term.find(var);
  if (at == std::string_view::npos) return {parse_int(term), 0};
  std::string_view coef = term.substr(0, at);
  if (!coef.empty() && coef.back() == '*') coef.remove_suffix(1);
  std::int64_t c = 1;
  if (coef == "-") {
    c = -1;
  } else if (!coef.empty() && coef != "+") {
    c = parse_int(coef);
  }
  std::string_view rest = term.substr(at + var.size());
  int e = 1;
  if (!rest.empty()) {
    if (rest.front() != '^') throw std::invalid_argument("cannot parse term in '" + std::string(whole) + "'");
    rest.remove_prefix(1);
    if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    e = static_cast<int>(parse_int(rest));
  }
  return {c, e};
}

void append_term(std::ostringstream& os, bool& first, std::int64_t coef, const std::string& mono) {
  if (coef == 0) return;
  if (coef < 0) {
    os << "-";
    coef = -coef;
  } else if (!first) {
    os << "+";
  }
  if (mono.empty()) {
    os << coef;
  } else {
    if (coef != 1) os << coef << "*";
    os << mono;
  }
  first = false;
}

}  // namespace

std::string format_terms(const std::vector<std::pair<std::int64_t, std::string>>& terms) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) append_term(os, first, c, mono);
  if (first) os << "0";
  return os.str();
}

std::vector<std::string> split_signed_terms(std::string_view s) {
  std::string compact;
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw std::invalid_argument("empty expression");
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= compact.size(); ++i) {
    if (i < compact.size()) {
      if (compact[i] == '(') ++depth;
      if (compact[i] == ')') --depth;
    }
    if (i == 0) continue;
    const bool boundary = i == compact.size() ||
                          (depth == 0 && (compact[i] == '+' || compact[i] == '-') && compact[i - 1] != '^' &&
                           compact[i - 1] != '(' && compact[i - 1] != '*');
    if (!boundary) continue;
    std::string term = compact.substr(start, i - start);
    if (term == "+" || term == "-") throw std::invalid_argument("dangling sign in '" + std::string(s) + "'");
    out.push_back(std::move(term));
    start = i;
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in '" + std::string(s) + "'");
  return out;
}

std::vector<std::pair<std::int64_t, int>> parse_terms(std::string_view s, std::string_view var) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (const auto& t : split_signed_terms(s)) {
    std::string_view term = t;
    std::int64_t sign = 1;
    if (term.front() == '+' || term.front() == '-') {
      sign = term.front() == '-' ? -1 : 1;
      term.remove_prefix(1);
    }
    auto [c, e] = parse_monomial(term, var, s);
    out.emplace_back(sign * c, e);
  }
  return out;
}

}  // namespace genus_forge
