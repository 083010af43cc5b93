#include "genus_forge/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "genus_forge/brauer.hpp"
#include "genus_forge/json_io.hpp"
#include "genus_forge/pic.hpp"
#include "genus_forge/text.hpp"

namespace genus_forge {

namespace {

using json::Json;

struct Output {
  Json doc;
  std::string text;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& part : split(text, ',')) {
    auto t = trim(part);
    if (t.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    out.emplace_back(t);
  }
  return out;
}

std::string points_text(const std::vector<CurvePoint>& pts) {
  std::vector<std::string> s;
  for (const auto& pt : pts) s.push_back(pt.to_string());
  return join(s, " ");
}

Json points_json(const std::vector<CurvePoint>& pts) {
  Json out = Json::array();
  for (const auto& pt : pts) out.push_back(json::encode(pt));
  return out;
}

Json structure_json(const GroupStructure& g) { return Json::array({g.n1, g.n2}); }

template <typename R>
std::string matrix_text(const Matrix<R>& m, const std::string& indent) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_string(m(i, j)));
    out += indent + "[" + join(row, ", ") + "]\n";
  }
  return out;
}

template <typename R>
std::string vector_text(const std::vector<R>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(to_string(x));
  return "(" + join(s, ", ") + ")";
}

CurvePoint parse_point(const std::string& text, const EllipticCurve& e) {
  if (trim(text) == "inf") return CurvePoint::infinity();
  auto parts = split_list(text);
  if (parts.size() != 2) throw std::invalid_argument("point must be 'x,y' or 'inf'");
  return e.point(parse_int(parts[0]), parse_int(parts[1]));
}

std::vector<Place> parse_places(const std::string& text, std::uint32_t p) {
  std::vector<Place> out;
  for (const auto& s : split_list(text)) {
    Place v = parse_place(s, p);
    for (const auto& w : out)
      if (w == v) throw std::invalid_argument("place '" + s + "' listed twice");
    out.push_back(std::move(v));
  }
  return out;
}

Json places_json(const std::vector<Place>& s) {
  Json out = Json::array();
  for (const auto& v : s) out.push_back(v.name());
  return out;
}

SignConvention parse_sign(const std::string& s) {
  if (s == "paper") return SignConvention::paper;
  if (s == "raw") return SignConvention::raw;
  throw std::invalid_argument("--sign must be 'paper' or 'raw'");
}

// ---------------------------------------------------------------- commands

Output cmd_points(const EllipticCurve& e) {
  const auto pts = enumerate_points(e);
  const auto g = group_structure(e);
  const auto cosets = cosets_mod_2(e);
  Output o;
  o.doc = Json{{"schema", json::kSchema},     {"command", "points"},         {"curve", json::encode(e)},
               {"points", points_json(pts)}, {"structure", structure_json(g)}, {"cosets", points_json(cosets)}};
  std::ostringstream t;
  t << "curve: " << e.to_string() << "\n"
    << "points (" << pts.size() << "): " << points_text(pts) << "\n"
    << "structure: " << g.to_string() << "\n"
    << "cosets mod 2 (" << cosets.size() << "): " << points_text(cosets) << "\n";
  o.text = t.str();
  return o;
}

Output cmd_pic(const PicGroup& g) {
  Output o;
  o.doc = Json{{"schema", json::kSchema}, {"command", "pic"}};
  std::ostringstream t;
  if (g.base == PicBase::elliptic) {
    o.doc["base"] = "elliptic";
    o.doc["curve"] = json::encode(*g.curve);
    t << "base: " << g.curve->to_string() << ", S = {inf}\n";
  } else {
    o.doc["base"] = "genus0";
    o.doc["places"] = places_json(g.places);
    std::vector<std::string> names;
    for (const auto& v : g.places) names.push_back(v.name());
    t << "base: P^1 over F_" << g.places.front().modulus() << ", S = {" << join(names, ", ") << "}\n";
  }
  o.doc["order"] = g.order();
  o.doc["structure"] = structure_json(g.structure);
  o.doc["mod2_order"] = pic_mod2_order(g);
  t << "Pic(O_S) = " << (g.order() == 1 ? std::string("1") : g.structure.to_string()) << ", order " << g.order()
    << "\n|Pic/2| = " << pic_mod2_order(g) << "\n";
  if (g.base == PicBase::elliptic) {
    o.doc["cosets"] = points_json(g.cosets);
    t << "coset representatives: " << points_text(g.cosets) << "\n";
  }
  o.text = t.str();
  return o;
}

Output cmd_ideal(const EllipticCurve& e, const CurvePoint& pt, const std::string& op, int bound, SignConvention sign) {
  Output o;
  o.doc = Json{{"schema", json::kSchema}, {"command", "ideal"}, {"curve", json::encode(e)},
               {"point", json::encode(pt)}, {"op", op}};
  std::ostringstream t;
  t << "P = " << pt.to_string() << " on " << e.to_string() << "\n";
  if (op == "maximal") {
    auto m = maximal_ideal(e, pt);
    o.doc["ideal"] = json::encode(m);
    t << "m_P = " << to_string(m) << "\n";
  } else if (op == "inverse") {
    auto m = inverse_ideal(e, pt);
    o.doc["ideal"] = json::encode(m);
    t << "m_P^-1 = " << to_string(m) << "\n";
  } else if (op == "bezout") {
    auto q = bezout_quadruple(e, pt);
    o.doc["a1"] = json::encode(q.a1);
    o.doc["a2"] = json::encode(q.a2);
    o.doc["b1"] = json::encode(q.b1);
    o.doc["b2"] = json::encode(q.b2);
    auto m = transition_matrix_inverse(e, pt, sign);
    o.doc["transition_inverse"] = json::encode(m);
    t << "a1 = " << to_string(q.a1) << "\na2 = " << to_string(q.a2) << "\nb1 = " << to_string(q.b1)
      << "\nb2 = " << to_string(q.b2) << "\nA^-1 =\n"
      << matrix_text(m, "  ");
  } else if (op == "principal") {
    auto g = is_principal(maximal_ideal(e, pt), bound);
    o.doc["bound"] = bound;
    o.doc["principal"] = g.has_value();
    o.doc["generator"] = g ? json::encode(*g) : Json(nullptr);
    t << "m_P = " << to_string(maximal_ideal(e, pt)) << ": "
      << (g ? "principal, generated by " + to_string(*g) : "no generator up to degree " + std::to_string(bound))
      << "\n";
  } else {
    throw std::invalid_argument("--op must be one of maximal, inverse, bezout, principal");
  }
  o.text = t.str();
  return o;
}

std::optional<GramMatrix<KElem>> parse_v0(const std::string& text, const EllipticCurve& e) {
  if (text == "none") return std::nullopt;
  if (text.rfind("diag:", 0) != 0) throw std::invalid_argument("--v0 must be 'diag:e1,e2,...' or 'none'");
  std::vector<KElem> d;
  for (const auto& s : split_list(text.substr(5))) d.push_back(parse_kelem(s, e));
  return GramMatrix<KElem>::diagonal(d);
}

Output cmd_classify(const EllipticCurve& e, const std::string& v0_spec, const std::string& mode_name,
                    SignConvention sign) {
  Algorithm1Mode mode;
  if (mode_name == "mod2") {
    mode = Algorithm1Mode::mod2;
  } else if (mode_name == "full") {
    mode = Algorithm1Mode::full;
  } else {
    throw std::invalid_argument("--mode must be 'mod2' or 'full'");
  }
  SplitForm f0{parse_v0(v0_spec, e)};
  const auto reps = algorithm1(e, f0, mode, sign);
  Output o;
  o.doc = Json{{"schema", json::kSchema}, {"command", "classify"}, {"curve", json::encode(e)},
               {"mode", mode_name},       {"v0", f0.v0 ? json::encode(*f0.v0) : Json(nullptr)}};
  Json classes = Json::array();
  std::ostringstream t;
  t << "curve: " << e.to_string() << "\n"
    << "F0 = H (+) " << (f0.v0 ? "V0" : "0") << ", mode " << mode_name << ": " << reps.size() << " classes\n";
  for (const auto& r : reps) {
    const bool regular = is_regular(r.gram);
    classes.push_back(Json{{"point", json::encode(r.point)},
                           {"transform", json::encode(r.transform)},
                           {"gram", json::encode(r.gram)},
                           {"regular", regular}});
    t << "P = " << r.point.to_string() << "\n  A^-1 =\n"
      << matrix_text(r.transform, "    ") << "  F_P =\n"
      << matrix_text(r.gram.matrix(), "    ");
  }
  o.doc["count"] = reps.size();
  o.doc["classes"] = std::move(classes);
  o.text = t.str();
  return o;
}

template <typename R>
Output isotropy_output(const GramMatrix<R>& q, int bound, Json ring) {
  auto w = isotropy_search(q, bound);
  Output o;
  o.doc = Json{{"schema", json::kSchema}, {"command", "isotropy"}, {"ring", std::move(ring)},
               {"form", json::encode(q)},  {"bound", bound},         {"isotropic", w.has_value()}};
  Json witness = nullptr;
  if (w) {
    witness = Json::array();
    for (const auto& x : *w) witness.push_back(json::encode(x));
  }
  o.doc["witness"] = std::move(witness);
  std::vector<std::string> diag;
  for (std::size_t i = 0; i < q.rank(); ++i) diag.push_back(to_string(q(i, i)));
  std::string name = q.is_diagonal() ? "<" + join(diag, ", ") + ">" : "form";
  o.text = name + ": " +
           (w ? "isotropic, q" + vector_text(*w) + " = 0"
              : "no isotropic vector up to degree " + std::to_string(bound)) +
           "\n";
  return o;
}

Output cmd_isotropy_laurent(std::uint32_t p, const std::string& form, int bound) {
  std::vector<LaurentElem> d;
  for (const auto& s : split_list(form)) d.push_back(parse_laurent(s, p));
  auto q = GramMatrix<LaurentElem>::diagonal(d);
  if (!is_regular(q)) throw std::domain_error("form is not regular over F_p[t, 1/t]");
  return isotropy_output(q, bound, Json{{"type", "laurent"}, {"p", p}});
}

Output cmd_isotropy_elliptic(const EllipticCurve& e, const std::string& form, int bound) {
  std::vector<KElem> d;
  for (const auto& s : split_list(form)) d.push_back(parse_kelem(s, e));
  auto q = GramMatrix<KElem>::diagonal(d);
  if (!is_regular(q)) throw std::domain_error("form is not regular over O_S");
  return isotropy_output(q, bound, Json{{"type", "elliptic"}, {"curve", json::encode(e)}});
}

std::vector<RatFun> parse_ratfun_form(const std::string& form, std::uint32_t p) {
  std::vector<RatFun> d;
  for (const auto& s : split_list(form)) d.push_back(to_ratfun(parse_laurent(s, p)));
  return d;
}

Output cmd_witt(std::uint32_t p, const std::string& form, const std::optional<std::string>& places_text) {
  const auto diag = parse_ratfun_form(form, p);
  const QuaternionSymbol s = witt_invariant(diag);
  const BrauerVector cls = brauer_class(s);
  std::vector<Place> places = places_text ? parse_places(*places_text, p) : cls.support();
  BrauerVector shown;
  for (const auto& v : places) shown.set(v, residue(s, v));
  for (const auto& v : cls.support()) shown.set(v, 1);
  Output o;
  o.doc = Json{{"schema", json::kSchema},
               {"command", "witt"},
               {"p", p},
               {"form", split_list(form)},
               {"symbol", Json::array({to_string(s.a), to_string(s.b)})},
               {"residues", json::encode(shown)}};
  if (places_text) {
    o.doc["places"] = places_json(places);
    o.doc["in_2Br_OS"] = cls.supported_in(places);
  }
  o.doc["trivial"] = cls.is_zero();
  std::ostringstream t;
  t << "form <" << join(split_list(form), ", ") << ">, Witt invariant " << to_string(s) << "\n"
    << "residues: " << to_string(shown) << "\n";
  if (places_text) t << "in 2Br(O_S): " << (cls.supported_in(places) ? "yes" : "no") << "\n";
  t << "class: " << (cls.is_zero() ? "trivial" : "nontrivial") << "\n";
  o.text = t.str();
  return o;
}

Output genera_output(const PicGroup& g, std::size_t num_places, int rank, bool isotropic, Json base) {
  const GenusReport r = genus_report(num_places, rank, g.order(), pic_mod2_order(g), isotropic);
  Output o;
  o.doc = Json{{"schema", json::kSchema},
               {"command", "genera"},
               {"base", std::move(base)},
               {"rank", rank},
               {"isotropic", isotropic},
               {"pic_order", g.order()},
               {"pic_mod2_order", pic_mod2_order(g)},
               {"genera", r.genera},
               {"classes_per_genus", r.classes_per_genus},
               {"exact", r.exact},
               {"total_classes", r.exact ? Json(r.total_classes) : Json(nullptr)},
               {"hasse_principle", r.hasse_principle}};
  std::ostringstream t;
  t << r.genera << (r.genera == 1 ? " genus" : " genera");
  if (r.exact) {
    t << ", each of size " << r.classes_per_genus << ", total classes " << r.total_classes << "\n";
  } else {
    t << ", each of size at least " << r.classes_per_genus << "\n";
  }
  t << "Hasse principle " << (r.hasse_principle ? "holds" : "fails") << " (|Pic| = " << g.order() << ")\n";
  o.text = t.str();
  return o;
}

Output cmd_genera_places(std::uint32_t p, const std::string& places_text, int rank, bool isotropic) {
  const auto places = parse_places(places_text, p);
  Output o = genera_output(pic_group(places), places.size(), rank, isotropic,
                           Json{{"type", "genus0"}, {"p", p}, {"places", places_json(places)}});
  Json br = Json::array();
  for (const auto& v : enumerate_2Br(places)) br.push_back(json::encode(v));
  o.doc["brauer_classes"] = std::move(br);
  return o;
}

Output cmd_genera_elliptic(const EllipticCurve& e, int rank, bool isotropic) {
  return genera_output(pic_group(e), 1, rank, isotropic, Json{{"type", "elliptic"}, {"curve", json::encode(e)}});
}

Output cmd_preset(const std::string& name) {
  Output o;
  if (name == "paper-5.1") {
    const EllipticCurve e(5, 1, 0);
    Output pts = cmd_points(e);
    Output pic = cmd_pic(pic_group(e));
    Output cls = cmd_classify(e, "diag:1", "mod2", SignConvention::paper);
    Output gen = cmd_genera_elliptic(e, 3, true);
    o.doc = Json{{"schema", json::kSchema}, {"command", "preset"}, {"preset", name},
                 {"points", pts.doc},       {"pic", pic.doc},      {"classify", cls.doc},
                 {"genera", gen.doc}};
    o.text = "== points\n" + pts.text + "== pic\n" + pic.text + "== classify\n" + cls.text + "== genera\n" + gen.text;
    return o;
  }
  if (name == "paper-5.2") {
    const std::uint32_t p = 3;
    Output iso1 = cmd_isotropy_laurent(p, "1,-1,-t", 3);
    Output iso2 = cmd_isotropy_laurent(p, "1,1,t", 3);
    Output w1 = cmd_witt(p, "1,-1,-t", std::string("t,inf"));
    Output w2 = cmd_witt(p, "1,1,t", std::string("t,inf"));
    Output gen = cmd_genera_places(p, "t,inf", 3, iso1.doc["isotropic"].get<bool>());
    o.doc = Json{{"schema", json::kSchema},
                 {"command", "preset"},
                 {"preset", name},
                 {"isotropy", Json::array({iso1.doc, iso2.doc})},
                 {"witt", Json::array({w1.doc, w2.doc})},
                 {"genera", gen.doc}};
    o.text = "== isotropy\n" + iso1.text + iso2.text + "== witt\n" + w1.text + w2.text + "== genera\n" + gen.text;
    return o;
  }
  throw std::invalid_argument("unknown preset '" + name + "' (expected paper-5.1 or paper-5.2)");
}

// ---------------------------------------------------------------- parsing

struct CurveFlags {
  std::uint32_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  CLI::Option* a_opt = nullptr;
  CLI::Option* b_opt = nullptr;

  void add(CLI::App* sub, bool curve_required) {
    sub->add_option("--p", p, "odd prime")->required();
    a_opt = sub->add_option("--a", a, "curve coefficient a in y^2 = x^3 + a x + b");
    b_opt = sub->add_option("--b", b, "curve coefficient b");
    if (curve_required) {
      a_opt->required();
      b_opt->required();
    }
  }
  bool has_curve() const { return a_opt->count() > 0 || b_opt->count() > 0; }
  void check_prime() const { check_odd_prime(p); }
  EllipticCurve curve() const {
    check_prime();
    if (a_opt->count() == 0 || b_opt->count() == 0) throw std::invalid_argument("--a and --b are both required");
    return EllipticCurve(p, a, b);
  }
};

struct JsonFlag {
  std::string path;
  CLI::Option* opt = nullptr;
  void add(CLI::App* sub) {
    opt = sub->add_option("--json", path, "emit JSON (to stdout, or to the given file)")->expected(0, 1);
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"genus-forge: quadratic lattices over Hasse domains of function fields", "genus-forge"};
  app.require_subcommand(1, 1);

  std::vector<JsonFlag*> json_flags;

  auto* points = app.add_subcommand("points", "rational points, group structure and C/2C cosets");
  CurveFlags points_curve;
  points_curve.add(points, true);
  JsonFlag points_json_flag;
  points_json_flag.add(points);

  auto* pic = app.add_subcommand("pic", "Picard group of O_S");
  CurveFlags pic_curve;
  pic_curve.add(pic, false);
  std::string pic_ring = "elliptic";
  std::string pic_places;
  pic->add_option("--ring", pic_ring, "elliptic | laurent");
  auto* pic_places_opt = pic->add_option("--places", pic_places, "removed places of P^1, e.g. t,inf");
  JsonFlag pic_json_flag;
  pic_json_flag.add(pic);

  auto* ideal = app.add_subcommand("ideal", "maximal ideals, inverses, Bezout quadruples, principality");
  CurveFlags ideal_curve;
  ideal_curve.add(ideal, true);
  std::string ideal_point;
  std::string ideal_op = "bezout";
  std::string ideal_sign = "paper";
  int ideal_bound = 6;
  ideal->add_option("--point", ideal_point, "x,y or inf")->required();
  ideal->add_option("--op", ideal_op, "maximal | inverse | bezout | principal");
  ideal->add_option("--bound", ideal_bound, "degree bound for --op principal");
  ideal->add_option("--sign", ideal_sign, "paper | raw");
  JsonFlag ideal_json_flag;
  ideal_json_flag.add(ideal);

  auto* classify = app.add_subcommand("classify", "class representatives of H (+) V0 (Algorithm 1)");
  CurveFlags classify_curve;
  classify_curve.add(classify, true);
  std::string classify_v0 = "diag:1";
  std::string classify_mode = "mod2";
  std::string classify_sign = "paper";
  classify->add_option("--v0", classify_v0, "diag:e1,e2,... or none");
  classify->add_option("--mode", classify_mode, "mod2 | full");
  classify->add_option("--sign", classify_sign, "paper | raw");
  JsonFlag classify_json_flag;
  classify_json_flag.add(classify);

  auto* isotropy = app.add_subcommand("isotropy", "bounded search for an isotropic vector");
  CurveFlags iso_curve;
  iso_curve.add(isotropy, false);
  std::string iso_ring = "laurent";
  std::string iso_form;
  int iso_bound = 3;
  isotropy->add_option("--ring", iso_ring, "laurent | elliptic");
  isotropy->add_option("--form", iso_form, "diagonal entries, e.g. 1,-1,-t")->required();
  isotropy->add_option("--bound", iso_bound, "degree bound");
  JsonFlag iso_json_flag;
  iso_json_flag.add(isotropy);

  auto* witt = app.add_subcommand("witt", "Witt invariant and local residues over F_p(t)");
  std::uint32_t witt_p = 0;
  std::string witt_form;
  std::string witt_places;
  witt->add_option("--p", witt_p, "odd prime")->required();
  witt->add_option("--form", witt_form, "diagonal entries, e.g. 1,1,t")->required();
  auto* witt_places_opt = witt->add_option("--places", witt_places, "the set S, e.g. t,inf");
  JsonFlag witt_json_flag;
  witt_json_flag.add(witt);

  auto* genera = app.add_subcommand("genera", "genus and class counts");
  CurveFlags genera_curve;
  genera_curve.add(genera, false);
  std::string genera_places;
  int genera_rank = 3;
  bool genera_isotropic = false;
  auto* genera_places_opt = genera->add_option("--places", genera_places, "the set S, e.g. t,inf");
  genera->add_option("--rank", genera_rank, "rank of the form");
  genera->add_flag("--isotropic", genera_isotropic, "the form is isotropic");
  JsonFlag genera_json_flag;
  genera_json_flag.add(genera);

  auto* preset = app.add_subcommand("preset", "worked examples: paper-5.1, paper-5.2");
  std::string preset_name;
  preset->add_option("name", preset_name, "paper-5.1 | paper-5.2")->required();
  JsonFlag preset_json_flag;
  preset_json_flag.add(preset);

  std::vector<const char*> argv{"genus-forge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Output o;
    const JsonFlag* jf = nullptr;
    if (points->parsed()) {
      o = cmd_points(points_curve.curve());
      jf = &points_json_flag;
    } else if (pic->parsed()) {
      pic_curve.check_prime();
      if (pic_places_opt->count() > 0) {
        o = cmd_pic(pic_group(parse_places(pic_places, pic_curve.p)));
      } else if (pic_ring == "laurent") {
        o = cmd_pic(pic_group_laurent(pic_curve.p));
      } else if (pic_ring == "elliptic") {
        o = cmd_pic(pic_group(pic_curve.curve()));
      } else {
        throw std::invalid_argument("--ring must be 'elliptic' or 'laurent'");
      }
      jf = &pic_json_flag;
    } else if (ideal->parsed()) {
      const EllipticCurve e = ideal_curve.curve();
      o = cmd_ideal(e, parse_point(ideal_point, e), ideal_op, ideal_bound, parse_sign(ideal_sign));
      jf = &ideal_json_flag;
    } else if (classify->parsed()) {
      o = cmd_classify(classify_curve.curve(), classify_v0, classify_mode, parse_sign(classify_sign));
      jf = &classify_json_flag;
    } else if (isotropy->parsed()) {
      if (iso_bound < 0) throw std::invalid_argument("--bound must be nonnegative");
      if (iso_ring == "laurent") {
        iso_curve.check_prime();
        o = cmd_isotropy_laurent(iso_curve.p, iso_form, iso_bound);
      } else if (iso_ring == "elliptic") {
        o = cmd_isotropy_elliptic(iso_curve.curve(), iso_form, iso_bound);
      } else {
        throw std::invalid_argument("--ring must be 'laurent' or 'elliptic'");
      }
      jf = &iso_json_flag;
    } else if (witt->parsed()) {
      check_odd_prime(witt_p);
      o = cmd_witt(witt_p, witt_form,
                   witt_places_opt->count() > 0 ? std::optional<std::string>(witt_places) : std::nullopt);
      jf = &witt_json_flag;
    } else if (genera->parsed()) {
      genera_curve.check_prime();
      if (genera_places_opt->count() > 0) {
        if (genera_curve.has_curve()) throw std::invalid_argument("give either --places or --a/--b, not both");
        o = cmd_genera_places(genera_curve.p, genera_places, genera_rank, genera_isotropic);
      } else {
        o = cmd_genera_elliptic(genera_curve.curve(), genera_rank, genera_isotropic);
      }
      jf = &genera_json_flag;
    } else if (preset->parsed()) {
      o = cmd_preset(preset_name);
      jf = &preset_json_flag;
    }

    if (jf != nullptr && jf->opt->count() > 0) {
      if (jf->path.empty() || jf->path == "-") {
        out << o.doc.dump(2) << "\n";
      } else {
        std::ofstream file(jf->path);
        if (!file) throw std::invalid_argument("cannot write " + jf->path);
        file << o.doc.dump(2) << "\n";
        out << o.text;
      }
    } else {
      out << o.text;
    }
    return kExitOk;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace genus_forge
