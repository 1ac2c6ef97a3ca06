#include "ridgecalc/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) fail(std::string("expected an object with field \"") + name + "\"");
  auto it = j.find(name);
  if (it == j.end()) fail(std::string("missing field \"") + name + "\"");
  return *it;
}

const Json& array_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_array()) fail(std::string("field \"") + name + "\" must be an array");
  return v;
}

std::vector<long> radicals_from_json(const Json& j) {
  if (!j.is_array()) fail("radicals must be an array of integers");
  std::vector<long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) fail("radicals must be an array of integers");
    out.push_back(v.get<long>());
  }
  return out;
}

Json radicals_to_json(const BasisPtr& basis) { return Json(basis->radicands()); }

BasisKey key_from_string(const BasisPtr& basis, const std::string& text) {
  Integer product;
  if (text.empty() || product.set_str(text, 10) != 0 || product < 1) fail("bad basis key \"" + text + "\"");
  auto key = basis->key_for_product(product);
  if (!key) fail("basis key " + text + " is not a radicand product of the basis");
  return *key;
}

BasisKey key_from_json(const BasisPtr& basis, const Json& j) {
  if (j.is_number_integer()) return key_from_string(basis, std::to_string(j.get<long long>()));
  if (j.is_string()) return key_from_string(basis, j.get<std::string>());
  fail("basis key must be an integer or string");
}

std::string key_to_string(const BasisPtr& basis, BasisKey key) { return basis->product(key).get_str(); }

std::string exponent_to_string(const Exponent& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s;
}

Exponent exponent_from_string(const std::string& text, std::size_t nvars) {
  Exponent e;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      fail("bad exponent key \"" + text + "\"");
    }
    e.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (e.size() != nvars) fail("exponent key \"" + text + "\" does not have " + std::to_string(nvars) + " entries");
  return e;
}

}  // namespace

BasisPtr basis_from_json(const Json& radicals) { return RadicalBasis::make(radicals_from_json(radicals)); }

Json to_json(const KNumber& a) {
  Json coords = Json::object();
  for (const auto& [key, c] : a.coords()) coords[key_to_string(a.basis(), key)] = format_rational(c);
  return {{"basis", radicals_to_json(a.basis())}, {"coords", coords}};
}

KNumber knumber_from_json(const Json& j, const BasisPtr& basis) {
  if (j.is_number_integer()) return KNumber(basis, Rational(j.get<long>()));
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (text.find("sqrt") == std::string::npos) return KNumber(basis, parse_rational(text));
    return parse_knumber(basis, text);
  }
  if (!j.is_object()) fail("expected a number");
  if (auto it = j.find("basis"); it != j.end() && radicals_from_json(*it) != basis->radicands()) {
    fail("number basis " + it->dump() + " does not match the problem basis");
  }
  const Json& coords = field(j, "coords");
  if (!coords.is_object()) fail("\"coords\" must be an object");
  KNumber out(basis);
  for (const auto& [k, v] : coords.items()) {
    if (!v.is_string() && !v.is_number_integer()) fail("coordinate must be a \"p/q\" string");
    const Rational q = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
    const BasisKey key = key_from_string(basis, k);
    out.set_coord(key, out.coord(key) + q);
  }
  return out;
}

Json to_json(const AdditiveMap& a) {
  Json images = Json::object();
  for (const auto& [key, v] : a.images()) images[key_to_string(a.basis(), key)] = to_json(v);
  return {{"images", images}};
}

AdditiveMap additive_map_from_json(const Json& j, const BasisPtr& basis) {
  const Json& images = field(j, "images");
  if (!images.is_object()) fail("\"images\" must be an object");
  AdditiveMap out(basis);
  for (const auto& [k, v] : images.items()) out.set_image(key_from_string(basis, k), knumber_from_json(v, basis));
  return out;
}

Json to_json(const MultiAdditiveSym& f) {
  Json entries = Json::array();
  for (const auto& [keys, v] : f.entries()) {
    Json idx = Json::array();
    for (BasisKey k : keys) idx.push_back(key_to_string(f.basis(), k));
    entries.push_back({{"idx", idx}, {"val", to_json(v)}});
  }
  return {{"order", f.order()}, {"entries", entries}};
}

MultiAdditiveSym multi_additive_from_json(const Json& j, const BasisPtr& basis) {
  const Json& order = field(j, "order");
  if (!order.is_number_unsigned()) fail("\"order\" must be a non-negative integer");
  MultiAdditiveSym out(basis, order.get<unsigned>());
  for (const auto& e : array_field(j, "entries")) {
    const Json& idx = array_field(e, "idx");
    if (idx.size() != out.order()) fail("entry index length does not match the order");
    KeyTuple keys;
    for (const auto& k : idx) keys.push_back(key_from_json(basis, k));
    // Entries may be listed under any permutation; duplicates accumulate.
    out.set_entry(keys, out.entry(keys) + knumber_from_json(field(e, "val"), basis));
  }
  return out;
}

Json to_json(const PolyFunc& f) {
  Json terms = Json::array();
  for (unsigned m = 1; m <= f.order(); ++m) {
    if (!f.term(m).is_zero()) terms.push_back(to_json(f.term(m)));
  }
  return {{"order", f.order()}, {"constant", to_json(f.constant_term())}, {"terms", terms}};
}

PolyFunc polyfunc_from_json(const Json& j, const BasisPtr& basis) {
  const Json& order = field(j, "order");
  if (!order.is_number_unsigned()) fail("\"order\" must be a non-negative integer");
  PolyFunc out(basis, order.get<unsigned>());
  if (j.contains("constant")) out.set_constant(knumber_from_json(j["constant"], basis));
  if (j.contains("terms")) {
    for (const auto& t : array_field(j, "terms")) {
      auto form = multi_additive_from_json(t, basis);
      if (form.order() > out.order()) fail("term order exceeds the declared order");
      out.add_term(form);
    }
  }
  return out;
}

Json to_json(const UniPoly& u) {
  Json out = Json::array();
  for (const auto& c : u.coeffs()) out.push_back(to_json(c));
  return out;
}

UniPoly unipoly_from_json(const Json& j, const BasisPtr& basis) {
  if (!j.is_array()) fail("polynomial must be an array of ascending coefficients");
  std::vector<KNumber> coeffs;
  for (const auto& c : j) coeffs.push_back(knumber_from_json(c, basis));
  return UniPoly(basis, std::move(coeffs));
}

Json to_json(const PolyMultivar& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[exponent_to_string(e)] = to_json(c);
  return {{"coeffs", coeffs}};
}

PolyMultivar polymultivar_from_json(const Json& j, const BasisPtr& basis, std::size_t nvars) {
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_object()) fail("\"coeffs\" must be an object");
  PolyMultivar out(basis, nvars);
  for (const auto& [k, v] : coeffs.items()) out.add_term(exponent_from_string(k, nvars), knumber_from_json(v, basis));
  return out;
}

Json to_json(const Certificate& c) {
  return {{"rational_points", c.rational_points},
          {"exact", c.exact},
          {"irrational_points", c.irrational_points},
          {"extends_beyond_Q", c.extends_beyond_Q}};
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  try {
    c.rational_points = field(j, "rational_points").get<std::size_t>();
    c.exact = field(j, "exact").get<bool>();
    c.extends_beyond_Q = field(j, "extends_beyond_Q").get<bool>();
    c.irrational_points = j.value("irrational_points", std::size_t{0});
  } catch (const Json::exception& e) {
    fail(std::string("bad certificate: ") + e.what());
  }
  return c;
}

Json problem_to_json(const RidgeSum& s) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    Json dir = Json::array();
    for (const auto& c : t.direction.components()) dir.push_back(to_json(c));
    terms.push_back({{"direction", dir},
                     {"smooth", to_json(t.profile.smooth())},
                     {"wild", t.profile.wild() ? to_json(*t.profile.wild()) : Json(nullptr)}});
  }
  return {{"n", s.n()}, {"radicals", radicals_to_json(s.basis())}, {"terms", terms}};
}

namespace {

BasisPtr basis_for(const Json& j, const std::optional<std::vector<long>>& radicals) {
  if (j.is_object() && j.contains("radicals")) return basis_from_json(j["radicals"]);
  return RadicalBasis::make(radicals.value_or(std::vector<long>{}));
}

}  // namespace

RidgeSum problem_from_json(const Json& j, const std::optional<std::vector<long>>& radicals) {
  const BasisPtr basis = basis_for(j, radicals);
  const Json& n_json = field(j, "n");
  if (!n_json.is_number_unsigned() || n_json.get<std::size_t>() == 0) fail("\"n\" must be a positive integer");
  const auto n = n_json.get<std::size_t>();
  std::vector<RidgeTerm> terms;
  for (const auto& t : array_field(j, "terms")) {
    KVector dir;
    for (const auto& c : array_field(t, "direction")) dir.push_back(knumber_from_json(c, basis));
    if (dir.size() != n) fail("direction length does not match n");
    UniPoly smooth = t.contains("smooth") ? unipoly_from_json(t["smooth"], basis) : UniPoly(basis);
    std::optional<PolyFunc> wild;
    if (t.contains("wild") && !t["wild"].is_null()) wild = polyfunc_from_json(t["wild"], basis);
    terms.push_back({Direction(std::move(dir)), RidgeProfile(std::move(smooth), std::move(wild))});
  }
  return RidgeSum(basis, n, std::move(terms));
}

Json solution_to_json(const SolutionFile& s) {
  Json g = Json::array();
  for (const auto& gi : s.g) g.push_back(to_json(gi));
  Json out = {{"g", g}, {"P", to_json(s.p)}, {"certificate", to_json(s.certificate)}};
  if (s.problem) out["problem"] = problem_to_json(*s.problem);
  return out;
}

SolutionFile solution_from_json(const Json& j, const std::optional<std::vector<long>>& radicals) {
  std::optional<RidgeSum> problem;
  BasisPtr basis;
  std::size_t n = 0;
  if (j.is_object() && j.contains("problem")) {
    problem = problem_from_json(j["problem"], radicals);
    basis = problem->basis();
    n = problem->n();
  } else {
    basis = basis_for(j, radicals);
    const Json& coeffs = field(field(j, "P"), "coeffs");
    if (!coeffs.empty()) n = static_cast<std::size_t>(std::count(coeffs.begin().key().begin(), coeffs.begin().key().end(), ',')) + 1;
    if (n == 0) fail("solution without a problem must state a nonempty P");
  }
  std::vector<UniPoly> g;
  for (const auto& gi : array_field(j, "g")) g.push_back(unipoly_from_json(gi, basis));
  return {std::move(g), polymultivar_from_json(field(j, "P"), basis, n), certificate_from_json(field(j, "certificate")),
          std::move(problem)};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    fail(path + ": " + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << dump_json(j);
  if (!out) fail("failed writing " + path);
}

}  // namespace ridgecalc
