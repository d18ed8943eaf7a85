#include "convexity/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "convexity/builtin.hpp"
#include "convexity/errors.hpp"

namespace convexity {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::size_t natural(const Json& v, const char* what) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string("field '") + what + "' must be a natural number");
  }
  return v.get<std::size_t>();
}

std::size_t natural_field(const Json& doc, const char* key) { return natural(field(doc, key), key); }

bool bool_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::string string_field(const Json& doc, const char* key) {
  const Json& v = field(doc, key);
  if (!v.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::size_t> naturals(const Json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string("field '") + what + "' must be an array");
  std::vector<std::size_t> out;
  for (const auto& x : v) out.push_back(natural(x, what));
  return out;
}

Json set_json(const PointSet& s) { return Json(s.indices()); }

PointSet set_from(const Json& v, std::size_t universe, const char* what) {
  PointSet out(universe);
  for (std::size_t x : naturals(v, what)) {
    if (x >= universe) {
      throw ParseError(std::string("index ") + std::to_string(x) + " in '" + what + "' is outside 0.." +
                       std::to_string(universe == 0 ? 0 : universe - 1));
    }
    out.insert(x);
  }
  return out;
}

Json halfspace_json(const Halfspace& h) { return Json{{"gamma", set_json(h.gamma)}, {"complement", set_json(h.complement)}}; }

Halfspace halfspace_from(const Json& v, std::size_t universe) {
  Halfspace h{set_from(field(v, "gamma"), universe, "gamma"), set_from(field(v, "complement"), universe, "complement")};
  if (h.complement != h.gamma.complement()) throw ParseError("halfspace sides do not partition the ground set");
  return h;
}

Json integer_json(const Integer& x) {
  if (x >= 0 && x <= Integer(std::numeric_limits<std::uint64_t>::max())) return Json(x.convert_to<std::uint64_t>());
  return Json(x.str());
}

Integer integer_from(const Json& v, const char* what) {
  if (v.is_number_unsigned() || v.is_number_integer()) return Integer(v.get<long long>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ParseError(std::string("field '") + what + "' must be an integer");
}

Rational rational_field(const Json& doc, const char* key) { return parse_rational(string_field(doc, key)); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<std::size_t> optional_natural(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return natural(doc.at(key), key);
}

std::optional<bool> optional_bool(const Json& doc, const char* key) {
  if (!doc.contains(key) || doc.at(key).is_null()) return std::nullopt;
  return bool_field(doc, key);
}

std::size_t parse_size(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text.front() == '-') {
    throw ParseError("'" + text + "' is not a natural number in '" + context + "'");
  }
  return static_cast<std::size_t>(value);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

}  // namespace

void expect_schema(const Json& doc, const std::string& name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object with schema '" + name + "'");
  const std::string got = string_field(doc, "schema");
  if (got != name) throw ParseError("expected schema '" + name + "', found '" + got + "'");
  const std::size_t version = natural_field(doc, "version");
  if (version != kSchemaVersion) {
    throw ParseError("unsupported " + name + " version " + std::to_string(version));
  }
}

Json tagged(const std::string& name) {
  Json doc = Json::object();
  doc["schema"] = name;
  doc["version"] = kSchemaVersion;
  return doc;
}

Json to_json(const SetFamily& family) {
  Json doc = tagged(schema::family);
  doc["ground_size"] = family.ground_size;
  Json sets = Json::array();
  for (const auto& s : family.sets) sets.push_back(set_json(s));
  doc["sets"] = std::move(sets);
  return doc;
}

namespace {

SetFamily family_body(const Json& doc) {
  SetFamily out{natural_field(doc, "ground_size"), {}};
  const Json& sets = field(doc, "sets");
  if (!sets.is_array()) throw ParseError("field 'sets' must be an array");
  for (const auto& s : sets) out.sets.push_back(set_from(s, out.ground_size, "sets"));
  return out;
}

}  // namespace

SetFamily family_from_json(const Json& doc) {
  expect_schema(doc, schema::family);
  return family_body(doc);
}

Json to_json(const SpaceDescriptor& d) {
  Json doc = tagged(schema::space);
  doc["kind"] = d.kind == SpaceKind::explicit_family ? "explicit" : to_string(d.kind);
  if (d.kind == SpaceKind::explicit_family) {
    doc["ground_size"] = d.family.ground_size;
    Json sets = Json::array();
    for (const auto& s : d.family.sets) sets.push_back(set_json(s));
    doc["sets"] = std::move(sets);
    doc["closed"] = d.closed;
  } else {
    doc["sides"] = d.sides;
  }
  if (!d.labels.empty()) doc["labels"] = d.labels;
  return doc;
}

SpaceDescriptor descriptor_from_json(const Json& doc) {
  expect_schema(doc, schema::space);
  SpaceDescriptor d;
  const std::string kind = string_field(doc, "kind");
  if (kind == "box" || kind == "lattice") {
    d.kind = kind == "box" ? SpaceKind::box : SpaceKind::lattice;
    if (doc.contains("sides")) {
      d.sides = naturals(doc.at("sides"), "sides");
    } else {
      d.sides.assign(natural_field(doc, "dim"), natural_field(doc, "side"));
    }
    if (d.sides.empty()) throw ParseError("grid spaces need at least one side");
  } else if (kind == "explicit") {
    d.kind = SpaceKind::explicit_family;
    d.family = family_body(doc);
    if (doc.contains("closed")) d.closed = bool_field(doc, "closed");
  } else {
    throw ParseError("unknown space kind '" + kind + "'");
  }
  if (doc.contains("labels")) {
    const Json& labels = doc.at("labels");
    if (!labels.is_array()) throw ParseError("field 'labels' must be an array of strings");
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("field 'labels' must be an array of strings");
      d.labels.push_back(l.get<std::string>());
    }
  }
  return d;
}

SpaceDescriptor parse_space_shorthand(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 || (parts[0] != "box" && parts[0] != "lattice")) {
    throw ParseError("space shorthand must look like box:DIM:SIDE or lattice:DIM:SIDE, got '" + text + "'");
  }
  SpaceDescriptor d;
  d.kind = parts[0] == "box" ? SpaceKind::box : SpaceKind::lattice;
  const std::size_t dim = parse_size(parts[1], text);
  const std::size_t side = parse_size(parts[2], text);
  if (dim == 0) throw ParseError("space dimension must be positive in '" + text + "'");
  d.sides.assign(dim, side);
  return d;
}

SpaceDescriptor load_space_argument(const std::string& text) {
  if (text.rfind("box:", 0) == 0 || text.rfind("lattice:", 0) == 0) return parse_space_shorthand(text);
  return descriptor_from_json(read_json_file(text));
}

SetFamily load_family_argument(const std::string& text) {
  if (text.rfind("lowerbound:", 0) == 0) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw ParseError("family shorthand must look like lowerbound:D:N, got '" + text + "'");
    return box_lower_bound_family(parse_size(parts[1], text), parse_size(parts[2], text));
  }
  const Json doc = read_json_file(text);
  if (doc.is_object() && doc.contains("schema") && doc.at("schema") == schema::space) {
    const SpaceDescriptor d = descriptor_from_json(doc);
    if (d.kind != SpaceKind::explicit_family) throw ParseError("'" + text + "' is a grid space, not a set family");
    return d.family;
  }
  return family_from_json(doc);
}

Json to_json(const BKEmbedding& e) {
  Json doc = tagged(schema::bk);
  doc["input_ground_size"] = e.atoms.empty() ? 0 : e.atoms.front().universe();
  doc["input_sets"] = e.atom_signatures.empty() ? 0 : e.atom_signatures.front().universe();
  Json points = Json::array();
  for (const auto& p : e.atom_points) points.push_back(to_string(p));
  doc["atom_points"] = std::move(points);
  Json signatures = Json::array();
  for (const auto& s : e.atom_signatures) signatures.push_back(set_json(s));
  doc["atom_signatures"] = std::move(signatures);
  Json atoms = Json::array();
  for (const auto& a : e.atoms) atoms.push_back(set_json(a));
  doc["atoms"] = std::move(atoms);
  Json sets = Json::array();
  for (const auto& s : e.sets.sets) sets.push_back(set_json(s));
  doc["sets"] = std::move(sets);
  Json certificates = Json::array();
  for (const auto& c : e.certificates) {
    Json system = Json::array();
    for (const auto& inequality : c.inequalities) {
      Json terms = Json::array();
      for (const auto& t : inequality.terms) terms.push_back(Json::array({to_string(t.coefficient), t.x_power, t.y_power}));
      system.push_back(std::move(terms));
    }
    certificates.push_back(Json{{"configuration", set_json(c.configuration)},
                                {"realized_by", c.realized_by},
                                {"inequalities", std::move(system)}});
  }
  doc["certificates"] = std::move(certificates);
  return doc;
}

BKEmbedding bk_from_json(const Json& doc) {
  expect_schema(doc, schema::bk);
  const std::size_t ground = natural_field(doc, "input_ground_size");
  const std::size_t m = natural_field(doc, "input_sets");
  BKEmbedding e;
  const Json& points = field(doc, "atom_points");
  if (!points.is_array()) throw ParseError("field 'atom_points' must be an array");
  for (const auto& p : points) {
    if (!p.is_string()) throw ParseError("atom points are rational strings");
    e.atom_points.push_back(parse_rational(p.get<std::string>()));
  }
  const std::size_t t = e.atom_points.size();
  for (const auto& s : field(doc, "atom_signatures")) e.atom_signatures.push_back(set_from(s, m, "atom_signatures"));
  for (const auto& a : field(doc, "atoms")) e.atoms.push_back(set_from(a, ground, "atoms"));
  e.sets.ground_size = t;
  for (const auto& s : field(doc, "sets")) e.sets.sets.push_back(set_from(s, t, "sets"));
  for (const auto& c : field(doc, "certificates")) {
    BKCertificate cert;
    cert.configuration = set_from(field(c, "configuration"), t, "configuration");
    cert.realized_by = naturals(field(c, "realized_by"), "realized_by");
    for (const auto& inequality : field(c, "inequalities")) {
      PolynomialInequality poly;
      for (const auto& term : inequality) {
        if (!term.is_array() || term.size() != 3 || !term[0].is_string()) {
          throw ParseError("monomials are [coefficient, x_power, y_power] triples");
        }
        poly.terms.push_back({parse_rational(term[0].get<std::string>()),
                              static_cast<unsigned>(natural(term[1], "x_power")),
                              static_cast<unsigned>(natural(term[2], "y_power"))});
      }
      cert.inequalities.push_back(std::move(poly));
    }
    e.certificates.push_back(std::move(cert));
  }
  if (e.atom_signatures.size() != t || e.atoms.size() != t) throw ParseError("one signature and atom per point");
  return e;
}

namespace {

constexpr const char* kUnbounded = "unbounded-at-this-scale";

}  // namespace

Json to_json(const InvariantReport& r) {
  Json doc = tagged(schema::invariants);
  doc["space"] = r.space;
  doc["points"] = r.points;
  if (r.radon_computed) doc["radon"] = r.radon ? Json(*r.radon) : Json(kUnbounded);
  doc["helly"] = optional_json(r.helly_independence);
  doc["helly_witness"] = r.helly_witness ? set_json(*r.helly_witness) : Json(nullptr);
  doc["helly_direct"] = optional_json(r.helly_direct);
  doc["halfspaces"] = optional_json(r.halfspace_count);
  doc["vc"] = optional_json(r.vc_halfspaces);
  doc["dual_vc"] = optional_json(r.dual_vc_halfspaces);
  doc["separable"] = optional_json(r.separable);
  Json bounds = Json::array();
  for (const auto& b : r.bound_checks) {
    bounds.push_back(Json{{"name", b.name}, {"applicable", b.applicable}, {"holds", b.holds}, {"data", b.data}});
  }
  doc["bounds"] = std::move(bounds);
  return doc;
}

InvariantReport invariants_from_json(const Json& doc) {
  expect_schema(doc, schema::invariants);
  InvariantReport r;
  r.space = string_field(doc, "space");
  r.points = natural_field(doc, "points");
  if (doc.contains("radon")) {
    r.radon_computed = true;
    const Json& v = doc.at("radon");
    if (v.is_string()) {
      if (v.get<std::string>() != kUnbounded) throw ParseError("radon must be a number or '" + std::string(kUnbounded) + "'");
    } else {
      r.radon = natural(v, "radon");
    }
  }
  r.helly_independence = optional_natural(doc, "helly");
  if (doc.contains("helly_witness") && !doc.at("helly_witness").is_null()) {
    r.helly_witness = set_from(doc.at("helly_witness"), r.points, "helly_witness");
  }
  r.helly_direct = optional_natural(doc, "helly_direct");
  r.halfspace_count = optional_natural(doc, "halfspaces");
  r.vc_halfspaces = optional_natural(doc, "vc");
  r.dual_vc_halfspaces = optional_natural(doc, "dual_vc");
  r.separable = optional_bool(doc, "separable");
  if (doc.contains("bounds")) {
    for (const auto& b : doc.at("bounds")) {
      r.bound_checks.push_back(
          {string_field(b, "name"), bool_field(b, "applicable"), bool_field(b, "holds"), string_field(b, "data")});
    }
  }
  return r;
}

Json to_json(const FHReport& r) {
  Json doc = tagged(schema::fh);
  doc["n"] = r.n;
  doc["k"] = r.k;
  doc["intersecting_k_tuples"] = integer_json(r.intersecting_k_tuples);
  doc["alpha"] = to_string(r.alpha);
  doc["max_intersecting"] = r.max_intersecting;
  doc["beta"] = to_string(r.beta);
  doc["witness_point"] = optional_json(r.witness_point);
  return doc;
}

FHReport fh_from_json(const Json& doc) {
  expect_schema(doc, schema::fh);
  FHReport r;
  r.n = natural_field(doc, "n");
  r.k = natural_field(doc, "k");
  r.intersecting_k_tuples = integer_from(field(doc, "intersecting_k_tuples"), "intersecting_k_tuples");
  r.alpha = rational_field(doc, "alpha");
  r.max_intersecting = natural_field(doc, "max_intersecting");
  r.beta = rational_field(doc, "beta");
  r.witness_point = optional_natural(doc, "witness_point");
  return r;
}

Json to_json(const ColorfulInput& input) {
  Json doc = tagged(schema::colorful_instance);
  doc["space"] = to_json(input.space);
  Json families = Json::array();
  for (const auto& family : input.instance.families) {
    Json members = Json::array();
    for (const auto& s : family) members.push_back(set_json(s));
    families.push_back(std::move(members));
  }
  doc["families"] = std::move(families);
  doc["m"] = input.instance.m;
  doc["r"] = input.instance.r;
  return doc;
}

namespace {

SpaceDescriptor embedded_space(const Json& v) {
  if (v.is_string()) return load_space_argument(v.get<std::string>());
  return descriptor_from_json(v);
}

std::size_t universe_of(const SpaceDescriptor& d) {
  if (d.kind == SpaceKind::explicit_family) return d.family.ground_size;
  std::size_t n = 1;
  for (std::size_t s : d.sides) n *= s;
  return n;
}

}  // namespace

ColorfulInput colorful_input_from_json(const Json& doc) {
  expect_schema(doc, schema::colorful_instance);
  ColorfulInput input;
  input.space = embedded_space(field(doc, "space"));
  const std::size_t universe = universe_of(input.space);
  const Json& families = field(doc, "families");
  if (!families.is_array()) throw ParseError("field 'families' must be an array of families");
  for (const auto& family : families) {
    if (!family.is_array()) throw ParseError("each family is an array of index lists");
    std::vector<PointSet> members;
    for (const auto& s : family) members.push_back(set_from(s, universe, "families"));
    input.instance.families.push_back(std::move(members));
  }
  input.instance.m = natural_field(doc, "m");
  input.instance.r = natural_field(doc, "r");
  return input;
}

Json to_json(const ColorfulOutcome& outcome) {
  Json doc = tagged(schema::colorful_outcome);
  if (const auto* w = std::get_if<MTupleWitness>(&outcome)) {
    doc["outcome"] = "m-tuple-witness";
    doc["family"] = w->family;
    doc["members"] = w->members;
    doc["point"] = w->point;
  } else if (const auto* c = std::get_if<VennCertificate>(&outcome)) {
    doc["outcome"] = "venn-certificate";
    Json classes = Json::array();
    for (const auto& vc : c->classes) {
      classes.push_back(Json{{"u", vc.u}, {"v", vc.v}, {"halfspace", halfspace_json(vc.gamma)}});
    }
    doc["classes"] = std::move(classes);
    Json patterns = Json::array();
    for (const auto& p : c->patterns) {
      std::string signs;
      for (bool b : p.inside) signs += b ? '+' : '-';
      patterns.push_back(Json{{"signs", signs}, {"edge", p.edge}, {"image", p.image}});
    }
    doc["patterns"] = std::move(patterns);
  } else {
    const auto& i = std::get<Inconclusive>(outcome);
    doc["outcome"] = "inconclusive";
    doc["stage"] = i.stage;
    doc["reason"] = i.reason;
  }
  return doc;
}

ColorfulOutcome colorful_outcome_from_json(const Json& doc, std::size_t universe) {
  expect_schema(doc, schema::colorful_outcome);
  const std::string kind = string_field(doc, "outcome");
  if (kind == "m-tuple-witness") {
    return MTupleWitness{natural_field(doc, "family"), naturals(field(doc, "members"), "members"),
                         natural_field(doc, "point")};
  }
  if (kind == "venn-certificate") {
    VennCertificate c;
    for (const auto& vc : field(doc, "classes")) {
      c.classes.push_back({natural_field(vc, "u"), natural_field(vc, "v"), halfspace_from(field(vc, "halfspace"), universe)});
    }
    for (const auto& p : field(doc, "patterns")) {
      VennPattern pattern;
      for (char ch : string_field(p, "signs")) {
        if (ch != '+' && ch != '-') throw ParseError("pattern signs are '+' or '-'");
        pattern.inside.push_back(ch == '+');
      }
      pattern.edge = naturals(field(p, "edge"), "edge");
      pattern.image = natural_field(p, "image");
      c.patterns.push_back(std::move(pattern));
    }
    return c;
  }
  if (kind == "inconclusive") return Inconclusive{string_field(doc, "stage"), string_field(doc, "reason")};
  throw ParseError("unknown colorful outcome '" + kind + "'");
}

Json to_json(const SeparatedPairsInput& input) {
  Json doc = tagged(schema::pairs_instance);
  doc["space"] = to_json(input.space);
  Json functions = Json::array();
  for (const auto& f : input.functions) functions.push_back(f.values);
  doc["functions"] = std::move(functions);
  doc["r"] = input.r;
  return doc;
}

SeparatedPairsInput pairs_input_from_json(const Json& doc) {
  expect_schema(doc, schema::pairs_instance);
  SeparatedPairsInput input;
  input.space = embedded_space(field(doc, "space"));
  const Json& functions = field(doc, "functions");
  if (!functions.is_array()) throw ParseError("field 'functions' must be an array of value lists");
  for (const auto& f : functions) input.functions.push_back({naturals(f, "functions")});
  input.r = natural_field(doc, "r");
  return input;
}

Json to_json(const SeparatedPairResult& result) {
  Json doc = tagged(schema::pairs_certificate);
  const auto& c = result.certificate;
  doc["domain_size"] = c.e0.universe();
  doc["e0"] = set_json(c.e0);
  doc["i"] = c.i;
  doc["j"] = c.j;
  doc["halfspace"] = halfspace_json(c.gamma);
  const auto& t = result.trace;
  doc["trace"] = Json{{"total_weight", t.total_weight},
                      {"heavy_sets", t.heavy_sets},
                      {"x0", t.x0},
                      {"weight_in_gamma", t.weight_in_gamma},
                      {"weight_in_complement", t.weight_in_complement}};
  return doc;
}

SeparatedPairResult pairs_result_from_json(const Json& doc, std::size_t universe) {
  expect_schema(doc, schema::pairs_certificate);
  SeparatedPairResult r;
  r.certificate.e0 = set_from(field(doc, "e0"), natural_field(doc, "domain_size"), "e0");
  r.certificate.i = natural_field(doc, "i");
  r.certificate.j = natural_field(doc, "j");
  r.certificate.gamma = halfspace_from(field(doc, "halfspace"), universe);
  const Json& t = field(doc, "trace");
  r.trace.total_weight = natural_field(t, "total_weight");
  r.trace.heavy_sets = natural_field(t, "heavy_sets");
  r.trace.x0 = natural_field(t, "x0");
  r.trace.weight_in_gamma = natural_field(t, "weight_in_gamma");
  r.trace.weight_in_complement = natural_field(t, "weight_in_complement");
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw ParseError("'" + path + "' is not valid JSON: " + err.what());
  }
}

}  // namespace convexity
