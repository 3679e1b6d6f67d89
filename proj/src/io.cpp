#include "nervekit/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace nervekit::io {

namespace {

constexpr const char* kComplexTag = "nervekit-complex-v1";
constexpr const char* kPosetTag = "nervekit-poset-v1";
constexpr const char* kCoverTag = "nervekit-cover-v1";
constexpr const char* kPosetMapTag = "nervekit-posetmap-v1";

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw input_error(where + ": " + msg);
}

const Json& field(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing key '") + key + "'");
  return *it;
}

void check_keys(const Json& j, const std::string& where, std::vector<std::string> allowed) {
  for (const auto& [key, value] : j.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      fail(where, "unknown key '" + key + "'");
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> get_string_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Metadata parse_metadata(const Json& j, const std::string& where) {
  Metadata m;
  auto it = j.find("metadata");
  if (it == j.end()) return m;
  const std::string mw = where + ": metadata";
  if (!it->is_object()) fail(mw, "expected an object");
  check_keys(*it, mw, {"name", "notes"});
  if (it->contains("name")) m.name = get_string((*it)["name"], mw + ": name");
  if (it->contains("notes")) m.notes = get_string((*it)["notes"], mw + ": notes");
  return m;
}

void expect_tag(const Json& j, const std::string& where, const char* tag) {
  std::string found = get_string(field(j, where, "format"), where + ": format");
  if (found != tag)
    fail(where, std::string("expected format '") + tag + "', found '" + found + "'");
}

SimplicialComplex parse_complex(const Json& j, const std::string& where) {
  expect_tag(j, where, kComplexTag);
  check_keys(j, where, {"format", "vertices", "facets", "metadata"});
  std::vector<std::string> vertices =
      get_string_array(field(j, where, "vertices"), where + ": vertices");
  std::set<std::string> declared;
  for (const std::string& v : vertices) {
    if (v.empty()) fail(where, "empty vertex token");
    if (!declared.insert(v).second) fail(where, "duplicate vertex '" + v + "'");
  }
  const Json& jf = field(j, where, "facets");
  if (!jf.is_array()) fail(where + ": facets", "expected an array");
  std::vector<Simplex> facets;
  std::set<std::string> used;
  for (std::size_t i = 0; i < jf.size(); ++i) {
    const std::string fw = where + ": facets[" + std::to_string(i) + "]";
    Simplex s = get_string_array(jf[i], fw);
    if (s.empty()) fail(fw, "empty facet");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(fw, "repeated vertex");
    for (const std::string& v : s) {
      if (!declared.count(v)) fail(fw, "vertex '" + v + "' not declared");
      used.insert(v);
    }
    facets.push_back(std::move(s));
  }
  // Declared but unused vertices are isolated points.
  for (const std::string& v : vertices)
    if (!used.count(v)) facets.push_back({v});
  return SimplicialComplex::from_facets(facets);
}

Poset parse_poset(const Json& j, const std::string& where) {
  expect_tag(j, where, kPosetTag);
  check_keys(j, where, {"format", "elements", "relations", "metadata"});
  std::vector<std::string> elements =
      get_string_array(field(j, where, "elements"), where + ": elements");
  std::set<std::string> declared;
  for (const std::string& e : elements) {
    if (e.empty()) fail(where, "empty element token");
    if (!declared.insert(e).second) fail(where, "duplicate element '" + e + "'");
  }
  const Json& jr = field(j, where, "relations");
  if (!jr.is_array()) fail(where + ": relations", "expected an array");
  std::vector<std::pair<std::string, std::string>> relations;
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string rw = where + ": relations[" + std::to_string(i) + "]";
    std::vector<std::string> pair = get_string_array(jr[i], rw);
    if (pair.size() != 2) fail(rw, "expected a pair");
    for (const std::string& e : pair)
      if (!declared.count(e)) fail(rw, "element '" + e + "' not declared");
    relations.push_back({pair[0], pair[1]});
  }
  try {
    return Poset::from_relations(elements, relations);
  } catch (const input_error& e) {
    fail(where, e.what());
  }
}

IndexedCover parse_cover(const Json& j, const std::string& where) {
  expect_tag(j, where, kCoverTag);
  check_keys(j, where, {"format", "space", "index_order", "members", "metadata"});
  SimplicialComplex space = parse_complex(field(j, where, "space"), where + ": space");
  std::vector<std::string> order =
      get_string_array(field(j, where, "index_order"), where + ": index_order");
  const Json& jm = field(j, where, "members");
  if (!jm.is_object()) fail(where + ": members", "expected an object");
  std::set<std::string> listed(order.begin(), order.end());
  for (const auto& [key, value] : jm.items())
    if (!listed.count(key)) fail(where + ": members", "index '" + key + "' not in index_order");
  std::vector<SimplicialComplex> members;
  for (const std::string& idx : order) {
    const std::string mw = where + ": members: " + idx;
    auto it = jm.find(idx);
    if (it == jm.end()) fail(where + ": members", "missing member '" + idx + "'");
    if (!it->is_object()) fail(mw, "expected an object");
    check_keys(*it, mw, {"facets"});
    const Json& jf = field(*it, mw, "facets");
    if (!jf.is_array()) fail(mw + ": facets", "expected an array");
    std::vector<Simplex> facets;
    for (std::size_t i = 0; i < jf.size(); ++i) {
      const std::string fw = mw + ": facets[" + std::to_string(i) + "]";
      Simplex s = get_string_array(jf[i], fw);
      if (s.empty()) fail(fw, "empty facet");
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end()) fail(fw, "repeated vertex");
      facets.push_back(std::move(s));
    }
    members.push_back(SimplicialComplex::from_facets(facets));
  }
  try {
    return IndexedCover::make(std::move(space), order, std::move(members));
  } catch (const input_error& e) {
    fail(where, e.what());
  }
}

PosetMap parse_posetmap(const Json& j, const std::string& where) {
  expect_tag(j, where, kPosetMapTag);
  check_keys(j, where, {"format", "domain", "codomain", "map", "metadata"});
  Poset domain = parse_poset(field(j, where, "domain"), where + ": domain");
  Poset codomain = parse_poset(field(j, where, "codomain"), where + ": codomain");
  const Json& jm = field(j, where, "map");
  if (!jm.is_object()) fail(where + ": map", "expected an object");
  std::map<std::string, std::string> values;
  for (const auto& [key, value] : jm.items())
    values[key] = get_string(value, where + ": map: " + key);
  try {
    return PosetMap::make(std::move(domain), std::move(codomain), std::move(values));
  } catch (const input_error& e) {
    fail(where, e.what());
  }
}

Json complex_to_json(const SimplicialComplex& k, const Metadata* meta) {
  Json j;
  j["format"] = kComplexTag;
  j["vertices"] = k.vertices();
  Json facets = Json::array();
  for (const Simplex& f : k.facets()) facets.push_back(f);
  j["facets"] = std::move(facets);
  if (meta && (meta->name || meta->notes)) {
    Json m = Json::object();
    if (meta->name) m["name"] = *meta->name;
    if (meta->notes) m["notes"] = *meta->notes;
    j["metadata"] = std::move(m);
  }
  return j;
}

Json poset_to_json(const Poset& p, const Metadata* meta) {
  Json j;
  j["format"] = kPosetTag;
  j["elements"] = p.elements();
  Json rels = Json::array();
  for (const auto& [a, b] : p.cover_relations()) rels.push_back(Json::array({a, b}));
  j["relations"] = std::move(rels);
  if (meta && (meta->name || meta->notes)) {
    Json m = Json::object();
    if (meta->name) m["name"] = *meta->name;
    if (meta->notes) m["notes"] = *meta->notes;
    j["metadata"] = std::move(m);
  }
  return j;
}

Json cover_to_json(const IndexedCover& c, const Metadata* meta) {
  Json j;
  j["format"] = kCoverTag;
  j["space"] = complex_to_json(c.ambient(), nullptr);
  j["index_order"] = c.index_order();
  Json members = Json::object();
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json facets = Json::array();
    for (const Simplex& f : c.member_at(static_cast<int>(i)).facets()) facets.push_back(f);
    Json m = Json::object();
    m["facets"] = std::move(facets);
    members[c.index_order()[i]] = std::move(m);
  }
  j["members"] = std::move(members);
  if (meta && (meta->name || meta->notes)) {
    Json m = Json::object();
    if (meta->name) m["name"] = *meta->name;
    if (meta->notes) m["notes"] = *meta->notes;
    j["metadata"] = std::move(m);
  }
  return j;
}

Json posetmap_to_json(const PosetMap& f, const Metadata* meta) {
  Json j;
  j["format"] = kPosetMapTag;
  j["domain"] = poset_to_json(f.domain(), nullptr);
  j["codomain"] = poset_to_json(f.codomain(), nullptr);
  Json m = Json::object();
  for (const std::string& e : f.domain().elements()) m[e] = f(e);
  j["map"] = std::move(m);
  if (meta && (meta->name || meta->notes)) {
    Json md = Json::object();
    if (meta->name) md["name"] = *meta->name;
    if (meta->notes) md["notes"] = *meta->notes;
    j["metadata"] = std::move(md);
  }
  return j;
}

std::string kind_name(const Manifest& m) {
  switch (m.payload.index()) {
    case 0: return "complex";
    case 1: return "poset";
    case 2: return "cover";
    case 3: return "poset map";
  }
  return "";
}

}  // namespace

Manifest Manifest::of(SimplicialComplex k, Metadata m) { return {std::move(k), std::move(m)}; }
Manifest Manifest::of(Poset p, Metadata m) { return {std::move(p), std::move(m)}; }
Manifest Manifest::of(IndexedCover c, Metadata m) { return {std::move(c), std::move(m)}; }
Manifest Manifest::of(PosetMap f, Metadata m) { return {std::move(f), std::move(m)}; }

bool manifest_equal(const Manifest& a, const Manifest& b) {
  if (a.payload.index() != b.payload.index() || !(a.meta == b.meta)) return false;
  switch (a.payload.index()) {
    case 0:
      return std::get<0>(a.payload) == std::get<0>(b.payload);
    case 1:
      return std::get<1>(a.payload) == std::get<1>(b.payload);
    case 2: {
      const IndexedCover& x = std::get<2>(a.payload);
      const IndexedCover& y = std::get<2>(b.payload);
      if (!(x.ambient() == y.ambient()) || x.index_order() != y.index_order()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (!(x.member_at(static_cast<int>(i)) == y.member_at(static_cast<int>(i)))) return false;
      return true;
    }
    case 3: {
      const PosetMap& x = std::get<3>(a.payload);
      const PosetMap& y = std::get<3>(b.payload);
      if (!(x.domain() == y.domain()) || !(x.codomain() == y.codomain())) return false;
      for (const std::string& e : x.domain().elements())
        if (x(e) != y(e)) return false;
      return true;
    }
  }
  return false;
}

const SimplicialComplex& as_complex(const Manifest& m, const std::string& where) {
  if (auto* k = std::get_if<SimplicialComplex>(&m.payload)) return *k;
  fail(where, "expected a complex manifest, found a " + kind_name(m));
}

const Poset& as_poset(const Manifest& m, const std::string& where) {
  if (auto* p = std::get_if<Poset>(&m.payload)) return *p;
  fail(where, "expected a poset manifest, found a " + kind_name(m));
}

const IndexedCover& as_cover(const Manifest& m, const std::string& where) {
  if (auto* c = std::get_if<IndexedCover>(&m.payload)) return *c;
  fail(where, "expected a cover manifest, found a " + kind_name(m));
}

const PosetMap& as_posetmap(const Manifest& m, const std::string& where) {
  if (auto* f = std::get_if<PosetMap>(&m.payload)) return *f;
  fail(where, "expected a poset map manifest, found a " + kind_name(m));
}

Manifest parse_manifest(const Json& j, const std::string& where) {
  std::string tag = get_string(field(j, where, "format"), where + ": format");
  Metadata meta = parse_metadata(j, where);
  if (tag == kComplexTag) return Manifest::of(parse_complex(j, where), std::move(meta));
  if (tag == kPosetTag) return Manifest::of(parse_poset(j, where), std::move(meta));
  if (tag == kCoverTag) return Manifest::of(parse_cover(j, where), std::move(meta));
  if (tag == kPosetMapTag) return Manifest::of(parse_posetmap(j, where), std::move(meta));
  fail(where, "unknown format tag '" + tag + "'");
}

Json to_json(const Manifest& m) {
  switch (m.payload.index()) {
    case 0: return complex_to_json(std::get<0>(m.payload), &m.meta);
    case 1: return poset_to_json(std::get<1>(m.payload), &m.meta);
    case 2: return cover_to_json(std::get<2>(m.payload), &m.meta);
    default: return posetmap_to_json(std::get<3>(m.payload), &m.meta);
  }
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error(path + ": cannot open");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(path + ": " + e.what());
  }
  return parse_manifest(j, path);
}

void save_manifest(const Manifest& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error(path + ": cannot open for writing");
  out << to_json(m).dump(2) << "\n";
}

CheckEntry CheckEntry::passed(std::string name, Json numbers) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = "pass";
  e.numbers = std::move(numbers);
  return e;
}

CheckEntry CheckEntry::failed(std::string name, Json witness, Json numbers) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = "fail";
  e.witness = std::move(witness);
  if (e.witness.is_null()) e.witness = "unavailable";
  e.numbers = std::move(numbers);
  return e;
}

CheckEntry CheckEntry::skipped(std::string name, Json numbers) {
  CheckEntry e;
  e.name = std::move(name);
  e.status = "skipped";
  e.numbers = std::move(numbers);
  return e;
}

void VerdictReport::add(CheckEntry e) { checks.push_back(std::move(e)); }

bool VerdictReport::overall_pass() const {
  for (const CheckEntry& e : checks)
    if (e.status == "fail") return false;
  return true;
}

int VerdictReport::exit_code() const { return overall_pass() ? 0 : 1; }

Json VerdictReport::to_json() const {
  std::vector<const CheckEntry*> order;
  for (const CheckEntry& e : checks) order.push_back(&e);
  std::stable_sort(order.begin(), order.end(),
                   [](const CheckEntry* a, const CheckEntry* b) { return a->name < b->name; });
  Json j;
  j["command"] = command;
  j["overall"] = overall_pass() ? "pass" : "fail";
  Json list = Json::array();
  for (const CheckEntry* e : order) {
    Json row;
    row["name"] = e->name;
    row["status"] = e->status;
    if (e->status == "fail") row["witness"] = e->witness;
    if (!e->numbers.is_null()) row["numbers"] = e->numbers;
    list.push_back(std::move(row));
  }
  j["checks"] = std::move(list);
  j["timing_seconds"] = seconds;
  return j;
}

}  // namespace nervekit::io
