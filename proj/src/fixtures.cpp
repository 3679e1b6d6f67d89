#include "nervekit/fixtures.hpp"

#include <algorithm>

namespace nervekit::fixtures {

namespace {

SimplicialComplex from_lists(const std::vector<std::vector<std::string>>& facets) {
  std::vector<Simplex> fs;
  for (const auto& f : facets) fs.push_back(make_simplex(f));
  return SimplicialComplex::from_facets(fs);
}

// Two disks glued along a hexagon, with three more disks inside: the union of
// the A, B, C cones is a third sphere-half split in three. Total space is a
// wedge of two spheres.
SimplicialComplex cone_over_path(const std::string& apex, const std::vector<std::string>& path) {
  std::vector<std::vector<std::string>> fs;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) fs.push_back({apex, path[i], path[i + 1]});
  return from_lists(fs);
}

SimplicialComplex hexagon_disk(const std::string& apex) {
  std::vector<std::string> cycle = {"e1", "e2", "e3", "e4", "e5", "e6", "e1"};
  return cone_over_path(apex, cycle);
}

IndexedCover fig1_cover() {
  SimplicialComplex dplus = hexagon_disk("N");
  SimplicialComplex dminus = hexagon_disk("S");
  SimplicialComplex a = cone_over_path("c", {"e1", "e2", "e3"});
  SimplicialComplex b = cone_over_path("c", {"e3", "e4", "e5"});
  SimplicialComplex c = cone_over_path("c", {"e5", "e6", "e1"});
  SimplicialComplex ambient = unite(unite(dplus, dminus), unite(unite(a, b), c));
  return IndexedCover::make(ambient, {"A", "B", "C", "Dminus", "Dplus"},
                            {a, b, c, dminus, dplus});
}

IndexedCover square_circle_cover() {
  SimplicialComplex ambient =
      from_lists({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
  SimplicialComplex u = from_lists({{"1", "2"}, {"1", "4"}});
  SimplicialComplex w = from_lists({{"2", "3"}, {"3", "4"}});
  return IndexedCover::make(ambient, {"u", "w"}, {u, w});
}

IndexedCover hollow_triangle_cover() {
  SimplicialComplex ambient = from_lists({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  return IndexedCover::make(ambient, {"x", "y", "z"},
                            {from_lists({{"1", "2"}}), from_lists({{"2", "3"}}),
                             from_lists({{"1", "3"}})});
}

Poset chain3() {
  return Poset::from_relations({"p1", "p2", "p3"}, {{"p1", "p2"}, {"p2", "p3"}});
}

Poset quillen_base() {
  return Poset::from_relations({"0", "0p", "1", "2"}, {{"0", "1"}, {"0p", "1"}, {"1", "2"}});
}

PqJoinResult quillen_total() {
  Poset s0 = Poset::from_relations({"a", "b"}, {});
  Poset pt = Poset::from_relations({"m"}, {});
  std::map<std::string, Poset> fibers = {{"0", s0}, {"0p", s0}, {"1", pt}, {"2", s0}};
  return pq_join(quillen_base(), fibers);
}

}  // namespace

std::vector<std::string> complex_names() {
  return {"circle", "fig1-ambient", "rp2", "sphere2", "square-circle-ambient", "torus"};
}
std::vector<std::string> cover_names() {
  return {"chain-covex", "fig1", "hollow-triangle", "square-circle"};
}
std::vector<std::string> poset_names() {
  return {"b3-minus-bounds", "chain3", "quillen-base", "square-circle-poset"};
}
std::vector<std::string> posetmap_names() { return {"chain-covex-pi", "quillen-pi"}; }

SimplicialComplex complex_fixture(const std::string& name) {
  if (name == "circle") return from_lists({{"1", "2"}, {"2", "3"}, {"1", "3"}});
  if (name == "sphere2")
    return from_lists({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  if (name == "torus") {
    // Seven-vertex triangulation: triangles {i, i+1, i+3} and {i, i+2, i+3}
    // modulo 7.
    std::vector<std::vector<std::string>> fs;
    for (int i = 0; i < 7; ++i) {
      auto v = [&](int k) { return std::to_string((i + k) % 7); };
      fs.push_back({v(0), v(1), v(3)});
      fs.push_back({v(0), v(2), v(3)});
    }
    return from_lists(fs);
  }
  if (name == "rp2")
    return from_lists({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"},
                       {"1", "5", "6"}, {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"},
                       {"3", "4", "5"}, {"3", "4", "6"}});
  if (name == "fig1-ambient") return fig1_cover().ambient();
  if (name == "square-circle-ambient") return square_circle_cover().ambient();
  throw input_error("unknown complex fixture '" + name + "'");
}

IndexedCover cover_fixture(const std::string& name) {
  if (name == "fig1") return fig1_cover();
  if (name == "square-circle") return square_circle_cover();
  if (name == "hollow-triangle") return hollow_triangle_cover();
  if (name == "chain-covex") return covex_cover(chain3()).cover;
  throw input_error("unknown cover fixture '" + name + "'");
}

Poset poset_fixture(const std::string& name) {
  if (name == "square-circle-poset")
    return Poset::from_relations({"a", "b", "c", "d"},
                                 {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}});
  if (name == "b3-minus-bounds")
    return Poset::from_relations({"1", "2", "3", "12", "13", "23"},
                                 {{"1", "12"}, {"1", "13"}, {"2", "12"}, {"2", "23"},
                                  {"3", "13"}, {"3", "23"}});
  if (name == "chain3") return chain3();
  if (name == "quillen-base") return quillen_base();
  throw input_error("unknown poset fixture '" + name + "'");
}

PosetMap posetmap_fixture(const std::string& name) {
  // quillen-counterexample is the traditional name for the comparison map of
  // the fiberwise join over the four-element base.
  if (name == "quillen-pi" || name == "quillen-counterexample") return quillen_total().pi;
  if (name == "chain-covex-pi") return covex_cover(chain3()).pq.pi;
  throw input_error("unknown poset map fixture '" + name + "'");
}

}  // namespace nervekit::fixtures
