// Command line surface: constructions print manifests, informational
// commands print plain JSON documents, verify commands print verdict
// reports. Exit codes: 0 all pass, 1 a verification failed, 2 input error.
#include "CLI11.hpp"

#include "nervekit/cech.hpp"
#include "nervekit/fixtures.hpp"
#include "nervekit/gen.hpp"
#include "nervekit/io.hpp"
#include "nervekit/nerves.hpp"
#include "nervekit/posettools.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace nervekit;
using nervekit::io::CheckEntry;
using nervekit::io::Json;
using nervekit::io::Manifest;
using nervekit::io::VerdictReport;

namespace {

struct Options {
  std::string cover, complex_arg, poset, map, out, mode = "quillen", coeffs = "q", cutset;
  int n = 0;
  int maxdim = 3;
  std::uint64_t seed = 1;
  std::uint64_t tree_seed = 0;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

IndexedCover resolve_cover(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    Manifest m = io::load_manifest(arg);
    return io::as_cover(m, arg);
  }
  try {
    return fixtures::cover_fixture(arg);
  } catch (const input_error&) {
    throw input_error("'" + arg + "' is neither a readable file nor a cover fixture");
  }
}

SimplicialComplex resolve_complex(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    Manifest m = io::load_manifest(arg);
    return io::as_complex(m, arg);
  }
  try {
    return fixtures::complex_fixture(arg);
  } catch (const input_error&) {
    throw input_error("'" + arg + "' is neither a readable file nor a complex fixture");
  }
}

Poset resolve_poset(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    Manifest m = io::load_manifest(arg);
    return io::as_poset(m, arg);
  }
  try {
    return fixtures::poset_fixture(arg);
  } catch (const input_error&) {
    throw input_error("'" + arg + "' is neither a readable file nor a poset fixture");
  }
}

PosetMap resolve_posetmap(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    Manifest m = io::load_manifest(arg);
    return io::as_posetmap(m, arg);
  }
  try {
    return fixtures::posetmap_fixture(arg);
  } catch (const input_error&) {
    throw input_error("'" + arg + "' is neither a readable file nor a poset map fixture");
  }
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string join_plus(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += '+';
    out += parts[i];
  }
  return out;
}

Json torsion_json(const std::vector<la::BigInt>& t) {
  Json a = Json::array();
  for (const la::BigInt& x : t) a.push_back(x.str());
  return a;
}

Json homology_json(const HomologyResult& h) {
  Json j;
  j["coeffs"] = h.coeffs.str();
  j["degree_ceiling"] = h.degree_ceiling;
  j["betti"] = h.betti;
  if (h.coeffs.kind == CoefficientSpec::Kind::Z) {
    Json t = Json::array();
    for (const auto& row : h.torsion) t.push_back(torsion_json(row));
    j["torsion"] = std::move(t);
  }
  return j;
}

Json induced_json(const InducedMapResult& im) {
  Json j;
  j["betti_domain"] = im.betti_dom;
  j["betti_codomain"] = im.betti_cod;
  j["rank"] = im.rank;
  Json iso = Json::array(), epi = Json::array();
  for (std::uint8_t b : im.iso) iso.push_back(static_cast<bool>(b));
  for (std::uint8_t b : im.epi) epi.push_back(static_cast<bool>(b));
  j["iso"] = std::move(iso);
  j["epi"] = std::move(epi);
  return j;
}

void output_manifest(const Manifest& m, const Options& opt) {
  if (!opt.out.empty()) io::save_manifest(m, opt.out);
  emit(io::to_json(m));
}

// Report the per-face acyclicity hypotheses: one entry per checked nerve
// face, failing faces carrying every bad component.
void add_hypothesis_entries(VerdictReport& rep, const IndexedCover& cov, int max_size,
                            const std::vector<HypothesisFailure>& failures) {
  std::map<std::string, Json> bad;
  for (const HypothesisFailure& f : failures) {
    Json w;
    w["component"] = f.component_rep;
    w["needed"] = f.needed;
    if (f.witness_degree) w["witness_degree"] = *f.witness_degree;
    bad[join_plus(f.indices)].push_back(std::move(w));
  }
  IntersectionCache cache(cov);
  for (const std::vector<int>& face : nerve_faces(cache)) {
    if (max_size >= 0 && static_cast<int>(face.size()) > max_size) continue;
    std::vector<std::string> idx;
    for (int p : face) idx.push_back(cov.index_order()[static_cast<std::size_t>(p)]);
    std::string token = join_plus(idx);
    auto it = bad.find(token);
    if (it == bad.end())
      rep.add(CheckEntry::passed("hypothesis@" + token));
    else
      rep.add(CheckEntry::failed("hypothesis@" + token, Json{{"components", it->second}}));
  }
}

int run_verify_nerve_theorem(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  VerdictReport rep;
  rep.command = "verify nerve-theorem --cover " + opt.cover + " --n " + std::to_string(opt.n) +
                " --coeffs " + coeffs.str();
  auto t0 = std::chrono::steady_clock::now();
  NerveTheoremVerdict v = verify_nerve_theorem(cov, opt.n, coeffs);
  add_hypothesis_entries(rep, cov, opt.n, v.hypotheses.failures);
  Json numbers;
  numbers["betti_ambient"] = v.betti_ambient;
  numbers["betti_completed_nerve"] = v.betti_completed;
  numbers["betti_component_model"] = v.betti_cech;
  if (!v.conclusion_checked) {
    rep.add(CheckEntry::skipped("conclusion@ambient-vs-completed-nerve"));
    rep.add(CheckEntry::skipped("conclusion@component-model-vs-completed-nerve"));
  } else {
    Json amb = Json::array(), cech = Json::array();
    for (const std::string& f : v.conclusion_failures) {
      if (f.rfind("ambient", 0) == 0) amb.push_back(f);
      else cech.push_back(f);
    }
    rep.add(amb.empty()
                ? CheckEntry::passed("conclusion@ambient-vs-completed-nerve", numbers)
                : CheckEntry::failed("conclusion@ambient-vs-completed-nerve", amb, numbers));
    rep.add(cech.empty()
                ? CheckEntry::passed("conclusion@component-model-vs-completed-nerve", numbers)
                : CheckEntry::failed("conclusion@component-model-vs-completed-nerve", cech,
                                     numbers));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep.to_json());
  return rep.exit_code();
}

int run_verify_eta(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  VerdictReport rep;
  rep.command = "verify eta --cover " + opt.cover + " --n " + std::to_string(opt.n) +
                " --coeffs " + coeffs.str();
  auto t0 = std::chrono::steady_clock::now();
  EtaVerdict v = verify_eta(cov, opt.n, coeffs);
  add_hypothesis_entries(rep, cov, -1, v.failures);
  rep.add(v.fibers_pass
              ? CheckEntry::passed("fibers")
              : CheckEntry::failed("fibers", "a fiber differs from its component"));
  Json numbers = induced_json(v.induced);
  numbers["observed_connectivity"] = v.observed_connectivity;
  rep.add(v.conclusion_pass ? CheckEntry::passed("conclusion@induced-map", numbers)
                            : CheckEntry::failed("conclusion@induced-map",
                                                 Json{{"required_acyclicity", v.n + 1}}, numbers));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep.to_json());
  return rep.exit_code();
}

int run_verify_fiber(const Options& opt) {
  PosetMap f = resolve_posetmap(opt.map);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  FiberMode mode = parse_fiber_mode(opt.mode);
  VerdictReport rep;
  rep.command = "verify fiber --map " + opt.map + " --mode " + fiber_mode_name(mode) + " --n " +
                std::to_string(opt.n) + " --coeffs " + coeffs.str();
  auto t0 = std::chrono::steady_clock::now();
  FiberVerdict v = verify_fiber(f, mode, opt.n, coeffs);
  for (const FiberEntry& e : v.entries) {
    Json numbers{{"needed", e.needed}, {"level", e.level}};
    if (e.skipped)
      rep.add(CheckEntry::skipped(e.name, numbers));
    else if (e.pass)
      rep.add(CheckEntry::passed(e.name, numbers));
    else
      rep.add(CheckEntry::failed(e.name, numbers, numbers));
  }
  Json numbers = induced_json(v.conclusion);
  rep.add(v.conclusion_pass ? CheckEntry::passed("conclusion@induced-map", numbers)
                            : CheckEntry::failed("conclusion@induced-map",
                                                 Json{{"required_acyclicity", v.n + 1}}, numbers));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep.to_json());
  return rep.exit_code();
}

int run_verify_cutset(const Options& opt) {
  Poset p = resolve_poset(opt.poset);
  std::vector<std::string> x = split_commas(opt.cutset);
  VerdictReport rep;
  rep.command = "verify cutset --poset " + opt.poset + " --cutset " + join_plus(x) +
                " --tree-seed " + std::to_string(opt.tree_seed);
  auto t0 = std::chrono::steady_clock::now();
  CutsetVerdict v = verify_cutset(p, x, opt.tree_seed);
  if (!v.is_cutset) {
    rep.add(CheckEntry::failed("cutset", Json{{"missed_chain", *v.cutset_witness}}));
    rep.add(CheckEntry::skipped("h1-match"));
  } else {
    rep.add(CheckEntry::passed("cutset"));
    Json numbers;
    numbers["rank_cutset_complex"] = v.rank_r;
    numbers["rank_order_complex"] = v.rank_delta;
    numbers["torsion_cutset_complex"] = torsion_json(v.torsion_r);
    numbers["torsion_order_complex"] = torsion_json(v.torsion_delta);
    rep.add(v.pass ? CheckEntry::passed("h1-match", numbers)
                   : CheckEntry::failed("h1-match", numbers, numbers));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep.to_json());
  return rep.exit_code();
}

int run_verify_detection(const Options& opt) {
  PosetMap pf = resolve_posetmap(opt.map);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  SimplicialMap f = order_complex_map(pf);
  IndexedCover cov =
      opt.cover.empty() ? chain_cover(pf.codomain()) : resolve_cover(opt.cover);
  VerdictReport rep;
  rep.command = "verify detection --map " + opt.map +
                (opt.cover.empty() ? std::string() : " --cover " + opt.cover) + " --n " +
                std::to_string(opt.n) + " --coeffs " + coeffs.str();
  auto t0 = std::chrono::steady_clock::now();
  DetectionVerdict v = detection_check(f, cov, opt.n, coeffs);
  for (const FiberEntry& e : v.entries) {
    Json numbers{{"needed", e.needed}, {"level", e.level}};
    if (e.skipped)
      rep.add(CheckEntry::skipped(e.name, numbers));
    else if (e.pass)
      rep.add(CheckEntry::passed(e.name, numbers));
    else
      rep.add(CheckEntry::failed(e.name, numbers, numbers));
  }
  Json numbers = induced_json(v.conclusion);
  rep.add(v.conclusion_pass ? CheckEntry::passed("conclusion@induced-map", numbers)
                            : CheckEntry::failed("conclusion@induced-map",
                                                 Json{{"required_acyclicity", v.n}}, numbers));
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep.to_json());
  return rep.exit_code();
}

int run_verify_completion(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  VerdictReport rep;
  rep.command = "verify completion --cover " + opt.cover + " --n " + std::to_string(opt.n) +
                " --coeffs " + coeffs.str();
  auto t0 = std::chrono::steady_clock::now();
  CompletionVerdict v = verify_completion(cov, opt.n, coeffs);
  rep.add(v.complete_pass ? CheckEntry::passed("complete")
                          : CheckEntry::failed("complete", "completed cover is not complete"));
  Json cmap;
  cmap["available"] = v.c_available;
  if (v.c_witness) cmap["disconnected_over"] = *v.c_witness;
  rep.add(CheckEntry::passed("c-map", cmap));
  for (const auto& [token, level] : v.member_levels) {
    Json numbers{{"needed", v.n}, {"level", level}};
    if (level >= v.n)
      rep.add(CheckEntry::passed("member@" + token, numbers));
    else
      rep.add(CheckEntry::failed("member@" + token, numbers, numbers));
  }
  if (!v.conclusion_checked) {
    rep.add(CheckEntry::skipped("conclusion@betti-range"));
  } else {
    Json numbers;
    numbers["betti_ambient"] = v.betti_ambient;
    numbers["betti_completion"] = v.betti_vhat;
    rep.add(v.conclusion_pass
                ? CheckEntry::passed("conclusion@betti-range", numbers)
                : CheckEntry::failed("conclusion@betti-range", v.conclusion_failures, numbers));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  emit(rep.to_json());
  return rep.exit_code();
}

int run_nerve(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  output_manifest(Manifest::of(nerve(cov), {"nerve of " + opt.cover, std::nullopt}), opt);
  return 0;
}

int run_completed_nerve(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  output_manifest(Manifest::of(completed_nerve(cov).poset,
                               {"completed nerve of " + opt.cover, std::nullopt}),
                  opt);
  return 0;
}

int run_cech_delta(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  SimplicialSetTrunc s = cech_delta(cov, opt.maxdim);
  Json j;
  j["command"] = "cech-delta --cover " + opt.cover + " --maxdim " + std::to_string(opt.maxdim) +
                 " --coeffs " + coeffs.str();
  Json cells = Json::array();
  for (int k = 0; k <= s.max_dim; ++k) cells.push_back(s.cells[static_cast<std::size_t>(k)].size());
  j["cells"] = std::move(cells);
  j["homology"] = homology_json(homology(normalized_chain_complex(s, s.max_dim), coeffs));
  emit(j);
  return 0;
}

int run_completion(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  output_manifest(
      Manifest::of(completion_cover(completion(cov), cov), {"completion of " + opt.cover, std::nullopt}),
      opt);
  return 0;
}

int run_vbar(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  output_manifest(Manifest::of(vbar(cov).poset, {"component poset of " + opt.cover, std::nullopt}),
                  opt);
  return 0;
}

int run_homology(const Options& opt) {
  SimplicialComplex k = resolve_complex(opt.complex_arg);
  CoefficientSpec coeffs = CoefficientSpec::parse(opt.coeffs);
  Json j;
  j["command"] = "homology --complex " + opt.complex_arg + " --coeffs " + coeffs.str() +
                 " --maxdim " + std::to_string(opt.maxdim);
  j["homology"] = homology_json(homology_of_complex(k, opt.maxdim, coeffs));
  emit(j);
  return 0;
}

int run_eta(const Options& opt) {
  IndexedCover cov = resolve_cover(opt.cover);
  EtaResult eta = eta_map(cov);
  output_manifest(Manifest::of(eta.poset_map, {"comparison map of " + opt.cover, std::nullopt}),
                  opt);
  return 0;
}

int run_cutset(const Options& opt) {
  Poset p = resolve_poset(opt.poset);
  std::vector<std::string> x = split_commas(opt.cutset);
  CutsetComplex r = r_complex(p, x);
  GroupPresentation pres = pi1_presentation(r, opt.tree_seed);
  AbelianizationResult ab = pi1_abelianized(r, opt.tree_seed);
  Json j;
  j["command"] = "cutset --poset " + opt.poset + " --cutset " + join_plus(x) + " --tree-seed " +
                 std::to_string(opt.tree_seed);
  j["vertices"] = r.vertices;
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back(e.token);
  j["edges"] = std::move(edges);
  Json triangles = Json::array();
  for (const auto& t : r.triangles) triangles.push_back(t.token);
  j["triangles"] = std::move(triangles);
  Json pj;
  pj["generators"] = pres.generators;
  pj["relators"] = pres.relators;
  j["pi1"] = std::move(pj);
  Json aj;
  aj["rank"] = ab.rank;
  aj["torsion"] = torsion_json(ab.torsion);
  j["abelianization"] = std::move(aj);
  emit(j);
  return 0;
}

int run_essential_chains(const Options& opt) {
  Poset p = resolve_poset(opt.poset);
  Json j;
  j["command"] = "essential-chains --poset " + opt.poset;
  Json chains = Json::array();
  for (const auto& c : essential_chains(p)) chains.push_back(c);
  j["chains"] = std::move(chains);
  emit(j);
  return 0;
}

int run_gen_fixtures(const Options& opt) {
  std::string dir = opt.out.empty() ? std::string("fixtures") : opt.out;
  std::filesystem::create_directories(dir);
  std::vector<std::string> written;
  auto write = [&](const std::string& stem, Manifest m) {
    std::string path = dir + "/" + stem + ".json";
    io::save_manifest(m, path);
    written.push_back(path);
  };
  for (const std::string& name : fixtures::complex_names())
    write("complex-" + name, Manifest::of(fixtures::complex_fixture(name), {name, std::nullopt}));
  for (const std::string& name : fixtures::cover_names())
    write("cover-" + name, Manifest::of(fixtures::cover_fixture(name), {name, std::nullopt}));
  for (const std::string& name : fixtures::poset_names())
    write("poset-" + name, Manifest::of(fixtures::poset_fixture(name), {name, std::nullopt}));
  for (const std::string& name : fixtures::posetmap_names())
    write("posetmap-" + name, Manifest::of(fixtures::posetmap_fixture(name), {name, std::nullopt}));
  Json j;
  j["command"] = "gen fixtures";
  j["written"] = written;
  emit(j);
  return 0;
}

int run_gen_pq_join(const Options& opt) {
  Poset base = gen::random_poset(opt.seed, 5, 6);
  std::map<std::string, Poset> fibers;
  std::uint64_t child = opt.seed * 1000;
  for (const std::string& e : base.elements()) {
    ++child;
    fibers[e] = gen::random_poset(child, 1 + static_cast<int>(child % 3), 2);
  }
  PqJoinResult pq = pq_join(base, fibers);
  Options out = opt;
  output_manifest(
      Manifest::of(pq.pi, {"fiberwise join, seed " + std::to_string(opt.seed), std::nullopt}), out);
  return 0;
}

int run_gen_covex(const Options& opt) {
  Poset base = resolve_poset(opt.poset);
  CovexResult cv = covex_cover(base);
  output_manifest(
      Manifest::of(cv.cover, {"two-point fiberwise join cover of " + opt.poset, std::nullopt}),
      opt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nerve models, completions and homological verdicts for finite covers"};
  app.require_subcommand(1);
  Options opt;

  auto add_coeffs = [&](CLI::App* c) { c->add_option("--coeffs", opt.coeffs, "q, z, f2 or fp:<p>"); };

  CLI::App* c_nerve = app.add_subcommand("nerve", "nerve complex of a cover");
  c_nerve->add_option("--cover", opt.cover, "cover fixture or manifest path")->required();
  c_nerve->add_option("--out", opt.out, "write the manifest here as well");

  CLI::App* c_cnerve = app.add_subcommand("completed-nerve", "completed nerve poset of a cover");
  c_cnerve->add_option("--cover", opt.cover)->required();
  c_cnerve->add_option("--out", opt.out);

  CLI::App* c_cech = app.add_subcommand("cech-delta", "discrete nerve model cell counts and homology");
  c_cech->add_option("--cover", opt.cover)->required();
  c_cech->add_option("--maxdim", opt.maxdim, "truncation degree");
  add_coeffs(c_cech);

  CLI::App* c_completion = app.add_subcommand("completion", "completed cover of a cover");
  c_completion->add_option("--cover", opt.cover)->required();
  c_completion->add_option("--out", opt.out);

  CLI::App* c_vbar = app.add_subcommand("vbar", "component poset of a cover");
  c_vbar->add_option("--cover", opt.cover)->required();
  c_vbar->add_option("--out", opt.out);

  CLI::App* c_hom = app.add_subcommand("homology", "homology of a complex");
  c_hom->add_option("--complex", opt.complex_arg, "complex fixture or manifest path")->required();
  c_hom->add_option("--maxdim", opt.maxdim);
  add_coeffs(c_hom);

  CLI::App* c_eta = app.add_subcommand("eta", "comparison map onto the completed nerve");
  c_eta->add_option("--cover", opt.cover)->required();
  c_eta->add_option("--out", opt.out);

  CLI::App* c_cut = app.add_subcommand("cutset", "cutset 2-complex and its fundamental group");
  c_cut->add_option("--poset", opt.poset, "poset fixture or manifest path")->required();
  c_cut->add_option("--cutset", opt.cutset, "comma-separated cutset elements")->required();
  c_cut->add_option("--tree-seed", opt.tree_seed, "spanning forest selector");

  CLI::App* c_ess = app.add_subcommand("essential-chains", "chains fixed by the neighborhood core");
  c_ess->add_option("--poset", opt.poset)->required();

  CLI::App* c_gen = app.add_subcommand("gen", "generators");
  c_gen->require_subcommand(1);
  CLI::App* g_fix = c_gen->add_subcommand("fixtures", "write every named fixture as a manifest");
  g_fix->add_option("--out", opt.out, "output directory (default fixtures)");
  CLI::App* g_pq = c_gen->add_subcommand("pq-join", "random fiberwise join comparison map");
  g_pq->add_option("--seed", opt.seed);
  g_pq->add_option("--out", opt.out);
  CLI::App* g_cov = c_gen->add_subcommand("covex", "two-point fiberwise join cover of a poset");
  g_cov->add_option("--poset", opt.poset)->required();
  g_cov->add_option("--out", opt.out);

  CLI::App* c_verify = app.add_subcommand("verify", "verdict reports");
  c_verify->require_subcommand(1);
  CLI::App* v_nerve = c_verify->add_subcommand("nerve-theorem", "acyclic covers model the space");
  v_nerve->add_option("--cover", opt.cover)->required();
  v_nerve->add_option("--n", opt.n)->required();
  add_coeffs(v_nerve);
  CLI::App* v_eta = c_verify->add_subcommand("eta", "comparison map acyclicity");
  v_eta->add_option("--cover", opt.cover)->required();
  v_eta->add_option("--n", opt.n)->required();
  add_coeffs(v_eta);
  CLI::App* v_fiber = c_verify->add_subcommand("fiber", "graded fiber criteria for poset maps");
  v_fiber->add_option("--map", opt.map, "poset map fixture or manifest path")->required();
  v_fiber->add_option("--mode", opt.mode, "quillen, copo or achain");
  v_fiber->add_option("--n", opt.n)->required();
  add_coeffs(v_fiber);
  CLI::App* v_cut = c_verify->add_subcommand("cutset", "cutset complex matches first homology");
  v_cut->add_option("--poset", opt.poset)->required();
  v_cut->add_option("--cutset", opt.cutset)->required();
  v_cut->add_option("--tree-seed", opt.tree_seed);
  CLI::App* v_det = c_verify->add_subcommand("detection", "cover detection for the order-complex map");
  v_det->add_option("--map", opt.map)->required();
  v_det->add_option("--cover", opt.cover, "cover of the codomain order complex (default: maximal chains)");
  v_det->add_option("--n", opt.n)->required();
  add_coeffs(v_det);
  CLI::App* v_comp = c_verify->add_subcommand("completion", "completed covers model the space");
  v_comp->add_option("--cover", opt.cover)->required();
  v_comp->add_option("--n", opt.n)->required();
  add_coeffs(v_comp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_nerve->parsed()) return run_nerve(opt);
    if (c_cnerve->parsed()) return run_completed_nerve(opt);
    if (c_cech->parsed()) return run_cech_delta(opt);
    if (c_completion->parsed()) return run_completion(opt);
    if (c_vbar->parsed()) return run_vbar(opt);
    if (c_hom->parsed()) return run_homology(opt);
    if (c_eta->parsed()) return run_eta(opt);
    if (c_cut->parsed()) return run_cutset(opt);
    if (c_ess->parsed()) return run_essential_chains(opt);
    if (g_fix->parsed()) return run_gen_fixtures(opt);
    if (g_pq->parsed()) return run_gen_pq_join(opt);
    if (g_cov->parsed()) return run_gen_covex(opt);
    if (v_nerve->parsed()) return run_verify_nerve_theorem(opt);
    if (v_eta->parsed()) return run_verify_eta(opt);
    if (v_fiber->parsed()) return run_verify_fiber(opt);
    if (v_cut->parsed()) return run_verify_cutset(opt);
    if (v_det->parsed()) return run_verify_detection(opt);
    if (v_comp->parsed()) return run_verify_completion(opt);
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
