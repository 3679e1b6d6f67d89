// Manifest ingestion and serialization for the four on-disk object kinds,
// plus the machine-readable verdict reports emitted by the command line
// surface.
#pragma once

#include "nervekit/core.hpp"
#include "nervekit/nerves.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nervekit::io {

using Json = nlohmann::ordered_json;

struct Metadata {
  std::optional<std::string> name;
  std::optional<std::string> notes;
  bool operator==(const Metadata&) const = default;
};

// A manifest is one of the four serializable objects together with optional
// metadata. Format tags on disk: nervekit-complex-v1, nervekit-poset-v1,
// nervekit-cover-v1, nervekit-posetmap-v1.
struct Manifest {
  std::variant<SimplicialComplex, Poset, IndexedCover, PosetMap> payload;
  Metadata meta;

  static Manifest of(SimplicialComplex k, Metadata m = {});
  static Manifest of(Poset p, Metadata m = {});
  static Manifest of(IndexedCover c, Metadata m = {});
  static Manifest of(PosetMap f, Metadata m = {});
};

bool manifest_equal(const Manifest& a, const Manifest& b);

// Typed access; throws input_error naming the expected and found kinds.
const SimplicialComplex& as_complex(const Manifest& m, const std::string& where);
const Poset& as_poset(const Manifest& m, const std::string& where);
const IndexedCover& as_cover(const Manifest& m, const std::string& where);
const PosetMap& as_posetmap(const Manifest& m, const std::string& where);

// Parsing validates everything: format tags, token resolution, relation
// closure (cycles are listed), cover membership. Errors are input_error with
// the location prefixed.
Manifest parse_manifest(const Json& j, const std::string& where);
Json to_json(const Manifest& m);

Manifest load_manifest(const std::string& path);
void save_manifest(const Manifest& m, const std::string& path);

// One row of a verdict report. Witness must be set on failing entries; it is
// serialized only then. Numbers carries named scalars and vectors.
struct CheckEntry {
  std::string name;
  std::string status = "pass";  // pass | fail | skipped
  Json witness;
  Json numbers;

  static CheckEntry passed(std::string name, Json numbers = Json());
  static CheckEntry failed(std::string name, Json witness, Json numbers = Json());
  static CheckEntry skipped(std::string name, Json numbers = Json());
};

// Deterministic report: checks are sorted by name, overall is pass exactly
// when no entry fails, and the timing field is the only unstable byte.
struct VerdictReport {
  std::string command;
  std::vector<CheckEntry> checks;
  double seconds = 0.0;

  void add(CheckEntry e);
  bool overall_pass() const;
  int exit_code() const;  // 0 all pass, 1 some check failed
  Json to_json() const;
};

}  // namespace nervekit::io
