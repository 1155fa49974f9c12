// Copyright 2026 The cfp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <tuple>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cfp/colorer.h"
#include "cfp/error.h"
#include "cfp/families.h"
#include "cfp/io.h"
#include "cfp/recognition.h"
#include "cfp/structure.h"
#include "cfp/verifier.h"

namespace cfp {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitBudget = 2;
constexpr int kExitBadInput = 3;

std::string ReadSource(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::kMalformedDocument, "cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void WriteTarget(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorCode::kMalformedDocument, "cannot write " + path);
  file << text;
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

json GraphJson(const MultiGraph& g) { return json::parse(WriteGraphDocument(g)); }

json DecompositionJson(const MultiGraph& g) {
  json out;
  if (!FindBridges(g).empty()) {
    const BridgeDecomposition bd = BridgeDecompose(g);
    out["kind"] = "Bridged";
    out["root"] = bd.root;
    json components = json::array();
    for (std::size_t i = 0; i < bd.components.size(); ++i) {
      const MultiGraph& c = bd.components[i];
      json entry;
      entry["index"] = i;
      entry["class"] = std::string(ComponentClassName(ClassifyComponent(c)));
      entry["level"] = bd.levels[i];
      json vertices = json::array();
      for (VertexId v : c.vertices()) vertices.push_back(v.value);
      entry["vertices"] = std::move(vertices);
      components.push_back(std::move(entry));
    }
    out["components"] = std::move(components);
    json tree = json::array();
    for (std::size_t i = 0; i < bd.components.size(); ++i) {
      if (const auto& up = bd.up_edge[i]) {
        tree.push_back({up->parent, i, up->bridge.value});
      }
    }
    out["tree"] = std::move(tree);
    return out;
  }
  const OumDecomposition d = OumDecompose(g);
  out["kind"] = std::string(OumKindName(d.kind));
  if (d.kind == OumKind::kRingOfDiamonds) out["k"] = d.ring_size;
  if (d.kind != OumKind::kSubstituted) return out;
  out["h"] = GraphJson(d.h);
  json triangles = json::array();
  for (const auto& [hv, tri] : d.triangle_of) {
    triangles.push_back({hv.value, tri.vertices[0].value, tri.vertices[1].value,
                         tri.vertices[2].value});
  }
  out["triangles"] = std::move(triangles);
  json strings = json::array();
  for (const auto& [he, real] : d.realization_of) {
    if (real.is_string()) strings.push_back({he.value, real.string->diamonds.size()});
  }
  out["strings"] = std::move(strings);
  return out;
}

std::pair<uint64_t, uint64_t> ParseSeedRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const uint64_t s = std::stoull(text);
      return {s, s};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::kBadCount, "bad seed range '" + text + "'");
  }
}

struct FamilyTally {
  int graphs = 0;
  int failures = 0;
  int with_three_a = 0;
  int three_a_edges = 0;
  int backtracks = 0;
};

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Packing edge-colorings of claw-free cubic graphs"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string out_path;
  std::string dot_path;
  std::string coloring_path;
  std::string spec_text = "1,1,1,3";
  int64_t budget = OracleOptions{}.node_budget;
  std::string family;
  int k = 3;
  uint64_t seed = 1;
  bool bridged = false;
  int h_vertices = 6;
  int components = 0;
  std::string format = "json";
  std::string seeds = "1..150";
  std::vector<int> sizes = CorpusOptions{}.sizes;

  auto* recognize = app.add_subcommand("recognize", "Report cubic, claw-free and bridge structure");
  recognize->add_option("input", input, "Graph file or - for stdin");

  auto* decompose = app.add_subcommand("decompose", "Print the structure decomposition");
  decompose->add_option("input", input, "Graph file or - for stdin");

  auto* color = app.add_subcommand("color", "Color a claw-free cubic graph");
  color->add_option("input", input, "Graph file or - for stdin");
  color->add_option("--out", out_path, "Coloring document path (default stdout)");
  color->add_option("--dot", dot_path, "Also write a DOT rendering");

  auto* verify = app.add_subcommand("verify", "Check a coloring document against a graph");
  verify->add_option("graph", input, "Graph file or - for stdin")->required();
  verify->add_option("coloring", coloring_path, "Coloring document")->required();
  verify->add_option("--spec", spec_text, "Packing sequence, e.g. 1,1,1,3");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive feasibility search");
  oracle->add_option("input", input, "Graph file or - for stdin");
  oracle->add_option("--spec", spec_text, "Packing sequence, e.g. 1,1,1,3");
  oracle->add_option("--budget", budget, "Search node limit");

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", family,
                  "ring, k4, petersen, tietze, leaf7, leaf7-pair, k3-star, dipole, random")
      ->required();
  gen->add_option("--k", k, "Ring size");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_flag("--bridged", bridged, "Random graph with bridges");
  gen->add_option("--h-vertices", h_vertices, "Order of the random multigraph H");
  gen->add_option("--components", components, "Bridged component count (0 = random)");
  gen->add_option("--format", format, "json or graph6")->check(CLI::IsMember({"json", "graph6"}));
  gen->add_option("--out", out_path, "Output path (default stdout)");

  auto* corpus = app.add_subcommand("corpus", "Color and verify the built-in corpus");
  corpus->add_option("--seeds", seeds, "Random seed range a..b");
  corpus->add_option("--sizes", sizes, "Orders of H for random instances")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*recognize) {
      const MultiGraph g = ParseGraphAuto(ReadSource(input, in));
      const bool cubic = IsCubic(g);
      const auto claw = FindClaw(g);
      const BridgeSet bridges = FindBridges(g);
      out << "vertices: " << g.num_vertices() << "\n"
          << "edges: " << g.num_edges() << "\n"
          << "cubic: " << YesNo(cubic) << "\n"
          << "simple: " << YesNo(g.IsSimple()) << "\n"
          << "connected: " << YesNo(IsConnected(g)) << "\n";
      out << "claw-free: " << YesNo(!claw);
      if (claw) {
        out << " (center " << claw->center.value << ", leaves " << claw->leaves[0].value
            << " " << claw->leaves[1].value << " " << claw->leaves[2].value << ")";
      }
      out << "\nbridges: " << bridges.size();
      for (EdgeId b : bridges) out << " " << b.value;
      out << "\n2-edge-connected: " << YesNo(IsTwoEdgeConnected(g)) << "\n";
      return cubic && !claw ? kExitOk : kExitNegative;
    }
    if (*decompose) {
      const MultiGraph g = ParseGraphAuto(ReadSource(input, in));
      out << DecompositionJson(g).dump(2) << "\n";
      return kExitOk;
    }
    if (*color) {
      const MultiGraph g = ParseGraphAuto(ReadSource(input, in));
      ColorerDiagnostics diag;
      ColoringDocument doc{g, ColorGraph(g, &diag), PackingSpec::Default(), {}};
      doc.meta["variant"] = diag.variant;
      doc.meta["backtracks"] = diag.backtracks;
      doc.meta["components"] = diag.components;
      doc.meta["three_a_edges"] = doc.coloring.CountOn(g, PackingColor::k3a);
      WriteTarget(out_path, WriteColoringDocument(doc), out);
      if (!dot_path.empty()) WriteTarget(dot_path, WriteDot(g, doc.coloring), out);
      const auto violations = Verify(g, doc.coloring);
      if (!violations.empty()) err << "coloring rejected by the verifier\n";
      return violations.empty() ? kExitOk : kExitNegative;
    }
    if (*verify) {
      const MultiGraph g = ParseGraphAuto(ReadSource(input, in));
      const ColoringDocument doc = ParseColoringDocument(ReadSource(coloring_path, in));
      const PackingSpec spec = PackingSpec::Parse(spec_text);
      const auto violations = Verify(g, doc.coloring, spec);
      if (violations.empty()) {
        out << "ok\n";
        return kExitOk;
      }
      for (const Violation& v : violations) {
        out << "violation: class " << spec.Label(v.class_index) << " edges "
            << v.first.value << " " << v.second.value << " distance "
            << v.distance.value() << " required " << v.required << "\n";
      }
      return kExitNegative;
    }
    if (*oracle) {
      const MultiGraph g = ParseGraphAuto(ReadSource(input, in));
      OracleOptions options;
      options.node_budget = budget;
      const OracleResult result = OracleColor(g, PackingSpec::Parse(spec_text), options);
      out << OracleStatusName(result.status) << "\n";
      err << "nodes: " << result.nodes << "\n";
      switch (result.status) {
        case OracleStatus::kFeasible: return kExitOk;
        case OracleStatus::kInfeasible: return kExitNegative;
        case OracleStatus::kBudgetExceeded: return kExitBudget;
      }
    }
    if (*gen) {
      MultiGraph g;
      Meta meta{{"family", family}};
      if (family == "ring") {
        g = GenRing(k);
        meta["k"] = k;
      } else if (family == "k4") {
        g = GenK4();
      } else if (family == "petersen") {
        g = GenPetersen();
      } else if (family == "tietze") {
        g = GenTietze();
      } else if (family == "leaf7") {
        g = GenLeaf7();
      } else if (family == "leaf7-pair") {
        g = GenLeaf7Pair();
      } else if (family == "k3-star") {
        g = GenK3Star();
      } else if (family == "dipole") {
        g = GenDipole();
      } else if (family == "random") {
        RandomOptions options;
        options.h_vertices = h_vertices;
        options.bridged = bridged;
        options.components = components;
        g = GenRandomClawFreeCubic(seed, options);
        meta["seed"] = static_cast<int64_t>(seed);
        meta["bridged"] = bridged ? 1 : 0;
      } else {
        err << "unknown family '" << family << "'\n";
        return kExitBadInput;
      }
      WriteTarget(out_path,
                  format == "graph6" ? WriteGraph6(g) + "\n" : WriteGraphDocument(g, meta),
                  out);
      return kExitOk;
    }
    if (*corpus) {
      CorpusOptions options;
      std::tie(options.seed_begin, options.seed_end) = ParseSeedRange(seeds);
      options.sizes = sizes;
      const auto start = std::chrono::steady_clock::now();
      std::map<std::string, FamilyTally> tallies;
      FamilyTally total;
      for (const CorpusEntry& entry : BuildCorpus(options)) {
        FamilyTally& t = tallies[entry.family];
        ColorerDiagnostics diag;
        bool ok = false;
        int three_a = 0;
        try {
          const EdgeColoring c = ColorGraph(entry.g, &diag);
          ok = Verify(entry.g, c).empty();
          three_a = c.CountOn(entry.g, PackingColor::k3a);
        } catch (const Error& e) {
          err << entry.name << ": " << e.what() << "\n";
        }
        for (FamilyTally* x : {&t, &total}) {
          ++x->graphs;
          x->failures += ok ? 0 : 1;
          x->with_three_a += three_a > 0 ? 1 : 0;
          x->three_a_edges += three_a;
          x->backtracks += diag.backtracks;
        }
      }
      const double seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      auto row = [&out](const std::string& name, const FamilyTally& t) {
        out << std::left << std::setw(12) << name << std::right << std::setw(8) << t.graphs
            << std::setw(10) << t.failures << std::setw(10) << t.with_three_a
            << std::setw(10) << t.three_a_edges << std::setw(12) << t.backtracks << "\n";
      };
      out << std::left << std::setw(12) << "family" << std::right << std::setw(8) << "graphs"
          << std::setw(10) << "failures" << std::setw(10) << "with-3a" << std::setw(10)
          << "3a-edges" << std::setw(12) << "backtracks" << "\n";
      for (const auto& [name, t] : tallies) row(name, t);
      row("total", total);
      out << "backtracks: " << total.backtracks << "\n";
      if (total.backtracks > 0) {
        out << "note: " << total.backtracks
            << " candidate colorings were rejected and retried\n";
      }
      out << "seconds: " << seconds << "\n";
      return total.failures == 0 ? kExitOk : kExitNegative;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace cfp
