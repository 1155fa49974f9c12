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

#include "cfp/io.h"

#include <algorithm>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfp/error.h"

namespace cfp {
namespace {

using nlohmann::json;

[[noreturn]] void Malformed6(std::size_t offset, const std::string& what) {
  throw Error(ErrorCode::kMalformedGraph6,
              what + " at byte " + std::to_string(offset));
}

[[noreturn]] void MalformedDoc(const std::string& what) {
  throw Error(ErrorCode::kMalformedDocument, what);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

json MetaToJson(const Meta& meta) {
  json out = json::object();
  for (const auto& [key, value] : meta) {
    std::visit([&](const auto& v) { out[key] = v; }, value);
  }
  return out;
}

Meta MetaFromJson(const json& j) {
  Meta meta;
  if (!j.is_object()) MalformedDoc("\"meta\" must be an object");
  for (const auto& [key, value] : j.items()) {
    if (value.is_number_integer()) {
      meta[key] = value.get<int64_t>();
    } else if (value.is_string()) {
      meta[key] = value.get<std::string>();
    } else {
      meta[key] = value.dump();
    }
  }
  return meta;
}

json GraphToJson(const MultiGraph& g, const Meta& meta) {
  json doc = json::object();
  doc["n"] = g.num_vertices();
  bool dense = true;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    dense = dense && g.vertices()[i].value == static_cast<int32_t>(i);
  }
  if (!dense) {
    json vertices = json::array();
    for (VertexId v : g.vertices()) vertices.push_back(v.value);
    doc["vertices"] = std::move(vertices);
  }
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.id.value, e.u.value, e.v.value});
  doc["edges"] = std::move(edges);
  doc["meta"] = MetaToJson(meta);
  return doc;
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    MalformedDoc(std::string("invalid JSON: ") + e.what());
  }
}

MultiGraph GraphFromJson(const json& doc) {
  try {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
      MalformedDoc("document needs \"n\" and \"edges\"");
    }
    const int n = doc.at("n").get<int>();
    GraphBuilder builder;
    if (doc.contains("vertices")) {
      for (const auto& v : doc.at("vertices")) builder.AddVertex(VertexId{v.get<int32_t>()});
    } else {
      for (int i = 0; i < n; ++i) builder.AddVertex(VertexId{i});
    }
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 3) MalformedDoc("edge records are [id, u, v]");
      const EdgeId id{e[0].get<int32_t>()};
      const VertexId u{e[1].get<int32_t>()};
      const VertexId v{e[2].get<int32_t>()};
      if (id.value < 0 || builder.HasEdge(id)) {
        MalformedDoc("bad or duplicate edge id " + std::to_string(id.value));
      }
      if (!builder.HasVertex(u) || !builder.HasVertex(v)) {
        MalformedDoc("edge " + std::to_string(id.value) + " uses an unknown vertex");
      }
      builder.AddEdge(id, u, v);
    }
    MultiGraph g = builder.Build();
    if (static_cast<int>(g.num_vertices()) != n) MalformedDoc("\"n\" disagrees with the vertex list");
    return g;
  } catch (const json::exception& e) {
    MalformedDoc(std::string("bad field: ") + e.what());
  }
}

struct EdgeStyle {
  const char* color;
  const char* style;
  int width;
};

EdgeStyle StyleFor(std::string_view label) {
  if (label == "1a") return {"red", "solid", 2};
  if (label == "1b") return {"green", "dashed", 2};
  if (label == "1c") return {"blue", "dotted", 2};
  if (label == "3a") return {"brown", "bold", 4};
  return {"black", "solid", 1};
}

}  // namespace

MultiGraph ParseGraph6(std::string_view text) {
  std::string_view s = Trim(text);
  std::size_t base = text.find_first_not_of(" \t\r\n");
  if (base == std::string_view::npos) base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.starts_with(kHeader)) {
    s.remove_prefix(kHeader.size());
    base += kHeader.size();
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) Malformed6(base + pos, "unexpected end of input");
    const int c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126) Malformed6(base + pos, "byte out of range");
    ++pos;
    return c - 63;
  };
  int64_t n = next();
  if (n == 63) {
    int words = 3;
    if (pos < s.size() && s[pos] == '~') {
      ++pos;
      words = 6;
    }
    n = 0;
    for (int i = 0; i < words; ++i) n = (n << 6) | next();
  }
  if (n > 100000) Malformed6(0, "vertex count too large");
  const int64_t bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != expected) {
    Malformed6(base + std::min(s.size(), pos + expected),
               "expected " + std::to_string(expected) + " adjacency bytes");
  }
  GraphBuilder builder;
  for (int i = 0; i < n; ++i) builder.AddVertex(VertexId{i});
  int64_t k = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = next();
      if ((chunk >> (5 - k % 6)) & 1) builder.AddEdge(VertexId{i}, VertexId{j});
    }
  }
  return builder.Build();
}

std::string WriteGraph6(const MultiGraph& g) {
  if (!g.IsSimple()) throw Error(ErrorCode::kNotSimple, "graph6 needs a simple graph");
  const int64_t n = g.num_vertices();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.Adjacent(g.vertices()[i], g.vertices()[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
  return out;
}

std::string WriteGraphDocument(const MultiGraph& g, const Meta& meta) {
  return GraphToJson(g, meta).dump() + "\n";
}

MultiGraph ParseGraphDocument(std::string_view text) {
  return GraphFromJson(ParseJson(text));
}

std::string WriteColoringDocument(const ColoringDocument& doc) {
  json out = GraphToJson(doc.graph, doc.meta);
  out["spec"] = doc.spec.ToString();
  json assignment = json::array();
  for (const Edge& e : doc.graph.edges()) {
    const auto c = doc.coloring.ClassOf(e.id);
    if (!c) {
      throw Error(ErrorCode::kPartialColoring,
                  "edge " + std::to_string(e.id.value) + " is unassigned");
    }
    assignment.push_back({e.id.value, doc.spec.Label(*c)});
  }
  out["assignment"] = std::move(assignment);
  return out.dump() + "\n";
}

ColoringDocument ParseColoringDocument(std::string_view text) {
  const json doc = ParseJson(text);
  ColoringDocument out;
  out.graph = GraphFromJson(doc);
  try {
    if (doc.contains("spec")) {
      out.spec = PackingSpec::Parse(doc.at("spec").get<std::string>());
    }
    if (doc.contains("meta")) out.meta = MetaFromJson(doc.at("meta"));
    if (!doc.contains("assignment")) MalformedDoc("missing \"assignment\"");
    for (const auto& entry : doc.at("assignment")) {
      if (!entry.is_array() || entry.size() != 2) {
        MalformedDoc("assignment records are [id, label]");
      }
      const EdgeId id{entry[0].get<int32_t>()};
      const std::string label = entry[1].get<std::string>();
      if (!out.graph.HasEdge(id)) {
        MalformedDoc("assignment to unknown edge " + std::to_string(id.value));
      }
      const auto c = out.spec.ParseLabel(label);
      if (!c) MalformedDoc("unknown color label '" + label + "'");
      out.coloring.Set(id, *c);
    }
  } catch (const json::exception& e) {
    MalformedDoc(std::string("bad field: ") + e.what());
  }
  return out;
}

MultiGraph ParseGraphAuto(std::string_view text) {
  const std::string_view s = Trim(text);
  if (s.starts_with('{')) return ParseGraphDocument(s);
  const std::string_view line = s.substr(0, s.find('\n'));
  return ParseGraph6(line);
}

std::string WriteDot(const MultiGraph& g, const EdgeColoring& coloring,
                     const PackingSpec& spec) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) out << "  " << v.value << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u.value << " -- " << e.v.value;
    if (const auto c = coloring.ClassOf(e.id)) {
      const std::string label = spec.Label(*c);
      const EdgeStyle style = StyleFor(label);
      out << " [label=\"" << label << "\", color=\"" << style.color
          << "\", style=\"" << style.style << "\", penwidth=" << style.width << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cfp
