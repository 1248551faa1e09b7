//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "ms4wb/error.hpp"

namespace ms4wb::io {

std::string read_text(const std::string &path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json(const std::string &path) { return parse_json(read_text(path)); }

namespace {

const Json &field(const Json &j, const char *key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_name(const Json &j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw InputError("point names must be strings");
}

std::vector<std::string> name_list(const Json &j) {
  if (!j.is_array()) throw InputError("expected a list of point names");
  std::vector<std::string> out;
  for (const auto &x : j) out.push_back(as_name(x));
  return out;
}

std::vector<std::vector<std::string>> block_list(const Json &j) {
  if (!j.is_array()) throw InputError("expected a list of blocks");
  std::vector<std::vector<std::string>> out;
  for (const auto &b : j) out.push_back(name_list(b));
  return out;
}

void require_type(const Json &j, const char *type) {
  auto it = j.find("type");
  if (it != j.end() && (!it->is_string() || it->get<std::string>() != type))
    throw InputError(std::string("expected a document of type '") + type + "'");
}

Json names_of(const std::vector<std::string> &names, const PointSet &s) {
  Json out = Json::array();
  s.for_each([&](unsigned x) { out.push_back(names[x]); });
  return out;
}

Json set_family(const std::vector<std::string> &names, const std::vector<PointSet> &sets) {
  Json out = Json::array();
  for (const auto &s : sets) out.push_back(names_of(names, s));
  return out;
}

Json size_field(unsigned atoms, std::uint64_t size) {
  if (atoms >= 64) return "2^" + std::to_string(atoms);
  return size;
}

std::string quoted(const std::string &s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Frame &f) {
  Json j;
  j["type"] = "ms4";
  j["points"] = f.names();
  Json r = Json::array();
  for (unsigned x = 0; x < f.size(); ++x)
    f.r().image(x).for_each([&](unsigned y) {
      if (x != y) r.push_back(Json::array({f.name(x), f.name(y)}));
    });
  j["R"] = std::move(r);
  j["E"] = partition_to_json(f.names(), f.e());
  j["closure"] = true;
  if (f.layer_tag()) {
    Json layers = Json::object();
    for (unsigned x = 0; x < f.size(); ++x) layers[f.name(x)] = (*f.layer_tag())[x];
    j["layers"] = std::move(layers);
  }
  return j;
}

Frame frame_from_json(const Json &j) {
  require_type(j, "ms4");
  auto points = name_list(field(j, "points"));
  std::vector<std::pair<std::string, std::string>> edges;
  if (auto it = j.find("R"); it != j.end()) {
    if (!it->is_array()) throw InputError("'R' must be a list of pairs");
    for (const auto &pair : *it) {
      if (!pair.is_array() || pair.size() != 2)
        throw InputError("'R' entries must be pairs");
      edges.emplace_back(as_name(pair[0]), as_name(pair[1]));
    }
  }
  std::vector<std::vector<std::string>> blocks;
  if (auto it = j.find("E"); it != j.end()) {
    blocks = block_list(*it);
  } else {
    for (const auto &p : points) blocks.push_back({p});
  }
  bool closure = true;
  if (auto it = j.find("closure"); it != j.end()) {
    if (!it->is_boolean()) throw InputError("'closure' must be a boolean");
    closure = it->get<bool>();
  }
  Frame f = Frame::build(points, edges, blocks,
                         closure ? ClosureMode::kClose : ClosureMode::kValidate);
  if (auto it = j.find("layers"); it != j.end()) {
    if (!it->is_object()) throw InputError("'layers' must map point names to layers");
    Frame::Layers layers(f.size(), 0);
    for (const auto &[name, value] : it->items()) {
      if (!value.is_number_integer() || value.get<long long>() < 1)
        throw InputError("layer of '" + name + "' must be a positive integer");
      layers[f.require_index(name)] = value.get<unsigned>();
    }
    for (unsigned x = 0; x < f.size(); ++x)
      if (layers[x] == 0) throw InputError("no layer given for '" + f.name(x) + "'");
    f = f.with_layers(std::move(layers));
  }
  return f;
}

Json to_json(const S52Frame &f) {
  Json j;
  j["type"] = "s52";
  j["points"] = f.names();
  j["E1"] = partition_to_json(f.names(), f.e1());
  j["E2"] = partition_to_json(f.names(), f.e2());
  return j;
}

S52Frame s52_from_json(const Json &j) {
  require_type(j, "s52");
  return S52Frame::build(name_list(field(j, "points")), block_list(field(j, "E1")),
                         block_list(field(j, "E2")));
}

AnyFrame any_frame_from_json(const Json &j) {
  if (!j.is_object()) throw InputError("expected a frame document");
  auto it = j.find("type");
  if (it == j.end() || *it == "ms4") return frame_from_json(j);
  if (*it == "s52") return s52_from_json(j);
  throw InputError("unknown frame type " + it->dump());
}

Json to_json(const AnyFrame &f) {
  return std::visit([](const auto &g) { return to_json(g); }, f);
}

Json set_to_json(const std::vector<std::string> &names, const PointSet &s) {
  return names_of(names, s);
}

PointSet set_from_json(const std::vector<std::string> &names, const Json &j) {
  PointSet s(static_cast<unsigned>(names.size()));
  for (const auto &name : name_list(j)) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw InputError("unknown point '" + name + "'");
    s.insert(static_cast<unsigned>(it - names.begin()));
  }
  return s;
}

Json partition_to_json(const std::vector<std::string> &names, const Partition &k) {
  return set_family(names, k.blocks());
}

Partition partition_from_json(const std::vector<std::string> &names, const Json &j) {
  if (!j.is_array()) throw InputError("a partition is a list of blocks");
  std::vector<PointSet> blocks;
  for (const auto &b : j) blocks.push_back(set_from_json(names, b));
  return Partition::from_blocks(static_cast<unsigned>(names.size()), blocks);
}

Json valuation_to_json(const std::vector<std::string> &names, const Valuation &v) {
  Json j = Json::object();
  for (const auto &[var, set] : v) j[var] = names_of(names, set);
  return j;
}

Valuation valuation_from_json(const std::vector<std::string> &names, const Json &j) {
  if (!j.is_object()) throw InputError("a valuation maps variables to point lists");
  Valuation v;
  for (const auto &[var, set] : j.items()) v.emplace(var, set_from_json(names, set));
  return v;
}

Json classification_to_json(const Frame &f, const FrameClassification &c) {
  Json j;
  j["depth"] = c.depth;
  j["layers"] = set_family(f.names(), c.layers);
  j["q_roots"] = names_of(f.names(), c.q_roots);
  j["is_si"] = c.is_si;
  j["is_simple"] = c.is_simple;
  j["metadata"] = {{"strongly_rooted_is_rooted", c.strongly_rooted_is_rooted},
                   {"note", "finite frames: every set is open"}};
  return j;
}

Json s52_analysis_to_json(const S52Frame &f, const S52Analysis &a) {
  Json j;
  j["roots"] = names_of(f.names(), a.roots);
  j["is_si"] = a.is_si;
  j["is_simple"] = a.is_simple;
  j["transitivity_degree"] = a.transitivity_degree;
  j["s_star_total"] = a.s_star.is_total();
  return j;
}

Json subalgebra_to_json(const std::vector<std::string> &names, const SubalgebraReport &r) {
  Json j;
  j["generators"] = set_family(names, r.generators);
  j["size"] = size_field(r.atom_count, r.size);
  j["atom_count"] = r.atom_count;
  j["kernel"] = partition_to_json(names, r.kernel);
  j["kernel_correct"] = r.kernel_correct;
  j["closure_steps"] = r.closure_steps;
  j["materialized"] = r.materialized;
  if (r.materialized) j["elements"] = set_family(names, r.elements);
  return j;
}

Json congruences_to_json(const std::vector<std::string> &names, const CongruenceReport &r) {
  Json j;
  j["q_upsets"] = set_family(names, r.q_upsets);
  j["esat_r_upsets"] = set_family(names, r.esat_r_upsets);
  j["h_black_filter_count"] = r.h_black_filter_count;
  j["congruence_count"] = r.q_upsets.size();
  j["sets_agree"] = r.sets_agree;
  j["count_agrees"] = r.count_agrees;
  j["simple"] = r.simple;
  j["si"] = r.si;
  return j;
}

Json generating_to_json(const std::vector<std::string> &names, const GeneratingVerdict &v) {
  Json j;
  j["generating"] = v.generating;
  j["coloring"] = partition_to_json(names, v.coloring);
  j["kernel"] = partition_to_json(names, v.kernel);
  j["method_b"] = v.method_b ? partition_to_json(names, *v.method_b) : Json(nullptr);
  j["method_b_skipped"] = v.method_b_skipped;
  j["partitions_examined"] = v.partitions_examined;
  j["methods_agree"] = v.methods_agree;
  return j;
}

Json correctness_to_json(const std::vector<std::string> &names, const CorrectnessVerdict &v,
                         const char *first_relation, const char *second_relation) {
  Json j;
  j["correct"] = v.correct;
  if (!v.correct) {
    j["failed_clause"] = std::string(v.failed == CorrectnessVerdict::Clause::kR
                                         ? first_relation
                                         : second_relation) +
                         "K <= K" +
                         (v.failed == CorrectnessVerdict::Clause::kR ? first_relation
                                                                     : second_relation);
    j["witness"] = {names[v.witness[0]], names[v.witness[1]], names[v.witness[2]]};
  }
  j["metadata"] = {{"separated_vacuous", v.separated_vacuous}};
  return j;
}

Json validity_to_json(const std::vector<std::string> &names, const ValidityResult &r) {
  Json j;
  j["valid"] = r.valid;
  j["counterexample"] =
      r.counterexample ? valuation_to_json(names, *r.counterexample) : Json(nullptr);
  if (!r.valid) j["failing_points"] = names_of(names, r.failing_points);
  j["valuations_checked"] = r.valuations_checked;
  return j;
}

Json transfer_to_json(const Frame &translated, const S52Frame &f, const TransferReport &r) {
  Json j;
  j["generators"] = set_family(translated.names(), r.generators);
  j["s52_generators"] = set_family(f.names(), r.s52_generators);
  j["L"] = partition_to_json(translated.names(), r.l_kernel);
  j["K"] = partition_to_json(f.names(), r.k_kernel);
  j["K_hat"] = partition_to_json(translated.names(), r.k_hat);
  j["K_hat_within_L"] = r.k_hat_within_l;
  j["B_size"] = size_field(r.b_atoms, r.b_atoms < 64 ? std::uint64_t{1} << r.b_atoms : 0);
  j["B_prime_size"] =
      size_field(r.b_prime_atoms, r.b_prime_atoms < 64 ? std::uint64_t{1} << r.b_prime_atoms : 0);
  j["K_hat_algebra_size"] = size_field(
      r.k_hat_blocks, r.k_hat_blocks < 64 ? std::uint64_t{1} << r.k_hat_blocks : 0);
  j["bound_holds"] = r.b_atoms <= r.k_hat_blocks;
  return j;
}

Json growth_to_json(const GrowthSeries &s) {
  Json j;
  j["family"] = s.family;
  j["parameters"] = s.parameters;
  Json sizes = Json::array();
  for (std::size_t i = 0; i < s.sizes.size(); ++i)
    sizes.push_back(size_field(s.atoms[i], s.sizes[i]));
  j["sizes"] = std::move(sizes);
  j["atoms"] = s.atoms;
  j["truncated"] = s.truncated;
  j["strictly_increasing"] = s.strictly_increasing;
  return j;
}

std::string to_dot(const Frame &f) {
  std::ostringstream out;
  const auto &names = f.names();
  const Relation &r = f.r();
  out << "digraph ms4 {\n  rankdir=BT;\n  node [shape=point, xlabel=\"\\N\"];\n";
  for (unsigned b = 0; b < f.e().block_count(); ++b) {
    out << "  subgraph cluster_e" << b << " {\n    style=dotted;\n";
    f.e().blocks()[b].for_each([&](unsigned x) { out << "    " << quoted(names[x]) << ";\n"; });
    out << "  }\n";
  }
  // Cluster representatives: least member of each R-cluster.
  std::vector<unsigned> reps;
  for (unsigned x = 0; x < f.size(); ++x) {
    PointSet cluster = r.image(x) & r.preimage(x);
    if (*cluster.first() != x) continue;
    reps.push_back(x);
    unsigned prev = x;
    cluster.for_each([&](unsigned y) {
      if (y == x) return;
      out << "  " << quoted(names[prev]) << " -> " << quoted(names[y]) << " [dir=none];\n";
      prev = y;
    });
  }
  auto strictly_below = [&](unsigned a, unsigned b) {
    return r.contains(a, b) && !r.contains(b, a);
  };
  for (unsigned a : reps)
    for (unsigned b : reps) {
      if (!strictly_below(a, b)) continue;
      bool covered = true;
      for (unsigned c : reps)
        if (strictly_below(a, c) && strictly_below(c, b)) covered = false;
      if (covered) out << "  " << quoted(names[a]) << " -> " << quoted(names[b]) << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::string to_dot(const S52Frame &f) {
  std::ostringstream out;
  const auto &names = f.names();
  out << "graph s52 {\n  node [shape=point, xlabel=\"\\N\"];\n";
  for (unsigned b = 0; b < f.e2().block_count(); ++b) {
    out << "  subgraph cluster_e2_" << b << " {\n    style=dotted;\n";
    f.e2().blocks()[b].for_each([&](unsigned x) { out << "    " << quoted(names[x]) << ";\n"; });
    out << "  }\n";
  }
  for (const auto &block : f.e1().blocks()) {
    unsigned prev = *block.first();
    block.for_each([&](unsigned y) {
      if (y == prev) return;
      out << "  " << quoted(names[prev]) << " -- " << quoted(names[y]) << ";\n";
      prev = y;
    });
  }
  out << "}\n";
  return out.str();
}

}  // namespace ms4wb::io
