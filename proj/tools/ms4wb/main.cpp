//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

// ms4wb command-line tool. Reports go to stdout as JSON (frames and DOT
// documents are emitted bare so they can be piped), summaries to stderr.
//
// Exit codes: 0 all checks passed, 1 a requested check failed, 2 usage or
// input error, 3 internal invariant violation.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "ms4wb/ms4wb.hpp"

namespace {

using ms4wb::AnyFrame;
using ms4wb::Frame;
using ms4wb::PointSet;
using ms4wb::S52Frame;
using ms4wb::io::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kInvariant = 3;

struct Output {
  Json doc;
  std::string text;  // used instead of doc when set (DOT)
  std::ostringstream summary;
  int code = kOk;
};

struct Loaded {
  AnyFrame frame;
  std::map<std::string, PointSet> sets;
};

const std::vector<std::string> &names_of(const AnyFrame &f) {
  return std::visit([](const auto &g) -> const std::vector<std::string> & { return g.names(); },
                    f);
}

std::optional<int> parse_int(const std::string &text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

int require_int(const std::string &text, const char *what) {
  auto v = parse_int(text);
  if (!v) throw ms4wb::InputError(std::string(what) + " must be an integer, got '" + text + "'");
  return *v;
}

// "corpus:name" or "corpus:name:m" loads a builtin; anything else is a path
// to a frame document ("-" for stdin). Documents may carry named companion
// sets under "sets".
Loaded load(const std::string &arg) {
  constexpr std::string_view kPrefix = "corpus:";
  if (arg.rfind(kPrefix, 0) == 0) {
    std::string spec = arg.substr(kPrefix.size());
    std::optional<int> m;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
      m = require_int(spec.substr(colon + 1), "builtin parameter");
      spec.resize(colon);
    }
    auto b = ms4wb::builtin(spec, m);
    return {b.frame, b.sets};
  }
  Json doc = ms4wb::io::read_json(arg);
  Loaded out{ms4wb::io::any_frame_from_json(doc), {}};
  if (auto it = doc.find("sets"); it != doc.end()) {
    if (!it->is_object()) throw ms4wb::InputError("'sets' must map names to point lists");
    for (const auto &[name, value] : it->items())
      out.sets.emplace(name, ms4wb::io::set_from_json(names_of(out.frame), value));
  }
  return out;
}

Frame require_ms4(const Loaded &l, const char *command) {
  if (auto f = std::get_if<Frame>(&l.frame)) return *f;
  throw ms4wb::InputError(std::string(command) + " expects an MS4 frame");
}

S52Frame require_s52(const Loaded &l, const char *command) {
  if (auto f = std::get_if<S52Frame>(&l.frame)) return *f;
  throw ms4wb::InputError(std::string(command) + " expects an S5_2 frame");
}

// Inline JSON when the text starts with '[' or '{', otherwise a file path.
Json json_argument(const std::string &text) {
  auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{'))
    return ms4wb::io::parse_json(text);
  return ms4wb::io::read_json(text);
}

// A set is a JSON list of names, "@name" for a companion set, or a
// comma-separated list of names (empty for the empty set).
PointSet parse_set(const std::vector<std::string> &names,
                   const std::map<std::string, PointSet> &companions, const std::string &text) {
  if (!text.empty() && text[0] == '[')
    return ms4wb::io::set_from_json(names, ms4wb::io::parse_json(text));
  if (!text.empty() && text[0] == '@') {
    auto it = companions.find(text.substr(1));
    if (it == companions.end())
      throw ms4wb::InputError("no companion set '" + text.substr(1) + "'");
    return it->second;
  }
  Json list = Json::array();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) list.push_back(item);
  return ms4wb::io::set_from_json(names, list);
}

std::vector<PointSet> parse_sets(const std::vector<std::string> &names,
                                 const std::map<std::string, PointSet> &companions,
                                 const std::vector<std::string> &texts) {
  std::vector<PointSet> out;
  for (const auto &t : texts) out.push_back(parse_set(names, companions, t));
  return out;
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// "2,3,5" or "1..5".
std::vector<int> parse_params(const std::string &text) {
  if (auto dots = text.find(".."); dots != std::string::npos) {
    int lo = require_int(text.substr(0, dots), "range start");
    int hi = require_int(text.substr(dots + 2), "range end");
    if (hi < lo) throw ms4wb::InputError("empty parameter range '" + text + "'");
    std::vector<int> out;
    for (int m = lo; m <= hi; ++m) out.push_back(m);
    return out;
  }
  std::vector<int> out;
  for (const auto &item : split(text, ',')) out.push_back(require_int(item, "parameter"));
  return out;
}

std::string set_text(const std::vector<std::string> &names, const PointSet &s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](unsigned x) {
    if (!first) out += ",";
    out += names[x];
    first = false;
  });
  return out + "}";
}

std::string valuation_text(const std::vector<std::string> &names, const ms4wb::Valuation &v) {
  std::string out;
  for (const auto &[var, set] : v) {
    if (!out.empty()) out += " ";
    out += "V(" + var + ")=" + set_text(names, set);
  }
  return out;
}

Json begin(const char *command) {
  Json j;
  j["command"] = command;
  return j;
}

// --- subcommands -----------------------------------------------------------

void cmd_check(Output &o, const std::string &path, const std::string &axioms) {
  Loaded l = load(path);
  const auto &names = names_of(l.frame);
  const auto budget = ms4wb::valuation_budget_from_environment();
  o.doc = begin("check");
  o.doc["frame"] = path;
  Json results = Json::array();
  bool all = true;
  for (const auto &item : split(axioms, ',')) {
    auto spec = ms4wb::parse_axiom_spec(item);
    auto phi = ms4wb::axiom(spec);
    auto r = std::visit([&](const auto &f) { return ms4wb::is_valid(f, phi, budget); }, l.frame);
    auto fast = std::visit([&](const auto &f) { return ms4wb::relational_verdict(f, spec); },
                           l.frame);
    Json entry;
    entry["axiom"] = item;
    entry["formula"] = ms4wb::to_string(phi);
    Json verdict = ms4wb::io::validity_to_json(names, r);
    for (auto &[k, v] : verdict.items()) entry[k] = v;
    if (fast) {
      entry["relational"] = *fast;
      if (*fast != r.valid) {
        o.code = kInvariant;
        o.summary << item << ": relational characterization disagrees with valuation sweep\n";
      }
    }
    results.push_back(entry);
    all = all && r.valid;
    o.summary << item << ": "
              << (r.valid ? std::string("valid")
                          : "counterexample " + valuation_text(names, *r.counterexample))
              << "\n";
  }
  o.doc["results"] = std::move(results);
  o.doc["passed"] = all;
  if (o.code == kOk && !all) o.code = kCheckFailed;
}

void cmd_classify(Output &o, const std::string &path) {
  Loaded l = load(path);
  o.doc = begin("classify");
  if (auto f = std::get_if<Frame>(&l.frame)) {
    auto c = ms4wb::classify(*f);
    o.doc["type"] = "ms4";
    o.doc["result"] = ms4wb::io::classification_to_json(*f, c);
    o.summary << "depth " << c.depth << ", "
              << (c.is_simple ? "simple" : c.is_si ? "s.i., not simple" : "not s.i.") << "\n";
  } else {
    const auto &g = std::get<S52Frame>(l.frame);
    auto a = ms4wb::analyze_s52(g);
    o.doc["type"] = "s52";
    o.doc["result"] = ms4wb::io::s52_analysis_to_json(g, a);
    o.summary << "transitivity degree " << a.transitivity_degree << ", "
              << (a.is_simple ? "simple" : a.is_si ? "s.i., not simple" : "not s.i.") << "\n";
  }
}

void cmd_validity(Output &o, const std::string &path, const std::string &formula) {
  Loaded l = load(path);
  const auto &names = names_of(l.frame);
  auto phi = ms4wb::parse(formula);
  auto budget = ms4wb::valuation_budget_from_environment();
  auto r = std::visit([&](const auto &f) { return ms4wb::is_valid(f, phi, budget); }, l.frame);
  o.doc = begin("validity");
  o.doc["formula"] = ms4wb::to_string(phi);
  o.doc["result"] = ms4wb::io::validity_to_json(names, r);
  o.summary << (r.valid ? std::string("valid")
                        : "counterexample " + valuation_text(names, *r.counterexample))
            << "\n";
  if (!r.valid) o.code = kCheckFailed;
}

void cmd_eval(Output &o, const std::string &path, const std::string &formula,
              const std::string &valuation) {
  Loaded l = load(path);
  const auto &names = names_of(l.frame);
  auto phi = ms4wb::parse(formula);
  ms4wb::Valuation v;
  if (!valuation.empty()) v = ms4wb::io::valuation_from_json(names, json_argument(valuation));
  auto value = std::visit([&](const auto &f) { return ms4wb::eval(f, phi, v); }, l.frame);
  o.doc = begin("eval");
  o.doc["formula"] = ms4wb::to_string(phi);
  o.doc["value"] = ms4wb::io::set_to_json(names, value);
  o.doc["true_everywhere"] = value.is_full();
  o.summary << set_text(names, value) << "\n";
}

void cmd_congruences(Output &o, const std::string &path) {
  Frame f = require_ms4(load(path), "congruences");
  auto r = ms4wb::congruences(f);
  o.doc = begin("congruences");
  o.doc["result"] = ms4wb::io::congruences_to_json(f.names(), r);
  o.summary << r.q_upsets.size() << " congruences, " << r.h_black_filter_count
            << " filters of the Q-upset lattice\n";
  if (!r.sets_agree || !r.count_agrees) {
    o.code = kInvariant;
    o.summary << "congruence descriptions disagree\n";
  }
}

ms4wb::OperatorSet parse_ops(const std::string &text) {
  ms4wb::OperatorSet ops;
  for (const auto &item : split(text, ',')) ops.push_back(ms4wb::parse_op(item));
  return ops;
}

void cmd_subalgebra(Output &o, const std::string &path, const std::vector<std::string> &gens,
                    const std::string &ops) {
  Loaded l = load(path);
  const auto &names = names_of(l.frame);
  auto sets = parse_sets(names, l.sets, gens);
  auto r = std::visit(
      [&](const auto &f) {
        return ops.empty() ? ms4wb::generated_subalgebra(f, sets)
                           : ms4wb::generated_subalgebra(f, sets, parse_ops(ops));
      },
      l.frame);
  o.doc = begin("subalgebra");
  o.doc["result"] = ms4wb::io::subalgebra_to_json(names, r);
  o.summary << r.atom_count << " atoms";
  if (r.atom_count < 64) o.summary << ", " << r.size << " elements";
  o.summary << "\n";
  if (!r.kernel_correct) {
    o.code = kInvariant;
    o.summary << "subalgebra kernel is not a correct partition\n";
  }
}

void cmd_generating(Output &o, const std::string &path, const std::vector<std::string> &gens) {
  Loaded l = load(path);
  const auto &names = names_of(l.frame);
  auto sets = parse_sets(names, l.sets, gens);
  auto v = std::visit([&](const auto &f) { return ms4wb::is_generating(f, sets); }, l.frame);
  o.doc = begin("generating");
  o.doc["result"] = ms4wb::io::generating_to_json(names, v);
  o.summary << (v.generating ? "generating" : "not generating");
  if (v.method_b_skipped) o.summary << " (partition search skipped above the size cap)";
  o.summary << "\n";
  if (!v.methods_agree) {
    o.code = kInvariant;
    o.summary << "kernel and partition search disagree\n";
  } else if (!v.generating) {
    o.code = kCheckFailed;
  }
}

Json failures_to_json(const std::vector<std::string> &names,
                      const std::vector<ms4wb::IdentityFailure> &failures) {
  Json out = Json::array();
  for (const auto &f : failures)
    out.push_back({{"identity", f.identity},
                   {"a", ms4wb::io::set_to_json(names, f.a)},
                   {"b", ms4wb::io::set_to_json(names, f.b)}});
  return out;
}

void cmd_fmp(Output &o, const std::string &path, const std::vector<std::string> &gens,
             const std::string &formula, const std::string &valuation) {
  Loaded l = load(path);
  Frame f = require_ms4(l, "fmp");
  const auto &names = f.names();
  o.doc = begin("fmp");
  if (!formula.empty()) {
    auto phi = ms4wb::parse(formula);
    ms4wb::Valuation v;
    if (!valuation.empty()) v = ms4wb::io::valuation_from_json(names, json_argument(valuation));
    auto t = ms4wb::falsification_transfer(f, phi, v);
    Json rows = Json::array();
    for (std::size_t i = 0; i < t.subterms.size(); ++i)
      rows.push_back({{"subterm", t.subterms[i]},
                      {"frame", ms4wb::io::set_to_json(names, t.frame_values[i])},
                      {"algebra", ms4wb::io::set_to_json(names, t.algebra_values[i])}});
    o.doc["formula"] = ms4wb::to_string(phi);
    o.doc["subterms"] = std::move(rows);
    o.doc["algebra_size"] = t.algebra_size;
    o.doc["values_identical"] = t.values_identical;
    o.doc["still_falsified"] = t.still_falsified;
    o.doc["identities_hold"] = t.identities_hold;
    o.summary << "transfer into a " << t.algebra_size << "-element algebra: "
              << (t.values_identical && t.still_falsified && t.identities_hold ? "ok" : "FAILED")
              << "\n";
    if (!(t.values_identical && t.still_falsified && t.identities_hold)) o.code = kInvariant;
    return;
  }
  auto r = ms4wb::fmp_restrict(f, parse_sets(names, l.sets, gens));
  o.doc["b_prime"] = ms4wb::io::subalgebra_to_json(names, r.b_prime);
  Json fixpoints = Json::array();
  for (const auto &s : r.dia_fixpoints) fixpoints.push_back(ms4wb::io::set_to_json(names, s));
  o.doc["dia_fixpoints"] = std::move(fixpoints);
  Json primed = Json::array();
  for (const auto &a : r.algebra.carrier())
    primed.push_back({ms4wb::io::set_to_json(names, a),
                      ms4wb::io::set_to_json(names, r.algebra.dia(a))});
  o.doc["dia_prime"] = std::move(primed);
  o.doc["dual_frame"] = ms4wb::io::to_json(ms4wb::atom_frame(r.algebra, &names));
  o.doc["failures"] = failures_to_json(names, r.failures);
  o.doc["agreement_holds"] = r.agreement_holds;
  o.doc["reduct_holds"] = r.reduct_holds;
  bool ok = r.failures.empty() && r.agreement_holds && r.reduct_holds;
  o.summary << "algebra of " << r.algebra.size() << " elements; identities "
            << (ok ? "hold" : "FAIL") << "\n";
  if (!ok) o.code = kInvariant;
}

void cmd_translate(Output &o, const std::string &path) {
  S52Frame f = require_s52(load(path), "translate");
  Frame t = ms4wb::translate(f);
  o.doc = ms4wb::io::to_json(t);
  o.summary << f.size() << " points translated into " << t.size() << " points\n";
}

void cmd_lift(Output &o, const std::string &path, const std::string &partition) {
  S52Frame f = require_s52(load(path), "lift");
  auto k = ms4wb::io::partition_from_json(f.names(), json_argument(partition));
  o.doc = begin("lift");
  auto verdict = ms4wb::is_correct_partition(f, k);
  o.doc["correctness"] = ms4wb::io::correctness_to_json(f.names(), verdict, "E1", "E2");
  if (!verdict.correct) {
    o.summary << "partition is not correct\n";
    o.code = kCheckFailed;
    return;
  }
  Frame t = ms4wb::translate(f);
  auto k_hat = ms4wb::lift_partition(f, k);
  o.doc["K_hat"] = ms4wb::io::partition_to_json(t.names(), k_hat);
  std::optional<bool> commutes;
  if (t.size() <= ms4wb::kDefaultIsomorphismCap) {
    auto lhs = ms4wb::translate(ms4wb::quotient(f, k));
    auto rhs = ms4wb::quotient(t, k_hat);
    commutes = ms4wb::find_isomorphism(lhs, rhs).has_value();
  }
  o.doc["quotient_commutes"] = commutes ? Json(*commutes) : Json(nullptr);
  o.summary << "lifted to " << k_hat.block_count() << " blocks";
  if (commutes) o.summary << "; quotient " << (*commutes ? "commutes" : "DOES NOT commute");
  o.summary << "\n";
  if (commutes && !*commutes) o.code = kInvariant;
}

void cmd_relativize(Output &o, const std::string &path, unsigned layer) {
  Loaded l = load(path);
  ms4wb::Relativization r;
  std::vector<std::string> names;
  if (auto f = std::get_if<Frame>(&l.frame)) {
    r = ms4wb::relativize(*f, layer);
    names = f->names();
  } else {
    const auto &g = std::get<S52Frame>(l.frame);
    r = ms4wb::relativize(g, layer);
    names = ms4wb::translate(g).names();
  }
  std::vector<std::string> local;
  for (unsigned x : r.points) local.push_back(names[x]);
  Json dia = Json::array();
  for (unsigned x = 0; x < local.size(); ++x)
    r.dia_relation.image(x).for_each([&](unsigned y) {
      if (x != y) dia.push_back({local[x], local[y]});
    });
  auto algebra = ms4wb::relativized_algebra(r);
  o.doc = begin("relativize");
  o.doc["layer"] = layer;
  o.doc["points"] = local;
  o.doc["dia"] = std::move(dia);
  o.doc["ex"] = ms4wb::io::partition_to_json(local, r.ex_partition);
  o.doc["signature"] = ms4wb::signature_name(algebra.signature());
  o.doc["algebra_size"] = algebra.size();
  o.doc["matches_s52"] = r.matches_s52 ? Json(*r.matches_s52) : Json(nullptr);
  o.summary << "layer " << layer << ": " << local.size() << " points, " << algebra.size()
            << " elements";
  if (r.matches_s52) o.summary << (*r.matches_s52 ? ", matches E1/E2" : ", DOES NOT match E1/E2");
  o.summary << "\n";
  if (r.matches_s52 && !*r.matches_s52) o.code = kInvariant;
}

void cmd_transfer(Output &o, const std::string &path, const std::vector<std::string> &gens) {
  S52Frame f = require_s52(load(path), "transfer");
  Frame t = ms4wb::translate(f);
  auto r = ms4wb::subalgebra_transfer(f, parse_sets(t.names(), {}, gens));
  o.doc = begin("transfer");
  o.doc["result"] = ms4wb::io::transfer_to_json(t, f, r);
  o.summary << "K-hat " << (r.k_hat_within_l ? "is" : "is NOT") << " below L\n";
  if (!r.k_hat_within_l) o.code = kCheckFailed;
}

void cmd_quotient(Output &o, const std::string &path, const std::string &partition) {
  Loaded l = load(path);
  const auto &names = names_of(l.frame);
  auto k = ms4wb::io::partition_from_json(names, json_argument(partition));
  ms4wb::CorrectnessVerdict verdict;
  bool ms4 = std::holds_alternative<Frame>(l.frame);
  verdict = std::visit([&](const auto &f) { return ms4wb::is_correct_partition(f, k); }, l.frame);
  if (!verdict.correct) {
    o.doc = begin("quotient");
    o.doc["correctness"] =
        ms4wb::io::correctness_to_json(names, verdict, ms4 ? "R" : "E1", ms4 ? "E" : "E2");
    o.summary << "partition is not correct\n";
    o.code = kCheckFailed;
    return;
  }
  o.doc = std::visit([&](const auto &f) { return ms4wb::io::to_json(ms4wb::quotient(f, k)); },
                     l.frame);
  o.summary << names.size() << " points collapsed to " << k.block_count() << "\n";
}

void cmd_iso(Output &o, const std::string &first, const std::string &second) {
  Frame f = require_ms4(load(first), "iso");
  Frame g = require_ms4(load(second), "iso");
  auto map = ms4wb::find_isomorphism(f, g);
  o.doc = begin("iso");
  o.doc["isomorphic"] = map.has_value();
  if (map) {
    Json m = Json::object();
    for (unsigned x = 0; x < f.size(); ++x) m[f.name(x)] = g.name((*map)[x]);
    o.doc["map"] = std::move(m);
  } else {
    o.doc["map"] = nullptr;
  }
  o.summary << (map ? "isomorphic" : "not isomorphic") << "\n";
  if (!map) o.code = kCheckFailed;
}

void cmd_corpus_list(Output &o) {
  o.doc = Json::array();
  for (const auto &b : ms4wb::builtin_catalog()) {
    o.doc.push_back({{"name", b.name},
                     {"kind", b.kind},
                     {"parameter", b.parameter.empty() ? Json(nullptr) : Json(b.parameter)},
                     {"summary", b.summary}});
    o.summary << b.name << (b.parameter.empty() ? "" : "(" + b.parameter + ")") << "  "
              << b.summary << "\n";
  }
}

void cmd_corpus_emit(Output &o, const std::string &name, const std::string &m) {
  std::optional<int> parameter;
  if (!m.empty()) parameter = require_int(m, "builtin parameter");
  auto b = ms4wb::builtin(name, parameter);
  o.doc = ms4wb::io::to_json(b.frame);
  if (!b.sets.empty()) {
    Json sets = Json::object();
    for (const auto &[key, s] : b.sets) sets[key] = ms4wb::io::set_to_json(names_of(b.frame), s);
    o.doc["sets"] = std::move(sets);
  }
  o.summary << name << ": " << names_of(b.frame).size() << " points\n";
}

void cmd_probe(Output &o, const std::string &family, const std::string &params,
               unsigned max_points) {
  auto s = ms4wb::growth_probe(family, parse_params(params), max_points);
  o.doc = begin("probe");
  o.doc["result"] = ms4wb::io::growth_to_json(s);
  o.summary << family << ":";
  for (std::size_t i = 0; i < s.parameters.size() && i < s.atoms.size(); ++i)
    o.summary << " " << s.parameters[i] << "->2^" << s.atoms[i];
  o.summary << (s.strictly_increasing ? " (strictly increasing)" : "")
            << (s.truncated ? " (truncated)" : "") << "\n";
}

void cmd_chain(Output &o, const std::string &path, const std::string &g, const std::string &d,
               int n) {
  Loaded l = load(path);
  Frame f = require_ms4(l, "chain");
  auto gs = parse_set(f.names(), l.sets, g);
  auto ds = parse_set(f.names(), l.sets, d);
  unsigned n_max = n >= 0 ? static_cast<unsigned>(n) : 4 * f.size();
  auto c = ms4wb::sn_chain(f, gs, ds, n_max);
  o.doc = begin("chain");
  Json sets = Json::array();
  for (const auto &s : c.sets) sets.push_back(ms4wb::io::set_to_json(f.names(), s));
  o.doc["n_max"] = n_max;
  o.doc["sets"] = std::move(sets);
  o.doc["distinct"] = c.distinct;
  o.summary << c.distinct << " distinct sets among s_0..s_" << n_max << "\n";
}

void cmd_enumerate(Output &o, unsigned n, const std::string &kind, bool count_only) {
  ms4wb::FrameKind k;
  if (kind == "ms4") k = ms4wb::FrameKind::kMs4;
  else if (kind == "s52") k = ms4wb::FrameKind::kS52;
  else throw ms4wb::InputError("kind must be 'ms4' or 's52'");
  std::uint64_t count = 0;
  Json frames = Json::array();
  auto add = [&](const auto &f) {
    ++count;
    if (!count_only) frames.push_back(ms4wb::io::to_json(f));
  };
  if (k == ms4wb::FrameKind::kMs4) ms4wb::for_each_ms4_frame(n, add);
  else ms4wb::for_each_s52_frame(n, add);
  o.doc = begin("enumerate");
  o.doc["n"] = n;
  o.doc["kind"] = kind;
  o.doc["count"] = count;
  if (!count_only) o.doc["frames"] = std::move(frames);
  o.summary << count << " labeled " << kind << " frames on " << n << " points\n";
}

void cmd_dot(Output &o, const std::string &path) {
  Loaded l = load(path);
  o.text = std::visit([](const auto &f) { return ms4wb::io::to_dot(f); }, l.frame);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Finite-frame workbench for monadic S4 and related bimodal logics", "ms4wb"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress the summary on stderr");

  Output out;
  std::function<void()> action;

  std::string frame, frame2, formula, axioms, valuation, partition, ops, family, params = "1..5";
  std::string g_set = "@g", d_set = "@d", kind = "ms4", name, parameter;
  std::vector<std::string> gens;
  unsigned layer = 2, max_points = ms4wb::PointSet::kMaxPoints, points = 0;
  int n_max = -1;
  bool count_only = false;

  auto frame_arg = [&](CLI::App *sub) {
    sub->add_option("frame", frame, "Frame document, '-' for stdin, or corpus:<name>[:m]")
        ->required();
  };

  auto *check = app.add_subcommand("check", "Check axioms from the registry on a frame");
  frame_arg(check);
  check->add_option("--axioms", axioms, "Comma-separated axiom names, with name:k parameters")
      ->required();
  check->callback([&] { action = [&] { cmd_check(out, frame, axioms); }; });

  auto *classify = app.add_subcommand("classify", "Depth, layers, roots, s.i. and simplicity");
  frame_arg(classify);
  classify->callback([&] { action = [&] { cmd_classify(out, frame); }; });

  auto *validity = app.add_subcommand("validity", "Decide validity of a formula on a frame");
  frame_arg(validity);
  validity->add_option("formula", formula, "Formula text")->required();
  validity->callback([&] { action = [&] { cmd_validity(out, frame, formula); }; });

  auto *eval = app.add_subcommand("eval", "Evaluate a formula under a valuation");
  frame_arg(eval);
  eval->add_option("formula", formula, "Formula text")->required();
  eval->add_option("-V,--valuation", valuation, "Valuation JSON, inline or a file path");
  eval->callback([&] { action = [&] { cmd_eval(out, frame, formula, valuation); }; });

  auto *congr = app.add_subcommand("congruences", "Congruence lattice of the dual algebra");
  frame_arg(congr);
  congr->callback([&] { action = [&] { cmd_congruences(out, frame); }; });

  auto *sub = app.add_subcommand("subalgebra", "Subalgebra generated by point sets");
  frame_arg(sub);
  sub->add_option("-g,--gen", gens, "Generator: names 'a,b', a JSON list, or @companion")
      ->allow_extra_args(false);
  sub->add_option("--ops", ops, "Operators, e.g. dia,ex or blackdia,ex or ex1,ex2");
  sub->callback([&] { action = [&] { cmd_subalgebra(out, frame, gens, ops); }; });

  auto *gen = app.add_subcommand("generating", "Coloring test: do the sets generate F*?");
  frame_arg(gen);
  gen->add_option("-g,--gen", gens, "Generator: names 'a,b', a JSON list, or @companion")
      ->allow_extra_args(false);
  gen->callback([&] { action = [&] { cmd_generating(out, frame, gens); }; });

  auto *fmp = app.add_subcommand("fmp", "Finite algebra A_S, or falsification transfer");
  frame_arg(fmp);
  fmp->add_option("-g,--gen", gens, "Set S member: names 'a,b', a JSON list, or @companion")
      ->allow_extra_args(false);
  fmp->add_option("--formula", formula, "Falsified formula to transfer");
  fmp->add_option("-V,--valuation", valuation, "Valuation JSON, inline or a file path");
  fmp->callback([&] { action = [&] { cmd_fmp(out, frame, gens, formula, valuation); }; });

  auto *translate = app.add_subcommand("translate", "Translate an S5_2 frame to a layered frame");
  frame_arg(translate);
  translate->callback([&] { action = [&] { cmd_translate(out, frame); }; });

  auto *lift = app.add_subcommand("lift", "Lift a correct partition to the translation");
  frame_arg(lift);
  lift->add_option("-k,--partition", partition, "Partition JSON, inline or a file path")
      ->required();
  lift->callback([&] { action = [&] { cmd_lift(out, frame, partition); }; });

  auto *rel = app.add_subcommand("relativize", "Relative algebra on one layer");
  frame_arg(rel);
  rel->add_option("-l,--layer", layer, "Layer index (1 or 2)")->check(CLI::Range(1u, 64u));
  rel->callback([&] { action = [&] { cmd_relativize(out, frame, layer); }; });

  auto *transfer = app.add_subcommand("transfer", "Subalgebra transfer check for T(F)");
  frame_arg(transfer);
  transfer->add_option("-g,--gen", gens, "Generator over T(F): names or a JSON list")
      ->allow_extra_args(false);
  transfer->callback([&] { action = [&] { cmd_transfer(out, frame, gens); }; });

  auto *quot = app.add_subcommand("quotient", "Quotient by a correct partition");
  frame_arg(quot);
  quot->add_option("-k,--partition", partition, "Partition JSON, inline or a file path")
      ->required();
  quot->callback([&] { action = [&] { cmd_quotient(out, frame, partition); }; });

  auto *iso = app.add_subcommand("iso", "Find an isomorphism between two frames");
  frame_arg(iso);
  iso->add_option("other", frame2, "Second frame")->required();
  iso->callback([&] { action = [&] { cmd_iso(out, frame, frame2); }; });

  auto *corpus = app.add_subcommand("corpus", "Builtin frames");
  corpus->require_subcommand(1);
  corpus->fallthrough();
  auto *list = corpus->add_subcommand("list", "List builtin frames");
  list->callback([&] { action = [&] { cmd_corpus_list(out); }; });
  auto *emit = corpus->add_subcommand("emit", "Emit a builtin frame as JSON");
  emit->add_option("name", name, "Builtin name")->required();
  emit->add_option("m", parameter, "Size parameter");
  emit->callback([&] { action = [&] { cmd_corpus_emit(out, name, parameter); }; });

  auto *probe = app.add_subcommand("probe", "Generated-subalgebra growth over a family");
  probe->add_option("family", family, "et_grid, snake or three_layer")->required();
  probe->add_option("-p,--params", params, "Parameters: '2,4,6' or '1..5'");
  probe->add_option("--max-points", max_points, "Skip members larger than this");
  probe->callback([&] { action = [&] { cmd_probe(out, family, params, max_points); }; });

  auto *chain = app.add_subcommand("chain", "The recurrence s_{n+1} = E <> s_n - d");
  frame_arg(chain);
  chain->add_option("--g", g_set, "Start set (default @g)");
  chain->add_option("--d", d_set, "Removed set (default @d)");
  chain->add_option("-n,--n-max", n_max, "Last index (default 4 x points)");
  chain->callback([&] { action = [&] { cmd_chain(out, frame, g_set, d_set, n_max); }; });

  auto *enumerate = app.add_subcommand("enumerate", "All labeled frames on n points");
  enumerate->add_option("n", points, "Point count")->required();
  enumerate->add_option("--kind", kind, "ms4 or s52");
  enumerate->add_flag("--count-only", count_only, "Only report the count");
  enumerate->callback([&] { action = [&] { cmd_enumerate(out, points, kind, count_only); }; });

  auto *dot = app.add_subcommand("dot", "Graphviz rendering of a frame");
  frame_arg(dot);
  dot->callback([&] { action = [&] { cmd_dot(out, frame); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    action();
  } catch (const ms4wb::InvariantError &e) {
    std::cerr << "ms4wb: invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const ms4wb::Error &e) {
    std::cerr << "ms4wb: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "ms4wb: internal error: " << e.what() << "\n";
    return kInvariant;
  }

  if (!out.text.empty()) std::cout << out.text;
  else std::cout << out.doc.dump(2) << "\n";
  if (!quiet) std::cerr << out.summary.str();
  return out.code;
}
