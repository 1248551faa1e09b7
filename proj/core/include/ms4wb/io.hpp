//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_IO_HPP_
#define MS4WB_IO_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ms4wb/algebra.hpp"
#include "ms4wb/corpus.hpp"
#include "ms4wb/formula.hpp"
#include "ms4wb/frame.hpp"
#include "ms4wb/s52.hpp"

namespace ms4wb::io {

using Json = nlohmann::ordered_json;

// Reads a whole file, or standard input for "-". Throws InputError.
std::string read_text(const std::string &path);
Json parse_json(const std::string &text);
Json read_json(const std::string &path);

// {"type":"ms4","points":[...],"R":[[x,y],...],"E":[[...],...],
//  "closure":true,"layers":{...}}. R is written without reflexive pairs.
Json to_json(const Frame &f);
Frame frame_from_json(const Json &j);

// {"type":"s52","points":[...],"E1":[[...]],"E2":[[...]]}
Json to_json(const S52Frame &f);
S52Frame s52_from_json(const Json &j);

// Dispatches on "type" (default "ms4").
AnyFrame any_frame_from_json(const Json &j);
Json to_json(const AnyFrame &f);

Json set_to_json(const std::vector<std::string> &names, const PointSet &s);
PointSet set_from_json(const std::vector<std::string> &names, const Json &j);

Json partition_to_json(const std::vector<std::string> &names, const Partition &k);
Partition partition_from_json(const std::vector<std::string> &names, const Json &j);

// {"p":["a","b"], ...}
Json valuation_to_json(const std::vector<std::string> &names, const Valuation &v);
Valuation valuation_from_json(const std::vector<std::string> &names, const Json &j);

Json classification_to_json(const Frame &f, const FrameClassification &c);
Json s52_analysis_to_json(const S52Frame &f, const S52Analysis &a);
Json subalgebra_to_json(const std::vector<std::string> &names, const SubalgebraReport &r);
Json congruences_to_json(const std::vector<std::string> &names, const CongruenceReport &r);
Json generating_to_json(const std::vector<std::string> &names, const GeneratingVerdict &v);
Json correctness_to_json(const std::vector<std::string> &names, const CorrectnessVerdict &v,
                         const char *first_relation, const char *second_relation);
Json validity_to_json(const std::vector<std::string> &names, const ValidityResult &r);
Json transfer_to_json(const Frame &translated, const S52Frame &f, const TransferReport &r);
Json growth_to_json(const GrowthSeries &s);

// Graphviz rendering: proper R-steps as arrows between clusters (Hasse
// edges only), R-clusters as undirected lines, E-classes as dotted boxes.
std::string to_dot(const Frame &f);
// E1 as solid undirected lines, E2-classes as dotted boxes.
std::string to_dot(const S52Frame &f);

}  // namespace ms4wb::io

#endif  // MS4WB_IO_HPP_
