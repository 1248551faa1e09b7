//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_TESTS_SUPPORT_HPP_
#define MS4WB_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ms4wb/ms4wb.hpp"

namespace ms4wb::testing {

// Naive subalgebra closure: worklist over explicit sets with complement,
// pairwise intersection and every operator. No partition refinement.
inline std::set<std::uint64_t> naive_closure(
    unsigned n, const std::vector<PointSet> &gens,
    const std::vector<std::function<PointSet(const PointSet &)>> &ops,
    std::size_t limit = 1u << 14) {
  const std::uint64_t full = PointSet::mask(n);
  std::set<std::uint64_t> family{0, full};
  std::vector<std::uint64_t> work{0, full};
  for (const auto &g : gens)
    if (family.insert(g.bits()).second) work.push_back(g.bits());
  while (!work.empty() && family.size() <= limit) {
    std::uint64_t a = work.back();
    work.pop_back();
    std::vector<std::uint64_t> cand{~a & full};
    for (const auto &op : ops) cand.push_back(op(PointSet(n, a)).bits());
    for (std::uint64_t b : family) cand.push_back(a & b);
    for (std::uint64_t c : cand)
      if (family.insert(c).second) work.push_back(c);
  }
  return family;
}

inline std::vector<std::function<PointSet(const PointSet &)>> frame_ops(const Frame &f) {
  return {[&f](const PointSet &s) { return f.dia(s); },
          [&f](const PointSet &s) { return f.ex(s); }};
}

inline std::vector<std::function<PointSet(const PointSet &)>> s52_ops(const S52Frame &f) {
  return {[&f](const PointSet &s) { return f.ex1(s); },
          [&f](const PointSet &s) { return f.ex2(s); }};
}

// Brute-force composition: (a then b)(x) = b(a(x)).
inline bool naive_contains_composite(const Relation &a, const Relation &b, unsigned x,
                                     unsigned y) {
  for (unsigned z = 0; z < a.size(); ++z)
    if (a.contains(x, z) && b.contains(z, y)) return true;
  return false;
}

inline Frame chain3() {
  return Frame::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
}

inline std::string fixture_path(const std::string &name) {
  return std::string(MS4WB_FIXTURE_DIR) + "/" + name;
}

}  // namespace ms4wb::testing

#endif  // MS4WB_TESTS_SUPPORT_HPP_
