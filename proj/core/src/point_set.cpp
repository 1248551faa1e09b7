//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/point_set.hpp"

#include <cassert>
#include <string>

#include "ms4wb/error.hpp"

namespace ms4wb {

PointSet::PointSet(unsigned width, std::uint64_t bits)
    : bits_(bits & mask(width)), width_(width) {
  if (width > kMaxPoints)
    throw InputError("frames are limited to " + std::to_string(kMaxPoints) +
                     " points, got " + std::to_string(width));
}

PointSet PointSet::singleton(unsigned width, unsigned point) {
  PointSet s(width);
  s.insert(point);
  return s;
}

std::optional<unsigned> PointSet::first() const {
  if (bits_ == 0) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(bits_));
}

PointSet &PointSet::operator&=(const PointSet &o) {
  assert(width_ == o.width_);
  bits_ &= o.bits_;
  return *this;
}

PointSet &PointSet::operator|=(const PointSet &o) {
  assert(width_ == o.width_);
  bits_ |= o.bits_;
  return *this;
}

PointSet &PointSet::operator-=(const PointSet &o) {
  assert(width_ == o.width_);
  bits_ &= ~o.bits_;
  return *this;
}

std::vector<unsigned> PointSet::members() const {
  std::vector<unsigned> out;
  out.reserve(count());
  for_each([&](unsigned x) { out.push_back(x); });
  return out;
}

}  // namespace ms4wb
