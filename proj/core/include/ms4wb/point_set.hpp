//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_POINT_SET_HPP_
#define MS4WB_POINT_SET_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ms4wb {

/// A subset of the points of a finite frame, stored as a fixed-width bit mask.
///
/// Point i is bit i. Frames are capped at kMaxPoints points, so a single
/// 64-bit word holds every set. Binary operations require equal widths.
class PointSet {
 public:
  static constexpr unsigned kMaxPoints = 64;

  PointSet() = default;
  explicit PointSet(unsigned width, std::uint64_t bits = 0);

  static PointSet empty(unsigned width) { return PointSet(width); }
  static PointSet full(unsigned width) { return PointSet(width, mask(width)); }
  static PointSet singleton(unsigned width, unsigned point);

  static constexpr std::uint64_t mask(unsigned width) {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }

  unsigned width() const { return width_; }
  std::uint64_t bits() const { return bits_; }

  bool contains(unsigned point) const { return (bits_ >> point) & 1U; }
  void insert(unsigned point) { bits_ |= std::uint64_t{1} << point; }
  void erase(unsigned point) { bits_ &= ~(std::uint64_t{1} << point); }

  bool is_empty() const { return bits_ == 0; }
  bool is_full() const { return bits_ == mask(width_); }
  unsigned count() const { return static_cast<unsigned>(std::popcount(bits_)); }
  bool subset_of(const PointSet &other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const PointSet &other) const {
    return (bits_ & other.bits_) != 0;
  }
  std::optional<unsigned> first() const;

  PointSet complement() const { return PointSet(width_, ~bits_ & mask(width_)); }

  PointSet &operator&=(const PointSet &o);
  PointSet &operator|=(const PointSet &o);
  PointSet &operator-=(const PointSet &o);

  friend PointSet operator&(PointSet a, const PointSet &b) { return a &= b; }
  friend PointSet operator|(PointSet a, const PointSet &b) { return a |= b; }
  friend PointSet operator-(PointSet a, const PointSet &b) { return a -= b; }

  friend bool operator==(const PointSet &, const PointSet &) = default;
  friend std::strong_ordering operator<=>(const PointSet &a,
                                          const PointSet &b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

  template <typename Fn>
  void for_each(Fn &&fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1)
      fn(static_cast<unsigned>(std::countr_zero(rest)));
  }

  std::vector<unsigned> members() const;

 private:
  std::uint64_t bits_ = 0;
  unsigned width_ = 0;
};

}  // namespace ms4wb

template <>
struct std::hash<ms4wb::PointSet> {
  std::size_t operator()(const ms4wb::PointSet &s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits() * 0x9E3779B97F4A7C15ULL ^
                                      s.width());
  }
};

#endif  // MS4WB_POINT_SET_HPP_
