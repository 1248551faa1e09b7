//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_SRC_REFINE_HPP_
#define MS4WB_SRC_REFINE_HPP_

#include <array>
#include <bit>
#include <cstdint>

namespace ms4wb::detail {

// Partition of at most 64 points as block masks, refined until the preimage
// of every block under every operator is a union of blocks. Operators are
// given as preimage columns: cols[x] = points that see x.
class MaskRefiner {
 public:
  explicit MaskRefiner(std::uint64_t universe) {
    if (universe != 0) blocks_[count_++] = universe;
  }

  void split(std::uint64_t s) {
    const unsigned before = count_;
    for (unsigned j = 0; j < before; ++j) {
      const std::uint64_t b = blocks_[j];
      const std::uint64_t in = b & s;
      if (in != 0 && in != b) {
        blocks_[j] = in;
        blocks_[count_++] = b & ~s;
      }
    }
  }

  // Returns the number of block images computed.
  template <typename Cols>
  unsigned stabilize(const Cols *const *ops, unsigned op_count) {
    std::array<unsigned char, 64> queued{};
    std::array<unsigned, 128> queue{};
    unsigned head = 0, tail = 0, steps = 0;
    auto push = [&](unsigned i) {
      if (!queued[i]) {
        queued[i] = 1;
        queue[tail++ % 128] = i;
      }
    };
    for (unsigned i = 0; i < count_; ++i) push(i);
    while (head != tail) {
      const unsigned i = queue[head++ % 128];
      queued[i] = 0;
      for (unsigned o = 0; o < op_count; ++o) {
        const Cols &cols = *ops[o];
        std::uint64_t img = 0;
        for (std::uint64_t rest = blocks_[i]; rest != 0; rest &= rest - 1)
          img |= cols[static_cast<unsigned>(std::countr_zero(rest))];
        ++steps;
        const unsigned before = count_;
        for (unsigned j = 0; j < before; ++j) {
          const std::uint64_t b = blocks_[j];
          const std::uint64_t in = b & img;
          if (in != 0 && in != b) {
            blocks_[j] = in;
            blocks_[count_] = b & ~img;
            push(j);
            push(count_);
            ++count_;
          }
        }
      }
    }
    return steps;
  }

  unsigned count() const { return count_; }
  std::uint64_t block(unsigned i) const { return blocks_[i]; }

  // Block index of every point of the universe.
  void labels(unsigned char *out) const {
    for (unsigned i = 0; i < count_; ++i)
      for (std::uint64_t rest = blocks_[i]; rest != 0; rest &= rest - 1)
        out[std::countr_zero(rest)] = static_cast<unsigned char>(i);
  }

 private:
  std::array<std::uint64_t, 64> blocks_{};
  unsigned count_ = 0;
};

}  // namespace ms4wb::detail

#endif  // MS4WB_SRC_REFINE_HPP_
