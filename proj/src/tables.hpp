#ifndef KNAPKIT_SRC_TABLES_HPP
#define KNAPKIT_SRC_TABLES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "knapkit/errors.hpp"

namespace knapkit::detail {

// One "item taken at this state" bit per (item, state) pair, used to rebuild
// witnesses from rolling one-layer DP arrays.
class ChoiceBits {
 public:
  ChoiceBits(std::size_t rows, std::size_t cols)
      : cols_(cols), bits_(rows * cols, false) {}

  void set(std::size_t row, std::size_t col) { bits_[row * cols_ + col] = true; }
  bool test(std::size_t row, std::size_t col) const {
    return bits_[row * cols_ + col];
  }

 private:
  std::size_t cols_;
  std::vector<bool> bits_;
};

// Mixed-radix linearization of residual-capacity tuples: digit i ranges over
// 0..capacities[i], stride of digit 0 is 1.
class CapacityGrid {
 public:
  explicit CapacityGrid(std::span<const Value> capacities) {
    std::uint64_t stride = 1;
    for (Value c : capacities) {
      radices_.push_back(static_cast<std::size_t>(c) + 1);
      strides_.push_back(static_cast<std::size_t>(stride));
      stride = saturating_mul(stride, static_cast<std::uint64_t>(c) + 1);
    }
    cells_ = stride;
  }

  // Total number of tuples, saturated on overflow.
  std::uint64_t cells() const { return cells_; }
  std::size_t dims() const { return radices_.size(); }
  std::size_t radix(std::size_t i) const { return radices_[i]; }
  std::size_t stride(std::size_t i) const { return strides_[i]; }
  std::size_t full_index() const { return static_cast<std::size_t>(cells_ - 1); }

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
  std::uint64_t cells_ = 1;
};

// Walks every index of a CapacityGrid from the last down to 0 while keeping
// the decoded digits in sync.
class DescendingGridCursor {
 public:
  explicit DescendingGridCursor(const CapacityGrid& grid) : grid_(grid) {
    digits_.resize(grid.dims());
    for (std::size_t i = 0; i < grid.dims(); ++i) digits_[i] = grid.radix(i) - 1;
    index_ = grid.full_index();
  }

  std::size_t index() const { return index_; }
  std::size_t digit(std::size_t i) const { return digits_[i]; }

  // Returns false once index 0 has been visited.
  bool advance() {
    if (index_ == 0) return false;
    --index_;
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] > 0) {
        --digits_[i];
        return true;
      }
      digits_[i] = grid_.radix(i) - 1;
    }
    return true;
  }

 private:
  const CapacityGrid& grid_;
  std::vector<std::size_t> digits_;
  std::size_t index_ = 0;
};

}  // namespace knapkit::detail

#endif  // KNAPKIT_SRC_TABLES_HPP
