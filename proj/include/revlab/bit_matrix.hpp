#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace revlab {

/// Square boolean matrix with 64-bit packed rows; used as the adjacency
/// structure of every relation in the library.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(std::size_t n);

  std::size_t size() const { return n_; }

  bool test(std::size_t row, std::size_t col) const {
    return (bits_[row * words_ + col / 64] >> (col % 64)) & 1U;
  }
  void set(std::size_t row, std::size_t col) {
    bits_[row * words_ + col / 64] |= std::uint64_t{1} << (col % 64);
  }
  void set_row(std::size_t row);

  std::span<const std::uint64_t> row(std::size_t r) const {
    return {bits_.data() + r * words_, words_};
  }

  /// Column indices set in `row`, ascending.
  std::vector<std::size_t> row_members(std::size_t row) const;

  /// Reflexive-transitive closure (bitset Warshall).
  BitMatrix reflexive_transitive_closure() const;
  BitMatrix transposed() const;

  /// Shortest path from -> ... -> to along set entries, both ends included.
  std::optional<std::vector<std::size_t>> shortest_path(std::size_t from,
                                                        std::size_t to) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace revlab
