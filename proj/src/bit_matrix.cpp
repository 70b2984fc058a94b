#include "revlab/bit_matrix.hpp"

#include <bit>
#include <deque>

namespace revlab {

BitMatrix::BitMatrix(std::size_t n)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

void BitMatrix::set_row(std::size_t row) {
  for (std::size_t col = 0; col < n_; ++col) set(row, col);
}

std::vector<std::size_t> BitMatrix::row_members(std::size_t r) const {
  std::vector<std::size_t> out;
  auto words = row(r);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t word = words[w]; word != 0; word &= word - 1) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
    }
  }
  return out;
}

BitMatrix BitMatrix::reflexive_transitive_closure() const {
  BitMatrix closure = *this;
  for (std::size_t i = 0; i < n_; ++i) closure.set(i, i);
  for (std::size_t k = 0; k < n_; ++k) {
    const std::uint64_t* via = closure.bits_.data() + k * words_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == k || !closure.test(i, k)) continue;
      std::uint64_t* target = closure.bits_.data() + i * words_;
      for (std::size_t w = 0; w < words_; ++w) target[w] |= via[w];
    }
  }
  return closure;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c : row_members(r)) out.set(c, r);
  }
  return out;
}

std::optional<std::vector<std::size_t>> BitMatrix::shortest_path(
    std::size_t from, std::size_t to) const {
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent(n_, kUnseen);
  std::deque<std::size_t> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == to) {
      std::vector<std::size_t> path{to};
      for (std::size_t v = to; v != from; v = parent[v]) path.push_back(parent[v]);
      return std::vector<std::size_t>(path.rbegin(), path.rend());
    }
    for (std::size_t v : row_members(u)) {
      if (parent[v] == kUnseen) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  return std::nullopt;
}

}  // namespace revlab
