#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace revlab {

/// Absolute bound on the number of elements a universe may have.
inline constexpr int kHardMaxUniverse = 8;
/// Default bound for dense operator tables (31 subsets, 961 ordered pairs).
inline constexpr int kDefaultMaxUniverse = 5;
/// Bound for constructions that need a full bit-matrix closure over pairs.
inline constexpr int kMaxClosureUniverse = 6;

/// Size cap for dense tables. `from_env` honours REVLAB_MAX_SIZE.
struct SizeLimit {
  int max_universe = kDefaultMaxUniverse;

  static SizeLimit from_env();
  static SizeLimit checked(int max_universe);
};

/// A subset of a finite universe, one bit per element.
///
/// The empty mask is representable so that intersections can be formed
/// freely; functions that need a member of the nonempty family say so and
/// reject it.
struct SubsetMask {
  std::uint32_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint32_t b) : bits(b) {}

  static constexpr SubsetMask singleton(int element) {
    return SubsetMask{std::uint32_t{1} << element};
  }
  static constexpr SubsetMask full(int n) {
    return SubsetMask{(std::uint32_t{1} << n) - 1};
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(int element) const { return (bits >> element) & 1U; }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool subset_of(SubsetMask other) const {
    return (bits & ~other.bits) == 0;
  }
  constexpr bool intersects(SubsetMask other) const {
    return (bits & other.bits) != 0;
  }
  /// True when every element index is below `n`.
  constexpr bool fits(int n) const { return (bits >> n) == 0; }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask{a.bits | b.bits};
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask{a.bits & b.bits};
  }
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask{a.bits & ~b.bits};
  }
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) = default;
};

/// Number of nonempty subsets of an n-element universe.
constexpr int subset_count(int n) { return (1 << n) - 1; }

/// Position of a nonempty mask in the canonical (numeric) order of the family.
constexpr int subset_index(SubsetMask m) { return static_cast<int>(m.bits) - 1; }
constexpr SubsetMask subset_at(int index) {
  return SubsetMask{static_cast<std::uint32_t>(index + 1)};
}

std::vector<int> elements(SubsetMask m);
SubsetMask mask_of(const std::vector<int>& elements);

/// "{0,2,3}"
std::string to_string(SubsetMask m);

/// The carrier set: `size` elements with optional display names.
class Universe {
 public:
  explicit Universe(int size, std::vector<std::string> labels = {});

  int size() const { return size_; }
  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Display name; the element index when unlabeled.
  std::string label(int element) const;
  std::string describe(SubsetMask m) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  int size_;
  std::vector<std::string> labels_;
};

}  // namespace revlab
