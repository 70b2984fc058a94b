#include "revlab/subset.hpp"

#include <cstdlib>
#include <set>

#include "revlab/error.hpp"

namespace revlab {

SizeLimit SizeLimit::checked(int max_universe) {
  if (max_universe < 1 || max_universe > kHardMaxUniverse) {
    throw SizeLimitError("universe size cap must lie in [1, " +
                         std::to_string(kHardMaxUniverse) + "], got " +
                         std::to_string(max_universe));
  }
  return SizeLimit{max_universe};
}

SizeLimit SizeLimit::from_env() {
  const char* raw = std::getenv("REVLAB_MAX_SIZE");
  if (raw == nullptr || *raw == '\0') return SizeLimit{};
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (*end != '\0') {
    throw SizeLimitError(std::string("REVLAB_MAX_SIZE is not an integer: ") + raw);
  }
  return checked(static_cast<int>(value));
}

std::vector<int> elements(SubsetMask m) {
  std::vector<int> out;
  for (std::uint32_t bits = m.bits; bits != 0; bits &= bits - 1) {
    out.push_back(std::countr_zero(bits));
  }
  return out;
}

SubsetMask mask_of(const std::vector<int>& members) {
  SubsetMask m;
  for (int e : members) m = m | SubsetMask::singleton(e);
  return m;
}

std::string to_string(SubsetMask m) {
  std::string out = "{";
  bool first = true;
  for (int e : elements(m)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

Universe::Universe(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size < 1 || size > kHardMaxUniverse) {
    throw SizeLimitError("universe size must lie in [1, " +
                         std::to_string(kHardMaxUniverse) + "], got " +
                         std::to_string(size));
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != size) {
      throw FormatError("expected " + std::to_string(size) + " labels, got " +
                        std::to_string(labels_.size()));
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw FormatError("labels must be unique");
  }
}

std::string Universe::label(int element) const {
  return labels_.empty() ? std::to_string(element) : labels_[element];
}

std::string Universe::describe(SubsetMask m) const {
  std::string out = "{";
  bool first = true;
  for (int e : elements(m)) {
    if (!first) out += ',';
    out += label(e);
    first = false;
  }
  return out + "}";
}

}  // namespace revlab
