#include "revlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "revlab/error.hpp"

namespace revlab {

namespace {

using nlohmann::json;

int read_size(const json& doc) {
  if (!doc.is_object()) throw FormatError("expected a JSON object");
  if (!doc.contains("size") || !doc["size"].is_number_integer()) {
    throw FormatError("missing integer field \"size\"");
  }
  const auto n = doc["size"].get<long long>();
  if (n < 1 || n > kHardMaxUniverse) {
    throw FormatError("\"size\" must lie in [1, " + std::to_string(kHardMaxUniverse) +
                      "], got " + std::to_string(n));
  }
  return static_cast<int>(n);
}

std::vector<std::string> read_labels(const json& doc) {
  std::vector<std::string> labels;
  if (!doc.contains("labels")) return labels;
  if (!doc["labels"].is_array()) throw FormatError("\"labels\" must be an array");
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw FormatError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return labels;
}

SubsetMask read_set(const json& value, int n, const std::string& what) {
  if (!value.is_array()) throw FormatError(what + " must be an array of indices");
  SubsetMask m;
  for (const auto& e : value) {
    if (!e.is_number_integer()) throw FormatError(what + " holds a non-integer");
    const auto idx = e.get<long long>();
    if (idx < 0 || idx >= n) {
      throw FormatError(what + " index " + std::to_string(idx) + " out of range");
    }
    const auto s = SubsetMask::singleton(static_cast<int>(idx));
    if (m.intersects(s)) {
      throw FormatError(what + " repeats index " + std::to_string(idx));
    }
    m = m | s;
  }
  if (m.empty()) throw FormatError(what + " must be nonempty");
  return m;
}

Universe read_universe(const json& doc) {
  try {
    return Universe(read_size(doc), read_labels(doc));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
}

}  // namespace

json mask_to_json(SubsetMask m) { return elements(m); }

json distance_to_json(const PseudoDistance& d) {
  json doc;
  doc["size"] = d.size();
  if (d.universe().has_labels()) doc["labels"] = d.universe().labels();
  json rows = json::array();
  for (int a = 0; a < d.size(); ++a) {
    json row = json::array();
    for (int b = 0; b < d.size(); ++b) row.push_back(d(a, b));
    rows.push_back(std::move(row));
  }
  doc["rank"] = std::move(rows);
  return doc;
}

PseudoDistance distance_from_json(const json& doc) {
  Universe universe = read_universe(doc);
  const int n = universe.size();
  if (!doc.contains("rank") || !doc["rank"].is_array() ||
      static_cast<int>(doc["rank"].size()) != n) {
    throw FormatError("\"rank\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<Rank> ranks;
  ranks.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : doc["rank"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw FormatError("every rank row must hold " + std::to_string(n) + " entries");
    }
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0 ||
          v.get<long long>() > static_cast<long long>(UINT32_MAX)) {
        throw FormatError("ranks must be nonnegative 32-bit integers");
      }
      ranks.push_back(static_cast<Rank>(v.get<long long>()));
    }
  }
  return PseudoDistance(std::move(universe), std::move(ranks));
}

json operator_to_json(const SetOperator& op) {
  json doc;
  doc["size"] = op.size();
  if (op.universe().has_labels()) doc["labels"] = op.universe().labels();
  json entries = json::array();
  const int m = op.family_size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      entries.push_back({{"A", mask_to_json(subset_at(i))},
                         {"B", mask_to_json(subset_at(j))},
                         {"result", mask_to_json(op(subset_at(i), subset_at(j)))}});
    }
  }
  doc["entries"] = std::move(entries);
  return doc;
}

SetOperator operator_from_json(const json& doc, SizeLimit limit) {
  Universe universe = read_universe(doc);
  const int n = universe.size();
  SetOperator::check_size(n, limit);
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw FormatError("missing array field \"entries\"");
  }
  const std::size_t m = static_cast<std::size_t>(subset_count(n));
  std::vector<SubsetMask> table(m * m);
  std::size_t position = 0;
  for (const auto& entry : doc["entries"]) {
    const std::string where = "entry " + std::to_string(position++);
    if (!entry.is_object() || !entry.contains("A") || !entry.contains("B") ||
        !entry.contains("result")) {
      throw FormatError(where + " needs fields A, B and result");
    }
    const SubsetMask a = read_set(entry["A"], n, where + " A");
    const SubsetMask b = read_set(entry["B"], n, where + " B");
    const SubsetMask r = read_set(entry["result"], n, where + " result");
    SubsetMask& slot = table[subset_index(a) * m + subset_index(b)];
    if (!slot.empty()) {
      throw FormatError(where + " duplicates pair " + to_string(a) + " | " + to_string(b));
    }
    slot = r;
  }
  for (std::size_t k = 0; k < table.size(); ++k) {
    if (table[k].empty()) {
      throw FormatError("no entry for pair " + to_string(subset_at(k / m)) + " | " +
                        to_string(subset_at(k % m)));
    }
  }
  return SetOperator(std::move(universe), std::move(table), limit);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::string& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

}  // namespace revlab
