#include "latcount/sequence_table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace latcount {

SequenceTable make_sequence_table(std::string label, std::size_t m,
                                  const std::optional<std::vector<BigCount>>& exact,
                                  const std::optional<std::vector<BigCount>>& bound) {
  SequenceTable table{std::move(label), m, {}};
  const std::size_t rows = std::max(exact ? exact->size() : 0, bound ? bound->size() : 0);
  for (std::size_t i = 0; i < rows; ++i) {
    SequenceRow row;
    row.n = i + 1;
    const double root = static_cast<double>(m * row.n);
    if (exact && i < exact->size()) {
      row.exact = (*exact)[i];
      row.c_exact = nth_root((*exact)[i], root);
    }
    if (bound && i < bound->size()) {
      row.bound = (*bound)[i];
      row.c_bound = nth_root((*bound)[i], root);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string format_fixed(double value, int decimals) {
  // nearbyint honours the default round-to-nearest-even mode.
  const double scale = std::pow(10.0, decimals);
  const double scaled = std::nearbyint(value * scale);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, scaled / scale);
  return buf;
}

std::string format_fixed4(double value) { return format_fixed(value, 4); }

std::string to_csv(const SequenceTable& table) {
  std::ostringstream out;
  out << "n,count,c,bound,c_bound\n";
  for (const auto& row : table.rows) {
    out << row.n << ',';
    if (row.exact) out << to_decimal(*row.exact);
    out << ',';
    if (row.c_exact) out << format_fixed4(*row.c_exact);
    out << ',';
    if (row.bound) out << to_decimal(*row.bound);
    out << ',';
    if (row.c_bound) out << format_fixed4(*row.c_bound);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const SequenceTable& table, const std::string& tool_version) {
  nlohmann::ordered_json doc;
  doc["base"] = table.base_label;
  doc["m"] = table.m;
  doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json r;
    r["n"] = row.n;
    if (row.exact) r["count"] = to_decimal(*row.exact);
    if (row.c_exact) r["c"] = format_fixed4(*row.c_exact);
    if (row.bound) r["bound"] = to_decimal(*row.bound);
    if (row.c_bound) r["c_bound"] = format_fixed4(*row.c_bound);
    doc["rows"].push_back(std::move(r));
  }
  doc["tool_version"] = tool_version;
  return doc.dump(2) + "\n";
}

std::string to_plot_csv(const SequenceTable& table) {
  std::ostringstream out;
  out << "n,c,c_bound\n";
  for (const auto& row : table.rows) {
    out << row.n << ',';
    if (row.c_exact) out << format_fixed(*row.c_exact, 6);
    out << ',';
    if (row.c_bound) out << format_fixed(*row.c_bound, 6);
    out << '\n';
  }
  return out.str();
}

}  // namespace latcount
