#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latcount/bigcount.hpp"

namespace latcount {

struct SequenceRow {
  std::size_t n = 0;
  std::optional<BigCount> exact;
  std::optional<double> c_exact;
  std::optional<BigCount> bound;
  std::optional<double> c_bound;
};

/// Per-n exact counts and lower bounds with their c-values for one base graph.
struct SequenceTable {
  std::string base_label;
  std::size_t m = 0;
  std::vector<SequenceRow> rows;
};

/// Builds rows n = 1..max(len) from whichever count columns are supplied.
/// c = count^(1/(m n)).
SequenceTable make_sequence_table(std::string label, std::size_t m,
                                  const std::optional<std::vector<BigCount>>& exact,
                                  const std::optional<std::vector<BigCount>>& bound);

/// Fixed 4-decimal rendering, ties rounded to even.
std::string format_fixed4(double value);
std::string format_fixed(double value, int decimals);

/// Header `n,count,c,bound,c_bound`; absent cells empty; LF line endings.
std::string to_csv(const SequenceTable& table);

/// {"base", "m", "rows": [{"n", "count"?, "c"?, "bound"?, "c_bound"?}], "tool_version"}
/// with counts and c-values as strings.
std::string to_json(const SequenceTable& table, const std::string& tool_version);

/// Plot series `n,c,c_bound` at 6 decimals.
std::string to_plot_csv(const SequenceTable& table);

}  // namespace latcount
