#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekc/catalog.hpp"

namespace ekc::cli {

struct TableRow {
  std::string label;
  std::string expected;
  std::string got;
  bool match = false;
  // A fixture value we believe to be wrong; the reason is in `note`.
  bool known_discrepancy = false;
  std::string note;
};

struct Table {
  std::string name;
  std::vector<TableRow> rows;
  double seconds = 0;

  int matches() const;
  // Mismatches that are not documented discrepancies.
  int unexpected() const;
};

const std::vector<std::string>& table_names();
std::optional<Table> run_table(const std::string& name, const SearchLimits& lim = {});

Table inertia_pairs_table(const SearchLimits& lim = {});
Table r_examples_table(const SearchLimits& lim = {});
Table dm_example_table();

// Bases of the r examples, by label.
Base shear_r0_base(int j);
Base half_shift_r2_base(int j);
Base hyperbolic_base(int j);
Base split_sum_base(int eps);

}  // namespace ekc::cli
