#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace curlclean {

// Parsed constraints.csv: column names (without the leading t) plus one row
// of values per sampled time.
struct NormSeries {
  std::vector<std::string> columns;
  std::vector<double> times;
  std::vector<std::vector<double>> rows;  // rows[r][c]
};

NormSeries read_constraints_csv(const std::string& path);

// Linear interpolation of every column at time t (t must lie inside the
// sampled range).
std::vector<double> interpolate_row(const NormSeries& s, double t);

// Per-column ratio table a/b at the sample times of a that fall inside b's
// range (b linearly interpolated).  Equal values give exactly 1.0.
struct CompareTable {
  std::vector<std::string> columns;
  std::vector<double> times;
  std::vector<std::vector<double>> ratios;
};

CompareTable compare_runs(const std::string& dir_a, const std::string& dir_b);
void print_compare(const CompareTable& t, std::ostream& os);

}  // namespace curlclean
