#include "curlclean/cli/compare.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "curlclean/core/errors.hpp"

namespace curlclean {

NormSeries read_constraints_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open '" + path + "'");
  NormSeries s;
  std::string line;
  if (!std::getline(is, line))
    throw DataError("'" + path + "' is empty");
  {
    std::stringstream ss(line);
    std::string cell;
    bool first = true;
    while (std::getline(ss, cell, ',')) {
      if (first) {
        if (cell != "t")
          throw DataError("'" + path + "': first column must be t");
        first = false;
      } else {
        s.columns.push_back(cell);
      }
    }
  }
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw DataError("'" + path + "' line " + std::to_string(lineno) +
                        ": bad number '" + cell + "'");
      }
    }
    if (row.size() != s.columns.size() + 1)
      throw DataError("'" + path + "' line " + std::to_string(lineno) +
                      ": expected " + std::to_string(s.columns.size() + 1) +
                      " cells, got " + std::to_string(row.size()));
    s.times.push_back(row[0]);
    row.erase(row.begin());
    s.rows.push_back(std::move(row));
  }
  if (s.times.empty()) throw DataError("'" + path + "' has no data rows");
  return s;
}

std::vector<double> interpolate_row(const NormSeries& s, double t) {
  const std::size_t n = s.times.size();
  if (t < s.times.front() || t > s.times.back())
    throw DataError("time " + std::to_string(t) +
                    " outside the sampled range of the series");
  // exact hits first (keeps identical-run comparisons exact)
  for (std::size_t r = 0; r < n; ++r)
    if (s.times[r] == t) return s.rows[r];
  std::size_t hi = 1;
  while (hi < n && s.times[hi] < t) ++hi;
  const double t0 = s.times[hi - 1], t1 = s.times[hi];
  const double w = (t - t0) / (t1 - t0);
  std::vector<double> out(s.columns.size());
  for (std::size_t c = 0; c < out.size(); ++c)
    out[c] = (1.0 - w) * s.rows[hi - 1][c] + w * s.rows[hi][c];
  return out;
}

CompareTable compare_runs(const std::string& dir_a, const std::string& dir_b) {
  const NormSeries a = read_constraints_csv(dir_a + "/constraints.csv");
  const NormSeries b = read_constraints_csv(dir_b + "/constraints.csv");
  if (a.columns != b.columns)
    throw DataError("runs monitor different families; cannot compare");

  CompareTable t;
  t.columns = a.columns;
  for (std::size_t r = 0; r < a.times.size(); ++r) {
    const double tv = a.times[r];
    if (tv < b.times.front() || tv > b.times.back()) continue;
    const std::vector<double> bi = interpolate_row(b, tv);
    std::vector<double> row(a.columns.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double av = a.rows[r][c], bv = bi[c];
      row[c] = av == bv ? 1.0 : av / bv;
    }
    t.times.push_back(tv);
    t.ratios.push_back(std::move(row));
  }
  if (t.times.empty())
    throw DataError("the two runs share no overlapping time window");
  return t;
}

void print_compare(const CompareTable& t, std::ostream& os) {
  char buf[32];
  os << "t";
  for (const auto& c : t.columns) os << "," << c << "_ratio";
  os << "\n";
  for (std::size_t r = 0; r < t.times.size(); ++r) {
    std::snprintf(buf, sizeof(buf), "%.17g", t.times[r]);
    os << buf;
    for (double v : t.ratios[r]) {
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace curlclean
