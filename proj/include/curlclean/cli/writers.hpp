#pragma once
#include <fstream>
#include <string>
#include <vector>

#include "curlclean/constraints/report.hpp"
#include "curlclean/core/field.hpp"
#include "curlclean/systems/system.hpp"

namespace curlclean {

// Streams constraint norms as CSV: header `t,<fam>_L1,<fam>_L2,<fam>_Linf,...`
// in family order, rows printed with %.17g so identical runs produce
// byte-identical files.
class ConstraintCsvWriter {
 public:
  ConstraintCsvWriter(const std::string& path,
                      const std::vector<ResidualFamily>& fams);
  void append(const ConstraintReport& rep);

 private:
  std::ofstream os_;
  std::size_t nfam_;
};

// Legacy ASCII VTK STRUCTURED_POINTS snapshot of the named components
// (origin/spacing at cell centers, x fastest).
void write_vtk(const std::string& path, const FieldSnapshot& f,
               const std::vector<std::string>& fields);

// 1D cut along `axis` ('x', 'y' or 'z') through the cell row nearest the
// domain center: CSV with the coordinate followed by one column per field.
void write_cut_csv(const std::string& path, const FieldSnapshot& f, char axis,
                   const std::vector<std::string>& fields);

struct RunMetadata {
  std::string version;
  std::string preset;
  std::string scenario;
  std::uint64_t seed = 0;
  int threads = 1;
  double wall_seconds = 0;
  double t_final = 0;
  long long steps = 0;
  bool diverged = false;
  std::string reason;
  std::vector<std::string> deviations;
};

void write_run_json(const std::string& path, const RunMetadata& meta);

}  // namespace curlclean
