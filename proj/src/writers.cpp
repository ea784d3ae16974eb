#include "curlclean/cli/writers.hpp"

#include <cstdio>

#include <json.hpp>

#include "curlclean/core/errors.hpp"

namespace curlclean {

namespace {

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const double* field_ptr(const FieldSnapshot& f, const std::string& name) {
  const int c = f.layout->index_of(name);
  if (c < 0)
    throw ConfigError("unknown component '" + name + "' requested for output");
  return f.comp(c);
}

}  // namespace

ConstraintCsvWriter::ConstraintCsvWriter(const std::string& path,
                                         const std::vector<ResidualFamily>& fams)
    : os_(path), nfam_(fams.size()) {
  if (!os_) throw DataError("cannot open '" + path + "' for writing");
  os_ << "t";
  for (const auto& fam : fams)
    os_ << "," << fam.name << "_L1," << fam.name << "_L2," << fam.name
        << "_Linf";
  os_ << "\n";
  os_.flush();
}

void ConstraintCsvWriter::append(const ConstraintReport& rep) {
  if (rep.families.size() != nfam_)
    throw DataError("constraint report family count changed mid-run");
  os_ << g17(rep.t);
  for (const auto& fam : rep.families)
    os_ << "," << g17(fam.l1) << "," << g17(fam.l2) << "," << g17(fam.linf);
  os_ << "\n";
  os_.flush();
  if (!os_) throw DataError("constraint CSV write failed");
}

void write_vtk(const std::string& path, const FieldSnapshot& f,
               const std::vector<std::string>& fields) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot open '" + path + "' for writing");
  const GridSpec& g = f.grid;
  os << "# vtk DataFile Version 3.0\n"
     << "state snapshot at t = " << g17(f.time) << "\n"
     << "ASCII\n"
     << "DATASET STRUCTURED_POINTS\n"
     << "DIMENSIONS " << g.nx << " " << g.ny << " " << g.nz << "\n"
     << "ORIGIN " << g17(g.x(0)) << " " << g17(g.y(0)) << " " << g17(g.z(0))
     << "\n"
     << "SPACING " << g17(g.hx()) << " " << g17(g.hy()) << " " << g17(g.hz())
     << "\n"
     << "POINT_DATA " << f.n() << "\n"
     << "FIELD FieldData " << fields.size() << "\n";
  char buf[32];
  for (const auto& name : fields) {
    const double* p = field_ptr(f, name);
    os << name << " 1 " << f.n() << " double\n";
    for (std::size_t q = 0; q < f.n(); ++q) {
      std::snprintf(buf, sizeof(buf), "%.9g", p[q]);
      os << buf << ((q % 6 == 5 || q + 1 == f.n()) ? '\n' : ' ');
    }
  }
  if (!os) throw DataError("VTK write to '" + path + "' failed");
}

void write_cut_csv(const std::string& path, const FieldSnapshot& f, char axis,
                   const std::vector<std::string>& fields) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot open '" + path + "' for writing");
  const GridSpec& g = f.grid;
  os << axis;
  for (const auto& name : fields) os << "," << name;
  os << "\n";
  const int ic = g.nx / 2, jc = g.ny / 2, kc = g.nz / 2;
  const int n = axis == 'x' ? g.nx : axis == 'y' ? g.ny : g.nz;
  for (int m = 0; m < n; ++m) {
    int i = ic, j = jc, k = kc;
    double coord;
    if (axis == 'x') { i = m; coord = g.x(m); }
    else if (axis == 'y') { j = m; coord = g.y(m); }
    else { k = m; coord = g.z(m); }
    os << g17(coord);
    const std::size_t idx = g.idx(i, j, k);
    for (const auto& name : fields) os << "," << g17(field_ptr(f, name)[idx]);
    os << "\n";
  }
  if (!os) throw DataError("cut write to '" + path + "' failed");
}

void write_run_json(const std::string& path, const RunMetadata& meta) {
  nlohmann::json j;
  j["version"] = meta.version;
  j["preset"] = meta.preset;
  j["scenario"] = meta.scenario;
  j["seed"] = meta.seed;
  j["threads"] = meta.threads;
  j["wall_seconds"] = meta.wall_seconds;
  j["t_final"] = meta.t_final;
  j["steps"] = meta.steps;
  j["diverged"] = meta.diverged;
  j["reason"] = meta.reason;
  j["deviations"] = meta.deviations;
  std::ofstream os(path);
  if (!os) throw DataError("cannot open '" + path + "' for writing");
  os << j.dump(2) << "\n";
  if (!os) throw DataError("metadata write to '" + path + "' failed");
}

}  // namespace curlclean
