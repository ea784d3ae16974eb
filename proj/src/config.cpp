#include "curlclean/cli/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "curlclean/core/errors.hpp"
#include "curlclean/core/layout.hpp"

namespace curlclean {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse '" + v + "' as a number");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return int(x);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse '" + v +
                      "' as an integer");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse '" + v +
                      "' as an unsigned integer");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("key '" + key + "': expected on/off, got '" + v + "'");
}

std::vector<std::string> parse_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void parse_triple(const std::string& key, const std::string& v, double out[3]) {
  const auto parts = parse_list(v);
  if (parts.size() != 3)
    throw ConfigError("key '" + key + "': expected three comma-separated "
                      "numbers, got '" + v + "'");
  for (int i = 0; i < 3; ++i) out[i] = parse_double(key, parts[i]);
}

Boundary parse_boundary(const std::string& key, const std::string& v) {
  if (v == "periodic") return Boundary::periodic;
  if (v == "extrapolate") return Boundary::extrapolate;
  throw ConfigError("key '" + key + "': expected periodic or extrapolate, "
                    "got '" + v + "'");
}

Scenario parse_scenario(const std::string& v) {
  if (v == "robust_stability") return Scenario::robust_stability;
  if (v == "toy_curl_free") return Scenario::toy_curl_free;
  if (v == "toy_pure_curl_error") return Scenario::toy_pure_curl_error;
  if (v == "induction_wave") return Scenario::induction_wave;
  if (v == "rotating_masses") return Scenario::rotating_masses;
  if (v == "external_file") return Scenario::external_file;
  throw ConfigError("unknown scenario '" + v + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i];
  }
  return out;
}

std::string triple(const double v[3]) {
  return fmt(v[0]) + "," + fmt(v[1]) + "," + fmt(v[2]);
}

const char* bstr(Boundary b) {
  return b == Boundary::periodic ? "periodic" : "extrapolate";
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::robust_stability: return "robust_stability";
    case Scenario::toy_curl_free: return "toy_curl_free";
    case Scenario::toy_pure_curl_error: return "toy_pure_curl_error";
    case Scenario::induction_wave: return "induction_wave";
    case Scenario::rotating_masses: return "rotating_masses";
    case Scenario::external_file: return "external_file";
  }
  return "?";
}

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
  GridSpec& g = cfg.grid;
  CCZ4Params& z = cfg.ccz4;
  ToyParams& t = cfg.toy;

  if (key == "scenario") cfg.scenario = parse_scenario(value);
  else if (key == "nx") g.nx = parse_int(key, value);
  else if (key == "ny") g.ny = parse_int(key, value);
  else if (key == "nz") g.nz = parse_int(key, value);
  else if (key == "xmin") g.xmin = parse_double(key, value);
  else if (key == "xmax") g.xmax = parse_double(key, value);
  else if (key == "ymin") g.ymin = parse_double(key, value);
  else if (key == "ymax") g.ymax = parse_double(key, value);
  else if (key == "zmin") g.zmin = parse_double(key, value);
  else if (key == "zmax") g.zmax = parse_double(key, value);
  else if (key == "bx") g.bx = parse_boundary(key, value);
  else if (key == "by") g.by = parse_boundary(key, value);
  else if (key == "bz") g.bz = parse_boundary(key, value);
  else if (key == "seed") cfg.seed = parse_u64(key, value);
  else if (key == "epsilon_pert") cfg.epsilon_pert = parse_double(key, value);
  else if (key == "glm") cfg.glm = parse_bool(key, value);
  else if (key == "cfl") cfg.cfl = parse_double(key, value);
  else if (key == "dt") cfg.fixed_dt = parse_double(key, value);
  else if (key == "t_end") cfg.t_end = parse_double(key, value);
  else if (key == "sigma_ko") cfg.sigma_ko = parse_double(key, value);
  else if (key == "threads") cfg.threads = parse_int(key, value);
  else if (key == "projection") cfg.projection = parse_bool(key, value);
  else if (key == "monitor_every") cfg.monitor_every = parse_int(key, value);
  else if (key == "snapshot_every") cfg.snapshot_every = parse_int(key, value);
  else if (key == "snapshot_fields") cfg.snapshot_fields = parse_list(value);
  else if (key == "cut_axes") cfg.cut_axes = parse_list(value);
  else if (key == "cut_fields") cfg.cut_fields = parse_list(value);
  else if (key == "output_dir") cfg.output_dir = value;
  else if (key == "initial_data") cfg.initial_data = value;
  else if (key == "external_matter") cfg.external_matter = parse_bool(key, value);

  else if (key == "slicing") {
    if (value == "harmonic") z.slicing = Slicing::harmonic;
    else if (value == "one_plus_log") z.slicing = Slicing::one_plus_log;
    else throw ConfigError("key 'slicing': expected harmonic or one_plus_log");
  }
  else if (key == "ccz4_s") z.s = parse_double(key, value);
  else if (key == "ccz4_f") z.f = parse_double(key, value);
  else if (key == "ccz4_mu") z.mu = parse_double(key, value);
  else if (key == "ccz4_eta") z.eta = parse_double(key, value);
  else if (key == "ccz4_e") z.e = parse_double(key, value);
  else if (key == "ccz4_c") z.c = parse_double(key, value);
  else if (key == "kappa1") z.kappa1 = parse_double(key, value);
  else if (key == "kappa2") z.kappa2 = parse_double(key, value);
  else if (key == "kappa3") z.kappa3 = parse_double(key, value);
  else if (key == "a_c_A") z.fam_a.a_c = parse_double(key, value);
  else if (key == "a_d_A") z.fam_a.a_d = parse_double(key, value);
  else if (key == "eps_c_A") z.fam_a.eps_c = parse_double(key, value);
  else if (key == "eps_d_A") z.fam_a.eps_d = parse_double(key, value);
  else if (key == "a_c_B") z.fam_b.a_c = parse_double(key, value);
  else if (key == "a_d_B") z.fam_b.a_d = parse_double(key, value);
  else if (key == "eps_c_B") z.fam_b.eps_c = parse_double(key, value);
  else if (key == "eps_d_B") z.fam_b.eps_d = parse_double(key, value);
  else if (key == "a_c_D") z.fam_d.a_c = parse_double(key, value);
  else if (key == "a_d_D") z.fam_d.a_d = parse_double(key, value);
  else if (key == "eps_c_D") z.fam_d.eps_c = parse_double(key, value);
  else if (key == "eps_d_D") z.fam_d.eps_d = parse_double(key, value);
  else if (key == "a_c_P") z.fam_p.a_c = parse_double(key, value);
  else if (key == "a_d_P") z.fam_p.a_d = parse_double(key, value);
  else if (key == "eps_c_P") z.fam_p.eps_c = parse_double(key, value);
  else if (key == "eps_d_P") z.fam_p.eps_d = parse_double(key, value);

  else if (key == "c0") t.c0 = parse_double(key, value);
  else if (key == "a_c") t.a_c = parse_double(key, value);
  else if (key == "a_d") { t.a_d = parse_double(key, value); cfg.induction.a_d = t.a_d; }
  else if (key == "a_b") t.a_b = parse_double(key, value);
  else if (key == "eps_c") t.eps_c = parse_double(key, value);
  else if (key == "eps_d") { t.eps_d = parse_double(key, value); cfg.induction.eps_d = t.eps_d; }
  else if (key == "eps_b") t.eps_b = parse_double(key, value);
  else if (key == "source") {
    if (value == "none") t.source = ToySource::none;
    else if (value == "linear_relaxation") t.source = ToySource::linear_relaxation;
    else throw ConfigError("key 'source': expected none or linear_relaxation");
  }
  else if (key == "tau_relax") t.tau_relax = parse_double(key, value);
  else if (key == "c_light") cfg.induction.c_light = parse_double(key, value);
  else if (key == "toy_amp") cfg.toy_amp = parse_double(key, value);
  else if (key == "toy_sigma") cfg.toy_sigma = parse_double(key, value);
  else if (key == "toy_center") parse_triple(key, value, cfg.toy_center);
  else if (key == "toy_flow") cfg.toy_flow = parse_double(key, value);
  else if (key == "wave_amplitude") cfg.wave_amplitude = parse_double(key, value);
  else if (key == "wave_mode") cfg.wave_mode = parse_int(key, value);

  else if (key == "rot_amp_l") cfg.rot.amp_l = parse_double(key, value);
  else if (key == "rot_amp_r") cfg.rot.amp_r = parse_double(key, value);
  else if (key == "rot_sigma_l") cfg.rot.sigma_l = parse_double(key, value);
  else if (key == "rot_sigma_r") cfg.rot.sigma_r = parse_double(key, value);
  else if (key == "rot_center_l") parse_triple(key, value, cfg.rot.center_l);
  else if (key == "rot_center_r") parse_triple(key, value, cfg.rot.center_r);
  else if (key == "rot_omega") parse_triple(key, value, cfg.rot.omega);
  else if (key == "rot_r_cut") cfg.rot.r_cut = parse_double(key, value);
  else if (key == "rot_smooth_cells") cfg.rot.smooth_cells = parse_double(key, value);

  else
    throw ConfigError("unknown config key '" + key + "'");
}

void parse_config_text(RunConfig& cfg, const std::string& text,
                       const std::string& origin) {
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(origin + ":" + std::to_string(lineno) +
                        ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    try {
      apply_config_entry(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": " +
                        e.what());
    }
  }
}

void parse_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << is.rdbuf();
  parse_config_text(cfg, buf.str(), path);
}

const Layout& layout_for_scenario(const RunConfig& cfg) {
  switch (cfg.scenario) {
    case Scenario::robust_stability:
      return layout_for(SystemKind::foccz4);
    case Scenario::toy_curl_free:
    case Scenario::toy_pure_curl_error:
      return layout_for(SystemKind::toy_homogeneous);
    case Scenario::induction_wave:
      return layout_for(SystemKind::induction_glm);
    case Scenario::rotating_masses:
      return foccz4_tau_layout();
    case Scenario::external_file:
      return cfg.external_matter ? foccz4_tau_layout()
                                 : layout_for(SystemKind::foccz4);
  }
  return layout_for(SystemKind::foccz4);
}

void validate_config(const RunConfig& cfg) {
  cfg.grid.validate();
  if (!(cfg.cfl > 0) || cfg.cfl > 0.7)
    throw ConfigError("cfl must lie in (0, 0.7], got " + fmt(cfg.cfl));
  if (cfg.fixed_dt < 0) throw ConfigError("dt must be >= 0");
  if (cfg.t_end < 0) throw ConfigError("t_end must be >= 0");
  if (cfg.sigma_ko < 0) throw ConfigError("sigma_ko must be >= 0");
  if (cfg.epsilon_pert < 0) throw ConfigError("epsilon_pert must be >= 0");
  if (cfg.threads < 1 || cfg.threads > 256)
    throw ConfigError("threads must lie in [1, 256]");
  if (cfg.monitor_every < 0) throw ConfigError("monitor_every must be >= 0");
  if (cfg.snapshot_every < 0) throw ConfigError("snapshot_every must be >= 0");
  if (!(cfg.toy_sigma > 0)) throw ConfigError("toy_sigma must be > 0");
  if (!(cfg.toy.tau_relax > 0)) throw ConfigError("tau_relax must be > 0");
  if (cfg.wave_mode < 1) throw ConfigError("wave_mode must be >= 1");
  if (!(cfg.rot.sigma_l > 0) || !(cfg.rot.sigma_r > 0))
    throw ConfigError("rot_sigma_l/rot_sigma_r must be > 0");
  if (!(cfg.rot.r_cut > 0)) throw ConfigError("rot_r_cut must be > 0");
  if (cfg.rot.smooth_cells < 0)
    throw ConfigError("rot_smooth_cells must be >= 0");
  if (cfg.scenario == Scenario::external_file && cfg.initial_data.empty())
    throw ConfigError("scenario external_file requires the initial_data key");
  if (cfg.output_dir.empty()) throw ConfigError("output_dir must not be empty");
  if (cfg.snapshot_every > 0 && cfg.snapshot_fields.empty())
    throw ConfigError("snapshot_every > 0 requires snapshot_fields");
  if (!cfg.cut_axes.empty() && cfg.cut_fields.empty())
    throw ConfigError("cut_axes requires cut_fields");

  for (const auto& ax : cfg.cut_axes)
    if (ax != "x" && ax != "y" && ax != "z")
      throw ConfigError("cut_axes entries must be x, y or z, got '" + ax + "'");

  const Layout& lay = layout_for_scenario(cfg);
  for (const auto& name : cfg.snapshot_fields)
    if (lay.index_of(name) < 0)
      throw ConfigError("snapshot field '" + name +
                        "' is not a component of this scenario's system");
  for (const auto& name : cfg.cut_fields)
    if (lay.index_of(name) < 0)
      throw ConfigError("cut field '" + name +
                        "' is not a component of this scenario's system");
}

void print_config(const RunConfig& cfg, std::ostream& os) {
  if (!cfg.preset.empty()) os << "# preset: " << cfg.preset << "\n";
  for (const auto& d : cfg.deviations) os << "# deviation: " << d << "\n";
  const GridSpec& g = cfg.grid;
  const CCZ4Params& z = cfg.ccz4;
  const ToyParams& t = cfg.toy;
  os << "scenario = " << to_string(cfg.scenario) << "\n"
     << "nx = " << g.nx << "\nny = " << g.ny << "\nnz = " << g.nz << "\n"
     << "xmin = " << fmt(g.xmin) << "\nxmax = " << fmt(g.xmax) << "\n"
     << "ymin = " << fmt(g.ymin) << "\nymax = " << fmt(g.ymax) << "\n"
     << "zmin = " << fmt(g.zmin) << "\nzmax = " << fmt(g.zmax) << "\n"
     << "bx = " << bstr(g.bx) << "\nby = " << bstr(g.by) << "\nbz = "
     << bstr(g.bz) << "\n"
     << "seed = " << cfg.seed << "\n"
     << "epsilon_pert = " << fmt(cfg.epsilon_pert) << "\n"
     << "glm = " << (cfg.glm ? "on" : "off") << "\n"
     << "cfl = " << fmt(cfg.cfl) << "\n"
     << "dt = " << fmt(cfg.fixed_dt) << "\n"
     << "t_end = " << fmt(cfg.t_end) << "\n"
     << "sigma_ko = " << fmt(cfg.sigma_ko) << "\n"
     << "threads = " << cfg.threads << "\n"
     << "projection = " << (cfg.projection ? "on" : "off") << "\n"
     << "monitor_every = " << cfg.monitor_every << "\n"
     << "snapshot_every = " << cfg.snapshot_every << "\n";
  if (!cfg.snapshot_fields.empty())
    os << "snapshot_fields = " << join(cfg.snapshot_fields) << "\n";
  if (!cfg.cut_axes.empty()) os << "cut_axes = " << join(cfg.cut_axes) << "\n";
  if (!cfg.cut_fields.empty())
    os << "cut_fields = " << join(cfg.cut_fields) << "\n";
  os << "output_dir = " << cfg.output_dir << "\n";
  if (!cfg.initial_data.empty())
    os << "initial_data = " << cfg.initial_data << "\n";
  os << "external_matter = " << (cfg.external_matter ? "on" : "off") << "\n";

  os << "slicing = "
     << (z.slicing == Slicing::harmonic ? "harmonic" : "one_plus_log") << "\n"
     << "ccz4_s = " << fmt(z.s) << "\nccz4_f = " << fmt(z.f) << "\n"
     << "ccz4_mu = " << fmt(z.mu) << "\nccz4_eta = " << fmt(z.eta) << "\n"
     << "ccz4_e = " << fmt(z.e) << "\nccz4_c = " << fmt(z.c) << "\n"
     << "kappa1 = " << fmt(z.kappa1) << "\nkappa2 = " << fmt(z.kappa2)
     << "\nkappa3 = " << fmt(z.kappa3) << "\n";
  const struct { const char* tag; const CleaningFamily* f; } fams[] = {
      {"A", &z.fam_a}, {"B", &z.fam_b}, {"D", &z.fam_d}, {"P", &z.fam_p}};
  for (const auto& fa : fams)
    os << "a_c_" << fa.tag << " = " << fmt(fa.f->a_c) << "\n"
       << "a_d_" << fa.tag << " = " << fmt(fa.f->a_d) << "\n"
       << "eps_c_" << fa.tag << " = " << fmt(fa.f->eps_c) << "\n"
       << "eps_d_" << fa.tag << " = " << fmt(fa.f->eps_d) << "\n";

  os << "c0 = " << fmt(t.c0) << "\n"
     << "a_c = " << fmt(t.a_c) << "\na_d = " << fmt(t.a_d) << "\na_b = "
     << fmt(t.a_b) << "\n"
     << "eps_c = " << fmt(t.eps_c) << "\neps_d = " << fmt(t.eps_d)
     << "\neps_b = " << fmt(t.eps_b) << "\n"
     << "source = "
     << (t.source == ToySource::none ? "none" : "linear_relaxation") << "\n"
     << "tau_relax = " << fmt(t.tau_relax) << "\n"
     << "c_light = " << fmt(cfg.induction.c_light) << "\n"
     << "toy_amp = " << fmt(cfg.toy_amp) << "\n"
     << "toy_sigma = " << fmt(cfg.toy_sigma) << "\n"
     << "toy_center = " << triple(cfg.toy_center) << "\n"
     << "toy_flow = " << fmt(cfg.toy_flow) << "\n"
     << "wave_amplitude = " << fmt(cfg.wave_amplitude) << "\n"
     << "wave_mode = " << cfg.wave_mode << "\n";

  os << "rot_amp_l = " << fmt(cfg.rot.amp_l) << "\n"
     << "rot_amp_r = " << fmt(cfg.rot.amp_r) << "\n"
     << "rot_sigma_l = " << fmt(cfg.rot.sigma_l) << "\n"
     << "rot_sigma_r = " << fmt(cfg.rot.sigma_r) << "\n"
     << "rot_center_l = " << triple(cfg.rot.center_l) << "\n"
     << "rot_center_r = " << triple(cfg.rot.center_r) << "\n"
     << "rot_omega = " << triple(cfg.rot.omega) << "\n"
     << "rot_r_cut = " << fmt(cfg.rot.r_cut) << "\n"
     << "rot_smooth_cells = " << fmt(cfg.rot.smooth_cells) << "\n";
}

}  // namespace curlclean
