#include <doctest.h>

#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <vector>

#include "curlclean/core/errors.hpp"
#include "curlclean/core/fo_indices.hpp"
#include "curlclean/core/noise.hpp"
#include "curlclean/core/toy_indices.hpp"
#include "curlclean/mol/stencil.hpp"
#include "curlclean/mol/thread_pool.hpp"
#include "curlclean/scenarios/initial_data_io.hpp"
#include "curlclean/scenarios/scenarios.hpp"

using namespace curlclean;
namespace fs = std::filesystem;

namespace {

GridSpec cube(int n, double lo = -0.5, double hi = 0.5) {
  GridSpec g;
  g.nx = g.ny = g.nz = n;
  g.xmin = g.ymin = g.zmin = lo;
  g.xmax = g.ymax = g.zmax = hi;
  return g;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("curlclean-test-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

}  // namespace

TEST_CASE("flat-space data is exactly flat") {
  GridSpec g = cube(6);
  FieldSnapshot f = minkowski_init(g, layout_for(SystemKind::foccz4));
  for (int c = 0; c < f.layout->count; ++c) {
    const bool diag = c == fo::GT + 0 || c == fo::GT + 3 || c == fo::GT + 5;
    for (std::size_t p = 0; p < f.n(); ++p)
      CHECK(f.comp(c)[p] == (diag ? 1.0 : 0.0));
  }
  CHECK(f.time == 0.0);
}

TEST_CASE("perturbation is deterministic, bounded, and mask-aware") {
  GridSpec g = cube(6);
  const Layout& lay = layout_for(SystemKind::foccz4);
  FieldSnapshot a = minkowski_init(g, lay);
  FieldSnapshot b = minkowski_init(g, lay);
  const double eps = 1e-6;

  perturb(a, 42, eps);
  perturb(b, 42, eps);
  CHECK(a.data == b.data);  // bitwise repeatable

  FieldSnapshot c = minkowski_init(g, lay);
  perturb(c, 43, eps);
  CHECK(c.data != a.data);

  // Bounded by eps and actually nonzero.
  FieldSnapshot ref = minkowski_init(g, lay);
  double diff = 0.0;
  for (std::size_t p = 0; p < a.data.size(); ++p)
    diff = std::max(diff, std::abs(a.data[p] - ref.data[p]));
  CHECK(diff <= eps);
  CHECK(diff > 0.1 * eps);

  // eps = 0 is the identity.
  FieldSnapshot d = minkowski_init(g, lay);
  perturb(d, 42, 0.0);
  CHECK(d.data == ref.data);

  // A mask restricts the touched components.
  FieldSnapshot e = minkowski_init(g, lay);
  std::vector<std::uint8_t> only_k(lay.count, 0);
  only_k[fo::K] = 1;
  perturb(e, 42, eps, only_k);
  for (int comp = 0; comp < lay.count; ++comp) {
    bool changed = false;
    for (std::size_t p = 0; p < e.n(); ++p)
      changed = changed || e.comp(comp)[p] != ref.comp(comp)[p];
    CHECK(changed == (comp == fo::K));
  }

  // The field values agree with the raw generator (traversal independence).
  CHECK(e.at(fo::K, 2, 3, 4) ==
        doctest::Approx(eps * unit_noise(42, fo::K, 2, 3, 4)).epsilon(1e-15));
}

TEST_CASE("curl-free transport data really has fourth-order-small curl") {
  // Mixed per-axis resolutions: with equal counts the two modified
  // wavenumbers coincide and the discrete curl cancels to roundoff, which is
  // also checked below.
  auto max_curl = [](int nx, int ny) {
    GridSpec g = cube(nx, 0.0, 1.0);
    g.ny = ny;
    FieldSnapshot f = toy_curl_free_init(g, 0.01);
    ThreadPool pool(1);
    SpatialOps ops(g, pool);
    std::vector<std::uint8_t> mask(f.layout->count, 1);
    std::vector<double> gx, gy, gz;
    ops.gradients(f, mask, gx, gy, gz);
    const std::size_t N = f.n();
    auto at = [&](const std::vector<double>& gv, int c, std::size_t p) {
      return gv[std::size_t(c) * N + p];
    };
    double m = 0.0;
    for (std::size_t p = 0; p < N; ++p) {
      const double cxy = at(gx, toy::J + 1, p) - at(gy, toy::J + 0, p);
      const double cxz = at(gx, toy::J + 2, p) - at(gz, toy::J + 0, p);
      const double cyz = at(gy, toy::J + 2, p) - at(gz, toy::J + 1, p);
      m = std::max({m, std::abs(cxy), std::abs(cxz), std::abs(cyz)});
    }
    return m;
  };
  const double c16 = max_curl(16, 24), c32 = max_curl(32, 48);
  CHECK(c16 < 0.1);                 // already small at coarse resolution
  CHECK(c16 / c32 > 12.0);          // shrinking like h^4
  CHECK(c16 / c32 < 20.0);
  // On matched axes the single-mode gradient is curl-free to machine
  // precision: the same stencil acts on the same wavenumber along x and y.
  CHECK(max_curl(16, 16) < 1e-11);

  // Density rides a sine on top of one.
  GridSpec g = cube(16, 0.0, 1.0);
  FieldSnapshot f = toy_curl_free_init(g, 0.01);
  double lo = 1e9, hi = -1e9;
  for (std::size_t p = 0; p < f.n(); ++p) {
    lo = std::min(lo, f.comp(toy::RHO)[p]);
    hi = std::max(hi, f.comp(toy::RHO)[p]);
  }
  CHECK(lo == doctest::Approx(0.9).epsilon(0.05));
  CHECK(hi == doctest::Approx(1.1).epsilon(0.05));
}

TEST_CASE("localized swirl data is quiescent with a compact rotational core") {
  GridSpec g = cube(25, -0.5, 0.5);  // odd count puts a cell center at zero
  const double center[3] = {0.0, 0.0, 0.0};
  FieldSnapshot f = toy_pure_curl_init(g, 0.1, 0.1, center);
  for (std::size_t p = 0; p < f.n(); ++p) {
    CHECK(f.comp(toy::RHO)[p] == 1.0);
    CHECK(f.comp(toy::MOM + 0)[p] == 0.0);
    CHECK(f.comp(toy::MOM + 1)[p] == 0.0);
    CHECK(f.comp(toy::MOM + 2)[p] == 0.0);
    CHECK(f.comp(toy::PSI + 0)[p] == 0.0);
    CHECK(f.comp(toy::PHI)[p] == 0.0);
  }
  // J swirls around the center: at (x,0,0) with x>0 it points in +y.
  int ic = g.nx / 2 + 3, jc = g.ny / 2, kc = g.nz / 2;
  CHECK(f.at(toy::J + 1, ic, jc, kc) > 0.0);
  CHECK(f.at(toy::J + 0, ic, jc, kc) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.at(toy::J + 2, ic, jc, kc) == 0.0);
  // Gaussian envelope: essentially zero by the box edge.
  CHECK(std::abs(f.at(toy::J + 1, g.nx - 1, jc, kc)) < 1e-5);
}

TEST_CASE("plane-wave data solves the induction pair analytically") {
  GridSpec g = cube(32, 0.0, 1.0);
  const double c = 1.0, amp = 0.5;
  FieldSnapshot f0 = induction_wave_init(g, amp, 2, c);
  CHECK(f0.time == 0.0);
  FieldSnapshot ft(g, *f0.layout);
  induction_wave_exact(g, 0.25, amp, 2, c, ft);
  CHECK(ft.time == 0.25);
  const double kw = 2.0 * 3.14159265358979323846 * 2.0 / 1.0;
  for (int i = 0; i < g.nx; ++i) {
    const double x = g.x(i);
    CHECK(f0.at(ind::B + 1, i, 3, 5) ==
          doctest::Approx(amp * std::sin(kw * x)).epsilon(1e-13));
    CHECK(f0.at(ind::E + 2, i, 3, 5) ==
          doctest::Approx(-c * amp * std::sin(kw * x)).epsilon(1e-13));
    CHECK(ft.at(ind::B + 1, i, 3, 5) ==
          doctest::Approx(amp * std::sin(kw * (x - c * 0.25))).epsilon(1e-13));
  }
  // Nothing else is excited.
  for (int comp : {ind::E + 0, ind::E + 1, ind::B + 0, ind::B + 2, ind::PHI})
    for (std::size_t p = 0; p < f0.n(); ++p) CHECK(f0.comp(comp)[p] == 0.0);
}

TEST_CASE("rotating-lump data places the energy where requested") {
  GridSpec g = cube(20, -8.0, 8.0);
  RotatingMassesParams par;
  FieldSnapshot f = rotating_masses_init(g, par);
  CHECK(f.layout->has_tau);
  // Flat geometry underneath.
  for (std::size_t p = 0; p < f.n(); ++p) {
    CHECK(f.comp(fo::GT + 0)[p] == 1.0);
    CHECK(f.comp(fo::LNALPHA)[p] == 0.0);
  }
  // tau follows the double Gaussian exactly.
  for (int k : {3, 10})
    for (int j : {4, 10})
      for (int i : {2, 10, 17}) {
        const double want = par.tau(g.x(i), g.y(j), g.z(k));
        CHECK(f.at(fo::TAU, i, j, k) == doctest::Approx(want).epsilon(1e-14));
      }
  // Peaks near the two centers, much smaller in between.
  const double at_l = par.tau(-2.0, 0.0, 0.0);
  const double at_mid = par.tau(0.0, 0.0, 0.0);
  CHECK(at_l == doctest::Approx(par.amp_l + par.amp_r * std::exp(-8.0)).epsilon(1e-10));
  CHECK(at_mid < at_l);

  // The taper passed to the velocity field scales with the spacing.
  RigidRotation rot = par.rotation(g.hx());
  CHECK(rot.smooth == doctest::Approx(par.smooth_cells * g.hx()));
  double v[3];
  rot.velocity(1.0, 0.0, 0.0, v);
  CHECK(v[1] == doctest::Approx(par.omega[2] * 1.0));
  rot.velocity(par.r_cut + 3.0 * rot.smooth, 0.0, 0.0, v);
  CHECK(v[1] == 0.0);
}

TEST_CASE("initial-data files round-trip bit for bit") {
  TempDir tmp;
  const std::string path = (tmp.path / "state.dat").string();

  GridSpec g = cube(6);
  const Layout& lay = foccz4_tau_layout();
  FieldSnapshot f = minkowski_init(g, lay);
  perturb(f, 9, 1e-3);  // exercise nontrivial values in every component
  // Keep lapse/conformal slots valid under the exp/log boundary convention.
  save_initial_data(path, f);
  LoadReport rep;
  FieldSnapshot r = load_initial_data(path, g, lay, &rep);
  REQUIRE(r.data.size() == f.data.size());
  for (std::size_t p = 0; p < f.data.size(); ++p) {
    const int comp = int(p / f.n());
    if (comp == fo::LNALPHA || comp == fo::LNPHI) {
      // Stored as physical values: exp then log costs at most a few ulp.
      CHECK(r.data[p] == doctest::Approx(f.data[p]).epsilon(1e-14));
    } else {
      CHECK(r.data[p] == f.data[p]);
    }
  }
  CHECK(rep.max_det_drift > 0.0);      // the noise nudged det away from one
  CHECK(rep.max_det_drift < 1e-2);

  // Pure flat data survives exactly (log(exp(0)) == 0).
  FieldSnapshot flat = minkowski_init(g, lay);
  save_initial_data(path, flat);
  FieldSnapshot rf = load_initial_data(path, g, lay);
  CHECK(rf.data == flat.data);
}

TEST_CASE("initial-data loader rejects malformed files") {
  TempDir tmp;
  GridSpec g = cube(6);
  const Layout& lay = layout_for(SystemKind::foccz4);
  const std::string path = (tmp.path / "state.dat").string();

  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_initial_data((tmp.path / "nope.dat").string(), g, lay),
                    DataError);
  }
  SUBCASE("bad magic") {
    std::ofstream out(path, std::ios::binary);
    out << "NOTMAGIC" << std::string(100, '\0');
    out.close();
    CHECK_THROWS_AS(load_initial_data(path, g, lay), DataError);
  }
  SUBCASE("grid mismatch") {
    save_initial_data(path, minkowski_init(g, lay));
    GridSpec g2 = cube(8);
    CHECK_THROWS_AS(load_initial_data(path, g2, lay), DataError);
  }
  SUBCASE("component-count mismatch") {
    save_initial_data(path, minkowski_init(g, lay));
    CHECK_THROWS_AS(load_initial_data(path, g, foccz4_tau_layout()), DataError);
  }
  SUBCASE("truncated body") {
    save_initial_data(path, minkowski_init(g, lay));
    fs::resize_file(path, fs::file_size(path) - 16);
    CHECK_THROWS_AS(load_initial_data(path, g, lay), DataError);
  }
  SUBCASE("non-finite entry") {
    FieldSnapshot f = minkowski_init(g, lay);
    f.at(fo::K, 1, 1, 1) = std::nan("");
    save_initial_data(path, f);
    CHECK_THROWS_AS(load_initial_data(path, g, lay), DataError);
  }
  SUBCASE("non-positive lapse") {
    // Hand-craft the body so the physical-lapse slot carries -1.
    FieldSnapshot f = minkowski_init(g, lay);
    save_initial_data(path, f);
    std::fstream io(path, std::ios::binary | std::ios::in | std::ios::out);
    io.seekp(8 + 5 * 4);  // first double of component 0
    const double bad = -1.0;
    io.write(reinterpret_cast<const char*>(&bad), sizeof bad);
    io.close();
    CHECK_THROWS_AS(load_initial_data(path, g, lay), DataError);
  }
  SUBCASE("demo layouts skip the positivity checks") {
    GridSpec gt = cube(6);
    FieldSnapshot f(gt, layout_for(SystemKind::toy_homogeneous));
    for (std::size_t p = 0; p < f.n(); ++p) f.comp(toy::RHO)[p] = -2.0;
    save_initial_data(path, f);
    FieldSnapshot r = load_initial_data(path, gt, *f.layout);
    CHECK(r.data == f.data);
  }
}

TEST_CASE("file header bytes follow the documented fixed layout") {
  TempDir tmp;
  const std::string path = (tmp.path / "header.dat").string();
  GridSpec g;
  g.nx = 6;
  g.ny = 7;
  g.nz = 8;
  FieldSnapshot f(g, layout_for(SystemKind::induction_glm));
  save_initial_data(path, f);
  std::ifstream in(path, std::ios::binary);
  char magic[8];
  in.read(magic, 8);
  CHECK(std::string(magic, 8) == "CURLCLN1");
  auto u32 = [&]() {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return (std::uint32_t(b[3]) << 24) | (std::uint32_t(b[2]) << 16) |
           (std::uint32_t(b[1]) << 8) | std::uint32_t(b[0]);
  };
  CHECK(u32() == 1u);  // version
  CHECK(u32() == 6u);
  CHECK(u32() == 7u);
  CHECK(u32() == 8u);
  CHECK(u32() == 7u);  // component count
  CHECK(fs::file_size(path) == 8 + 5 * 4 + std::size_t(7) * 6 * 7 * 8 * 8);
}
