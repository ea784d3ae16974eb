#include "curlclean/scenarios/initial_data_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <vector>

#include "curlclean/core/errors.hpp"
#include "curlclean/core/fo_indices.hpp"
#include "curlclean/core/sym3.hpp"

namespace curlclean {

namespace {

constexpr char kMagic[8] = {'C', 'U', 'R', 'L', 'C', 'L', 'N', '1'};
constexpr std::uint32_t kVersion = 1;

static_assert(sizeof(double) == 8 && std::numeric_limits<double>::is_iec559);

void put_u32(std::ofstream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v),
                        static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::ifstream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) |
         (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}

void swap_if_big(double* p, std::size_t n) {
  if constexpr (std::endian::native == std::endian::little) {
    (void)p;
    (void)n;
  } else {
    for (std::size_t q = 0; q < n; ++q) {
      std::uint64_t u;
      std::memcpy(&u, p + q, 8);
      u = __builtin_bswap64(u);
      std::memcpy(p + q, &u, 8);
    }
  }
}

bool is_spacetime(const Layout& lay) { return lay.kind == SystemKind::foccz4; }

}  // namespace

void save_initial_data(const std::string& path, const FieldSnapshot& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open '" + path + "' for writing");
  os.write(kMagic, 8);
  put_u32(os, kVersion);
  put_u32(os, std::uint32_t(f.grid.nx));
  put_u32(os, std::uint32_t(f.grid.ny));
  put_u32(os, std::uint32_t(f.grid.nz));
  put_u32(os, std::uint32_t(f.layout->count));

  const std::size_t n = f.n();
  std::vector<double> buf(n);
  const bool st = is_spacetime(*f.layout);
  for (int c = 0; c < f.layout->count; ++c) {
    const double* src = f.comp(c);
    if (st && (c == fo::LNALPHA || c == fo::LNPHI)) {
      for (std::size_t q = 0; q < n; ++q) buf[q] = std::exp(src[q]);
    } else {
      std::memcpy(buf.data(), src, n * 8);
    }
    swap_if_big(buf.data(), n);
    os.write(reinterpret_cast<const char*>(buf.data()),
             std::streamsize(n * 8));
  }
  if (!os) throw DataError("short write to '" + path + "'");
}

FieldSnapshot load_initial_data(const std::string& path, const GridSpec& grid,
                                const Layout& lay, LoadReport* rep) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open initial data file '" + path + "'");

  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0)
    throw DataError("'" + path + "' is not an initial-data file (bad magic)");
  const std::uint32_t ver = get_u32(is);
  if (ver != kVersion)
    throw DataError("unsupported initial-data version " + std::to_string(ver) +
                    " in '" + path + "'");
  const std::uint32_t fnx = get_u32(is), fny = get_u32(is), fnz = get_u32(is);
  const std::uint32_t fnc = get_u32(is);
  if (!is) throw DataError("truncated header in '" + path + "'");
  if (int(fnx) != grid.nx || int(fny) != grid.ny || int(fnz) != grid.nz)
    throw DataError("grid mismatch in '" + path + "': file has " +
                    std::to_string(fnx) + "x" + std::to_string(fny) + "x" +
                    std::to_string(fnz) + ", run expects " +
                    std::to_string(grid.nx) + "x" + std::to_string(grid.ny) +
                    "x" + std::to_string(grid.nz));
  if (int(fnc) != lay.count)
    throw DataError("component count mismatch in '" + path + "': file has " +
                    std::to_string(fnc) + ", layout needs " +
                    std::to_string(lay.count));

  FieldSnapshot f(grid, lay);
  const std::size_t n = f.n();
  is.read(reinterpret_cast<char*>(f.data.data()),
          std::streamsize(f.data.size() * 8));
  if (std::size_t(is.gcount()) != f.data.size() * 8)
    throw DataError("truncated body in '" + path + "': expected " +
                    std::to_string(f.data.size() * 8) + " bytes, got " +
                    std::to_string(is.gcount()));
  swap_if_big(f.data.data(), f.data.size());

  for (int c = 0; c < lay.count; ++c) {
    const double* p = f.comp(c);
    for (std::size_t q = 0; q < n; ++q)
      if (!std::isfinite(p[q]))
        throw DataError("non-finite value in component " + lay.names[c] +
                        " of '" + path + "'");
  }

  if (is_spacetime(lay)) {
    for (int c : {fo::LNALPHA, fo::LNPHI}) {
      double* p = f.comp(c);
      const char* what = c == fo::LNALPHA ? "lapse" : "conformal factor";
      for (std::size_t q = 0; q < n; ++q) {
        if (!(p[q] > 0.0))
          throw DataError(std::string("non-positive ") + what + " (" +
                          std::to_string(p[q]) + ") in '" + path + "'");
        p[q] = std::log(p[q]);
      }
    }
    double drift = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      Sym3 g;
      for (int s = 0; s < 6; ++s) g[s] = f.comp(fo::GT + s)[q];
      drift = std::max(drift, std::abs(det_sym3(g) - 1.0));
    }
    if (rep) rep->max_det_drift = drift;
  } else if (rep) {
    rep->max_det_drift = 0.0;
  }
  return f;
}

}  // namespace curlclean
