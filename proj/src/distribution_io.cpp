#include "tfu/distribution_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "tfu/error.hpp"
#include "tfu/signal_io.hpp"

namespace tfu {

namespace {

constexpr std::uint32_t kBinVersion = 1;

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

Grid grid_from(const std::map<std::string, std::string>& kv, const std::string& prefix) {
  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(prefix + key);
    if (it == kv.end()) throw FormatError("distribution header is missing field '" + prefix + key + "'");
    return it->second;
  };
  const auto origin = detail::parse_number_list(get("origin"), prefix + "origin");
  const auto spacing = detail::parse_number_list(get("spacing"), prefix + "spacing");
  const auto counts = detail::parse_number_list(get("count"), prefix + "count");
  std::vector<std::int64_t> count;
  for (double c : counts) {
    if (c != std::floor(c)) throw FormatError("field '" + prefix + "count' must hold integers");
    count.push_back(static_cast<std::int64_t>(c));
  }
  try {
    return make_grid(origin, spacing, count);
  } catch (const InvalidGrid& e) {
    throw FormatError("invalid " + prefix + "grid: " + e.what());
  }
}

void check_shapes(const Distribution& d) {
  if (d.values.size() != d.time_grid.total() * d.freq_grid.total()) {
    throw FormatError("distribution value count does not match its grids");
  }
}

template <class T>
void put(std::ostream& out, T v) {
  if constexpr (std::endian::native == std::endian::big) {
    unsigned char b[sizeof(T)];
    std::memcpy(b, &v, sizeof(T));
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
    out.write(reinterpret_cast<const char*>(b), sizeof(T));
  } else {
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
  }
}

template <class T>
T get(std::istream& in, const char* what) {
  unsigned char b[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(b), sizeof(T))) throw FormatError(std::string("binary distribution truncated at ") + what);
  if constexpr (std::endian::native == std::endian::big) {
    for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(b[i], b[sizeof(T) - 1 - i]);
  }
  T v;
  std::memcpy(&v, b, sizeof(T));
  return v;
}

void put_grid(std::ostream& out, const Grid& g) {
  for (double o : g.origin()) put(out, o);
  for (double s : g.spacing()) put(out, s);
  for (std::size_t c : g.count()) put(out, static_cast<std::uint64_t>(c));
}

Grid get_grid(std::istream& in, std::uint32_t dim) {
  std::vector<double> origin(dim), spacing(dim);
  std::vector<std::int64_t> count(dim);
  for (auto& o : origin) o = get<double>(in, "grid origin");
  for (auto& s : spacing) s = get<double>(in, "grid spacing");
  for (auto& c : count) c = static_cast<std::int64_t>(get<std::uint64_t>(in, "grid count"));
  try {
    return make_grid(origin, spacing, count);
  } catch (const InvalidGrid& e) {
    throw FormatError(std::string("invalid grid in binary distribution: ") + e.what());
  }
}

bool has_bin_extension(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".bin") == 0;
}

}  // namespace

void write_distribution_csv(std::ostream& out, const Distribution& d) {
  check_shapes(d);
  out << "# distribution time_origin=" << join(d.time_grid.origin()) << " time_spacing=" << join(d.time_grid.spacing())
      << " time_count=" << join(d.time_grid.count()) << " freq_origin=" << join(d.freq_grid.origin())
      << " freq_spacing=" << join(d.freq_grid.spacing()) << " freq_count=" << join(d.freq_grid.count())
      << " kernel=" << d.kernel_tag << "\n";
  out << "ix,iw,re,im\n";
  out << std::setprecision(17);
  const std::size_t W = d.freq_grid.total();
  for (std::size_t n = 0; n < d.time_grid.total(); ++n) {
    for (std::size_t k = 0; k < W; ++k) {
      const cplx v = d.values[n * W + k];
      out << n << ',' << k << ',' << v.real() << ',' << v.imag() << '\n';
    }
  }
}

Distribution read_distribution_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty distribution file");
  const std::string prefix = "# distribution ";
  if (line.rfind(prefix, 0) != 0) throw FormatError("distribution file must start with '# distribution'");
  const auto kpos = line.find(" kernel=");
  if (kpos == std::string::npos) throw FormatError("distribution header is missing field 'kernel'");
  const std::string tag = line.substr(kpos + 8);
  std::map<std::string, std::string> kv;
  std::istringstream hs(line.substr(prefix.size(), kpos - prefix.size()));
  std::string tok;
  while (hs >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("header token '" + tok + "' is not key=value");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  Grid t = grid_from(kv, "time_");
  Grid w = grid_from(kv, "freq_");
  if (t.dim() != w.dim()) throw FormatError("time and frequency grids differ in dimension");
  if (!std::getline(in, line) || line != "ix,iw,re,im") throw FormatError("expected column header 'ix,iw,re,im'");

  const std::size_t W = w.total();
  std::vector<cplx> values(t.total() * W);
  std::vector<bool> seen(values.size(), false);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream rs(line);
    std::string a, b, c, e;
    if (!std::getline(rs, a, ',') || !std::getline(rs, b, ',') || !std::getline(rs, c, ',') || !std::getline(rs, e)) {
      throw FormatError("malformed distribution row '" + line + "'");
    }
    std::size_t ix = 0, iw = 0;
    double re = 0, im = 0;
    try {
      ix = std::stoul(a);
      iw = std::stoul(b);
      re = std::stod(c);
      im = std::stod(e);
    } catch (const std::exception&) {
      throw FormatError("malformed distribution row '" + line + "'");
    }
    if (ix >= t.total() || iw >= W) throw FormatError("distribution row index out of range: '" + line + "'");
    if (seen[ix * W + iw]) throw FormatError("duplicate distribution row: '" + line + "'");
    seen[ix * W + iw] = true;
    values[ix * W + iw] = {re, im};
    ++rows;
  }
  if (rows != values.size()) throw FormatError("distribution file has " + std::to_string(rows) + " rows, expected " +
                                               std::to_string(values.size()));
  return Distribution{std::move(t), std::move(w), std::move(values), tag, false};
}

void write_distribution_bin(std::ostream& out, const Distribution& d) {
  check_shapes(d);
  out.write("TFDB", 4);
  put(out, kBinVersion);
  put(out, static_cast<std::uint32_t>(d.time_grid.dim()));
  put_grid(out, d.time_grid);
  put_grid(out, d.freq_grid);
  put(out, static_cast<std::uint32_t>(d.kernel_tag.size()));
  out.write(d.kernel_tag.data(), static_cast<std::streamsize>(d.kernel_tag.size()));
  for (const cplx& v : d.values) {
    put(out, v.real());
    put(out, v.imag());
  }
}

Distribution read_distribution_bin(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string(magic, 4) != "TFDB") throw FormatError("binary distribution has no TFDB magic");
  const auto version = get<std::uint32_t>(in, "version");
  if (version != kBinVersion) throw FormatError("unsupported binary distribution version " + std::to_string(version));
  const auto dim = get<std::uint32_t>(in, "dim");
  if (dim == 0 || dim > 8) throw FormatError("implausible dimension " + std::to_string(dim) + " in binary distribution");
  Grid t = get_grid(in, dim);
  Grid w = get_grid(in, dim);
  const auto len = get<std::uint32_t>(in, "tag length");
  std::string tag(len, '\0');
  if (len && !in.read(tag.data(), len)) throw FormatError("binary distribution truncated at kernel tag");
  std::vector<cplx> values(t.total() * w.total());
  for (auto& v : values) {
    const double re = get<double>(in, "values");
    v = {re, get<double>(in, "values")};
  }
  return Distribution{std::move(t), std::move(w), std::move(values), std::move(tag), false};
}

void write_distribution(const std::string& path, const Distribution& d) {
  const bool bin = has_bin_extension(path);
  std::ofstream out(path, bin ? std::ios::binary : std::ios::out);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  bin ? write_distribution_bin(out, d) : write_distribution_csv(out, d);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

Distribution read_distribution(const std::string& path) {
  const bool bin = has_bin_extension(path);
  std::ifstream in(path, bin ? std::ios::binary : std::ios::in);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return bin ? read_distribution_bin(in) : read_distribution_csv(in);
}

}  // namespace tfu
