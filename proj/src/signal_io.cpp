#include "tfu/signal_io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "tfu/error.hpp"

namespace tfu {

namespace {

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

double to_double(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw FormatError("malformed number '" + s + "' in field '" + field + "'");
  }
}

std::map<std::string, std::string> parse_header(const std::string& line) {
  std::istringstream is(line);
  std::string hash, word;
  is >> hash >> word;
  if (hash != "#" || word != "grid") throw FormatError("signal file must start with '# grid'");
  std::map<std::string, std::string> kv;
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw FormatError("header token '" + tok + "' is not key=value");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"origin", "spacing", "count", "domain"}) {
    if (!kv.count(key)) throw FormatError(std::string("signal header is missing field '") + key + "'");
  }
  return kv;
}

}  // namespace

namespace detail {

std::vector<double> parse_number_list(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) out.push_back(to_double(item, field));
  if (out.empty()) throw FormatError("field '" + field + "' is empty");
  return out;
}

}  // namespace detail

void write_signal_csv(std::ostream& out, const Signal& s) {
  const Grid& g = s.grid();
  out << "# grid origin=" << join(g.origin()) << " spacing=" << join(g.spacing()) << " count=" << join(g.count())
      << " domain=" << (s.domain() == Domain::time ? "time" : "frequency");
  if (s.domain() == Domain::frequency) out << " dual_origin=" << join(s.dual_origin());
  out << "\nindex,re,im\n" << std::setprecision(17);
  for (std::size_t i = 0; i < s.size(); ++i) out << i << ',' << s[i].real() << ',' << s[i].imag() << '\n';
}

void write_signal_csv(const std::string& path, const Signal& s) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open '" + path + "' for writing");
  write_signal_csv(out, s);
  if (!out) throw FormatError("failed writing '" + path + "'");
}

Signal read_signal_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty signal file");
  const auto kv = parse_header(line);

  const auto origin = detail::parse_number_list(kv.at("origin"), "origin");
  const auto spacing = detail::parse_number_list(kv.at("spacing"), "spacing");
  const auto count_d = detail::parse_number_list(kv.at("count"), "count");
  std::vector<std::int64_t> count;
  for (double c : count_d) {
    if (c != static_cast<double>(static_cast<std::int64_t>(c))) throw FormatError("field 'count' must be integral");
    count.push_back(static_cast<std::int64_t>(c));
  }
  Domain domain;
  if (kv.at("domain") == "time") {
    domain = Domain::time;
  } else if (kv.at("domain") == "frequency") {
    domain = Domain::frequency;
  } else {
    throw FormatError("field 'domain' must be time or frequency");
  }
  Grid grid = [&] {
    try {
      return make_grid(origin, spacing, count);
    } catch (const InvalidGrid& e) {
      throw FormatError(std::string("invalid grid in header: ") + e.what());
    }
  }();

  if (!std::getline(in, line) || line.rfind("index", 0) != 0) throw FormatError("missing 'index,re,im' column line");
  std::vector<cplx> v(grid.total());
  std::vector<bool> seen(grid.total(), false);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw FormatError("malformed row " + std::to_string(rows + 3) + ": '" + line + "'");
    }
    const double idx = to_double(a, "index");
    if (idx < 0 || idx >= static_cast<double>(grid.total()) || idx != static_cast<double>(static_cast<std::size_t>(idx))) {
      throw FormatError("row index " + a + " out of range");
    }
    const auto i = static_cast<std::size_t>(idx);
    v[i] = {to_double(b, "re"), to_double(c, "im")};
    seen[i] = true;
    ++rows;
  }
  if (rows != grid.total() || std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw FormatError("signal file has " + std::to_string(rows) + " rows, grid expects " + std::to_string(grid.total()));
  }
  Signal s(grid, std::move(v), domain);
  if (domain == Domain::frequency && kv.count("dual_origin")) {
    s = s.with_dual_origin(detail::parse_number_list(kv.at("dual_origin"), "dual_origin"));
  }
  return s;
}

Signal read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_signal_csv(in);
}

}  // namespace tfu
