#pragma once

// Signal CSV format:
//
//   # grid origin=<o1[,o2..]> spacing=<s1[,..]> count=<c1[,..]> domain=<time|frequency>
//   index,re,im
//   0,<re>,<im>
//   ...
//
// Values are written with 17 significant digits so they round-trip exactly.
// Frequency-domain files may carry an extra `dual_origin=` key.

#include <iosfwd>
#include <string>
#include <vector>

#include "tfu/grid.hpp"

namespace tfu {

void write_signal_csv(std::ostream& out, const Signal& s);
void write_signal_csv(const std::string& path, const Signal& s);

// Throws FormatError naming the offending field or line.
Signal read_signal_csv(std::istream& in);
Signal read_signal_csv(const std::string& path);

namespace detail {
std::vector<double> parse_number_list(const std::string& text, const std::string& field);
}  // namespace detail

}  // namespace tfu
