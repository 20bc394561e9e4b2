#pragma once

// Distribution files.
//
// CSV:
//   # distribution time_origin=.. time_spacing=.. time_count=.. freq_origin=.. freq_spacing=.. freq_count=.. kernel=<tag>
//   ix,iw,re,im
// where ix and iw are flat node indices on the time and frequency grids.
//
// Binary (.bin): "TFDB", u32 version, u32 dim, then per grid (time, then
// frequency) dim f64 origins, dim f64 spacings, dim u64 counts; u32 tag
// length and tag bytes; then little-endian f64 (re, im) pairs, time-major.

#include <iosfwd>
#include <string>

#include "tfu/engine.hpp"

namespace tfu {

void write_distribution_csv(std::ostream& out, const Distribution& d);
Distribution read_distribution_csv(std::istream& in);

void write_distribution_bin(std::ostream& out, const Distribution& d);
Distribution read_distribution_bin(std::istream& in);

// Picks the binary format for a `.bin` extension, CSV otherwise.
void write_distribution(const std::string& path, const Distribution& d);
Distribution read_distribution(const std::string& path);

}  // namespace tfu
