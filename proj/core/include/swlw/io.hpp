#pragma once

#include <string>
#include <vector>

#include "swlw/config.hpp"
#include "swlw/fields.hpp"
#include "swlw/invariants.hpp"
#include "swlw/sweep.hpp"

namespace swlw {

// Shortest text that round-trips: 17 significant digits, "nan"/"inf" for non-finite values.
std::string format_double(double v);

// Binary: one JSON header line, then little-endian float64 coords and fields in header order.
// CSV: a "# " JSON header line, a column line, then one row per coordinate.
void write_snapshot(const std::string& path, const FieldSnapshot& s, SnapshotFormat format);
FieldSnapshot read_snapshot(const std::string& path);

void write_monitors(const std::string& path, const std::vector<MonitorRecord>& stream);
void write_sweep(const std::string& path, const std::vector<SweepRow>& rows);

// Generic CSV with a header line; every value formatted by format_double.
void write_table(const std::string& path, const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows);

// Git blob id of a byte string: SHA-1 of "blob <size>\0" + bytes.
std::string content_hash(const std::string& bytes);

void write_text(const std::string& path, const std::string& text);
void ensure_directory(const std::string& dir);

}  // namespace swlw
