#include "swlw/io.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "swlw/errors.hpp"

namespace swlw {

namespace {

static_assert(std::endian::native == std::endian::little, "binary snapshots assume little-endian");

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw IoError(path, std::strerror(errno));
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

double parse_double(const std::string& s, const std::string& path) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw IoError(path, "malformed number '" + s + "'");
  return v;
}

nlohmann::json header_of(const FieldSnapshot& s) {
  nlohmann::json h;
  h["format"] = "swlw-snapshot";
  h["version"] = 1;
  h["frame"] = frame_name(s.frame);
  h["t"] = s.t;
  h["points"] = s.coords.size();
  std::vector<std::string> names;
  for (const auto& f : s.fields) names.push_back(f.first);
  h["fields"] = names;
  return h;
}

FieldSnapshot from_header(const nlohmann::json& h, const std::string& path) {
  if (h.value("format", "") != "swlw-snapshot") throw IoError(path, "not a snapshot file");
  FieldSnapshot s;
  s.frame = parse_frame(h.at("frame").get<std::string>());
  s.t = h.at("t").get<double>();
  const auto n = h.at("points").get<std::size_t>();
  s.coords.resize(n);
  for (const auto& name : h.at("fields")) s.fields.emplace_back(name.get<std::string>(), std::vector<double>(n));
  return s;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_snapshot(const std::string& path, const FieldSnapshot& s, SnapshotFormat format) {
  for (const auto& f : s.fields)
    if (f.second.size() != s.coords.size()) throw ShapeError("field '" + f.first + "' has wrong length");
  const std::string header = header_of(s).dump();
  if (format == SnapshotFormat::Binary) {
    auto out = open_out(path, std::ios::binary);
    out << header << '\n';
    auto put = [&](const std::vector<double>& v) {
      out.write(reinterpret_cast<const char*>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(double)));
    };
    put(s.coords);
    for (const auto& f : s.fields) put(f.second);
    finish(out, path);
    return;
  }
  auto out = open_out(path);
  out << "# " << header << '\n' << "coord";
  for (const auto& f : s.fields) out << ',' << f.first;
  out << '\n';
  for (std::size_t i = 0; i < s.coords.size(); ++i) {
    out << format_double(s.coords[i]);
    for (const auto& f : s.fields) out << ',' << format_double(f.second[i]);
    out << '\n';
  }
  finish(out, path);
}

FieldSnapshot read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, std::strerror(errno));
  std::string line;
  if (!std::getline(in, line)) throw IoError(path, "empty file");
  const bool csv = line.rfind("# ", 0) == 0;
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(csv ? line.substr(2) : line);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(path, std::string("bad header: ") + ex.what());
  }
  FieldSnapshot s;
  try {
    s = from_header(h, path);
  } catch (const nlohmann::json::exception& ex) {
    throw IoError(path, std::string("bad header: ") + ex.what());
  }
  const std::size_t n = s.coords.size();
  if (!csv) {
    auto get = [&](std::vector<double>& v) {
      in.read(reinterpret_cast<char*>(v.data()), static_cast<std::streamsize>(n * sizeof(double)));
      if (static_cast<std::size_t>(in.gcount()) != n * sizeof(double)) throw IoError(path, "truncated data");
    };
    get(s.coords);
    for (auto& f : s.fields) get(f.second);
    return s;
  }
  std::getline(in, line);  // column names
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw IoError(path, "truncated data");
    std::stringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');
    s.coords[i] = parse_double(cell, path);
    for (auto& f : s.fields) {
      if (!std::getline(row, cell, ',')) throw IoError(path, "short row");
      f.second[i] = parse_double(cell, path);
    }
  }
  return s;
}

void write_table(const std::string& path, const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_double(r[i]);
    out << '\n';
  }
  finish(out, path);
}

void write_monitors(const std::string& path, const std::vector<MonitorRecord>& stream) {
  std::vector<std::vector<double>> rows;
  rows.reserve(stream.size());
  for (const auto& m : stream) rows.push_back(m.values());
  write_table(path, MonitorRecord::columns(), rows);
}

void write_sweep(const std::string& path, const std::vector<SweepRow>& rows) {
  auto out = open_out(path);
  const auto& cols = SweepRow::columns();
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  for (const auto& r : rows) {
    out << format_double(r.eps) << ',' << format_double(r.alpha) << ',' << format_double(r.beta)
        << ',' << format_double(r.delta) << ',' << r.status;
    for (double v : r.values()) out << ',' << format_double(v);
    out << '\n';
  }
  finish(out, path);
}

std::string content_hash(const std::string& bytes) {
  const std::string blob = "blob " + std::to_string(bytes.size()) + std::string(1, '\0') + bytes;
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(blob.data(), blob.size(), md, &len, EVP_sha1(), nullptr) != 1)
    throw Error("SHA-1 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  auto out = open_out(path, std::ios::binary);
  out << text;
  finish(out, path);
}

void ensure_directory(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError(dir, ec.message());
}

}  // namespace swlw
