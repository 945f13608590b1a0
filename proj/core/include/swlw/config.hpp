#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swlw/euler_limit.hpp"
#include "swlw/galerkin.hpp"
#include "swlw/sweep.hpp"

namespace swlw {

enum class SnapshotFormat { Binary, Csv };

const char* snapshot_format_name(SnapshotFormat f);

struct EulerSettings {
  EulerParams params;
  int cells = 400;
  double t_end = 0.2;
  std::string profile = "dam-break";  // or "initial-data"
  double rho_left = 2.0;
  double rho_right = 1.0;
  double width = 0.0;  // 0 gives a sharp jump
  int samples = 20;
};

struct NlsSettings {
  int points = 256;  // intervals
  double dt = 1e-4;
  bool cubic = true;
};

struct EntropySettings {
  int quadrature_nodes = 32;
  int samples = 10000;
  double tolerance = 1e-10;
  double rho_max = 4.0;
  double u_max = 3.0;
  double bump_a = -1.0;  // support of the "bump" generator
  double bump_b = 1.0;
};

// Everything a CLI invocation needs, from a single YAML document.
struct RunConfig {
  SolverConfig solver;
  SweepSettings sweep;
  EulerSettings euler;
  NlsSettings nls;
  EntropySettings entropy;
  SnapshotFormat snapshot_format = SnapshotFormat::Binary;
  std::uint64_t seed = 1;
  std::string output_dir = "out";
  std::string source;  // raw document text, hashed into manifests
};

// Throws IoError when unreadable and ValidationError listing every violation otherwise.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Configured output directory, resolved under SWLW_OUTPUT_ROOT when it is relative.
std::string resolve_output_dir(const RunConfig& cfg);

}  // namespace swlw
