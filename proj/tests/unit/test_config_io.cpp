#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "swlw/config.hpp"
#include "swlw/errors.hpp"
#include "swlw/io.hpp"

using namespace swlw;
namespace fs = std::filesystem;

namespace {

std::string joined(const ValidationError& e) {
  std::string s;
  for (const auto& v : e.violations()) s += v + "\n";
  return s + e.what();
}

std::string parse_error(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const ValidationError& e) {
    return joined(e);
  }
  return "";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("swlw_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

FieldSnapshot awkward_snapshot() {
  FieldSnapshot s;
  s.frame = Frame::Eulerian;
  s.t = 0.1 + 0.2;
  s.coords = {0.0, 1.0 / 3.0, 2.0 / 3.0, 1.0};
  s.set("rho", {1e-300, 3.141592653589793, -0.0, 5e-324});
  s.set("u", {std::nan(""), INFINITY, -INFINITY, 1.0 / 7.0});
  return s;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isnan(a[i]) && std::isnan(b[i])) continue;
    if (std::memcmp(&a[i], &b[i], sizeof(double)) != 0) return false;
  }
  return true;
}

}  // namespace

TEST(Config, MinimalDocumentUsesDefaults) {
  const RunConfig c = parse_config_text("gas:\n  gamma: 2.0\n");
  EXPECT_EQ(c.solver.n, 64);
  EXPECT_EQ(c.solver.dt, 1e-4);
  EXPECT_EQ(c.solver.integrator, Integrator::LawsonRK4);
  EXPECT_EQ(c.sweep.eps_ladder.size(), 4u);
  EXPECT_EQ(c.sweep.alpha_exp, 0.75);
  EXPECT_EQ(c.euler.cells, 400);
  EXPECT_EQ(c.snapshot_format, SnapshotFormat::Binary);
  EXPECT_EQ(c.output_dir, "out");
  EXPECT_EQ(c.seed, 1u);
  EXPECT_EQ(parse_config_text("").solver.n, 64);
}

TEST(Config, OverridesApply) {
  const RunConfig c = parse_config_text(
      "solver:\n  n: 32\n  integrator: rk4\n  h_form: conservative\n  snapshot_format: csv\n"
      "euler:\n  flux: hll\nsweep:\n  eps_ladder: [0.2, 0.1, 0.05]\n  workers: 2\nseed: 9\n");
  EXPECT_EQ(c.solver.n, 32);
  EXPECT_EQ(c.solver.integrator, Integrator::RK4);
  EXPECT_EQ(c.solver.h_form, HForm::Conservative);
  EXPECT_EQ(c.snapshot_format, SnapshotFormat::Csv);
  EXPECT_EQ(c.euler.params.flux, EulerFlux::HLL);
  EXPECT_EQ(c.sweep.eps_ladder, (std::vector<double>{0.2, 0.1, 0.05}));
  EXPECT_EQ(c.sweep.workers, 2);
  EXPECT_EQ(c.seed, 9u);
}

TEST(Config, ViolationsAreListed) {
  const std::string e = parse_error("gas:\n  gamma: 1.0\n  q: 3\nsweep:\n  alpha_exp: 0.4\n");
  EXPECT_NE(e.find("gamma > 1 required"), std::string::npos) << e;
  EXPECT_NE(e.find("q >= 2+2r violated: q=3, r=1"), std::string::npos) << e;
  EXPECT_NE(e.find("alpha_exp > 0.5"), std::string::npos) << e;
}

TEST(Config, UnknownKeyNamesLine) {
  const std::string e = parse_error("gas:\n  gamma: 2\n  bogus: 1\n");
  EXPECT_NE(e.find("line 3: unknown key 'gas.bogus'"), std::string::npos) << e;
  const std::string t = parse_error("solver:\n  n: many\n");
  EXPECT_NE(t.find("line 2"), std::string::npos) << t;
  EXPECT_NE(t.find("solver.n"), std::string::npos) << t;
}

TEST(Config, MissingFileIsIoError) {
  EXPECT_THROW(parse_config("/nonexistent/swlw.yaml"), IoError);
}

TEST(Config, OutputRootResolvesRelativeDirs) {
  RunConfig c;
  c.output_dir = "runs/a";
  ::setenv("SWLW_OUTPUT_ROOT", "/tmp/root", 1);
  EXPECT_EQ(resolve_output_dir(c), "/tmp/root/runs/a");
  c.output_dir = "/abs/b";
  EXPECT_EQ(resolve_output_dir(c), "/abs/b");
  ::unsetenv("SWLW_OUTPUT_ROOT");
  c.output_dir = "runs/a";
  EXPECT_EQ(resolve_output_dir(c), "runs/a");
}

TEST_F(TempDir, SnapshotRoundTripIsBitExact) {
  const FieldSnapshot s = awkward_snapshot();
  for (SnapshotFormat f : {SnapshotFormat::Binary, SnapshotFormat::Csv}) {
    const std::string p = path(std::string("snap.") + snapshot_format_name(f));
    write_snapshot(p, s, f);
    const FieldSnapshot r = read_snapshot(p);
    EXPECT_EQ(r.frame, s.frame);
    EXPECT_EQ(r.t, s.t);
    EXPECT_TRUE(same_bits(r.coords, s.coords));
    ASSERT_EQ(r.fields.size(), s.fields.size());
    for (std::size_t k = 0; k < s.fields.size(); ++k) {
      EXPECT_EQ(r.fields[k].first, s.fields[k].first);
      EXPECT_TRUE(same_bits(r.fields[k].second, s.fields[k].second)) << snapshot_format_name(f);
    }
  }
}

TEST_F(TempDir, EmptyMonitorStreamIsHeaderOnly) {
  write_monitors(path("m.csv"), {});
  std::string header;
  for (std::size_t i = 0; i < MonitorRecord::columns().size(); ++i)
    header += (i ? "," : "") + MonitorRecord::columns()[i];
  EXPECT_EQ(slurp(path("m.csv")), header + "\n");
}

TEST_F(TempDir, SweepTableHasOneLinePerRow) {
  std::vector<SweepRow> rows(3);
  rows[1].status = "positivity";
  rows[1].l1_rho = std::nan("");
  write_sweep(path("s.csv"), rows);
  std::ifstream in(path("s.csv"));
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].rfind("eps,alpha,beta,delta,status,l1_rho", 0), 0u);
  EXPECT_NE(lines[2].find(",positivity,nan,"), std::string::npos);
}

TEST_F(TempDir, UnwritablePathIsIoError) {
  EXPECT_THROW(write_text(path("missing/dir/file.txt"), "x"), IoError);
  EXPECT_THROW(read_snapshot(path("none.bin")), IoError);
}

TEST(Io, ContentHashMatchesGitBlobIds) {
  EXPECT_EQ(content_hash(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  EXPECT_EQ(content_hash("hello world\n"), "3b18e512dba79e4c8300dd08aeb37f8e728b8dad");
}

TEST(Io, FormatDoubleRoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, 1e-310, -2.5e300}) EXPECT_EQ(std::strtod(format_double(v).c_str(), nullptr), v);
  EXPECT_EQ(format_double(std::nan("")), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}
