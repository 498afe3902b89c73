// End-to-end tests that drive the installed CLI binary as a subprocess.
// The binary path arrives via --cli=<path> (wired up in CMake).

#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdio>
#include <string>
#include <vector>

#include <doctest.h>

#include "ringloss/csv.hpp"
#include "ringloss/rng.hpp"
#include "support/subprocess.hpp"
#include "support/synth.hpp"

using namespace ringloss;
using subprocess::RunResult;
using subprocess::TempDir;

namespace {

std::string g_cli;

RunResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), g_cli);
  return subprocess::run(args);
}

std::string write_dataset(const TempDir& dir, const std::string& name,
                          std::uint64_t seed, std::size_t n,
                          bool with_target) {
  SplitMix64 rng(seed);
  const Dataset ds = synth::random_dataset(rng, n, with_target);
  const std::string path = dir.file(name);
  write_csv_file(ds, path);
  return path;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string last_cell(const std::string& line) {
  return line.substr(line.rfind(',') + 1);
}

}  // namespace

TEST_CASE("validate accepts clean data and reports violations with lines") {
  const TempDir dir;
  const std::string clean = write_dataset(dir, "clean.csv", 1, 10, true);
  const RunResult ok = cli({"validate", "--data", clean});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("no violations") != std::string::npos);

  // Break row 2 (file line 4): inner diameter above outer.
  SplitMix64 rng(2);
  Dataset ds = synth::random_dataset(rng, 5, true);
  ds.records[2].inner_diameter_mm = 30.0;
  ds.records[2].outer_diameter_mm = 20.0;
  const std::string bad = dir.file("bad.csv");
  write_csv_file(ds, bad);
  const RunResult fail = cli({"validate", "--data", bad});
  CHECK(fail.exit_code == 2);
  CHECK(fail.out.find(":4:") != std::string::npos);
  CHECK(fail.out.find("inner_diameter") != std::string::npos);
}

TEST_CASE("validate propagates file and schema problems as 3 and 2") {
  const TempDir dir;
  CHECK(cli({"validate", "--data", dir.file("absent.csv")}).exit_code == 3);

  const std::string broken = dir.file("broken.csv");
  subprocess::write_file(broken, "volume_mm3,metal\n1.0,14k-WG\n");
  const RunResult r = cli({"validate", "--data", broken});
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("usage problems exit 1 with usage text") {
  const RunResult none = cli({});
  CHECK(none.exit_code == 1);

  const RunResult unknown = cli({"compare", "--frobnicate"});
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.err.find("Usage") != std::string::npos);

  const TempDir dir;
  const std::string csv = write_dataset(dir, "d.csv", 3, 12, true);
  CHECK(cli({"train", "--data", csv, "--model-out", dir.file("m.json"),
             "--method", "perceptron", "--seed", "1"})
            .exit_code == 1);
  CHECK(cli({"train", "--data", csv, "--model-out", dir.file("m.json"),
             "--method", "knn", "--seed", "1", "--k", "2", "--k-auto"})
            .exit_code == 1);
  // --seed is mandatory.
  CHECK(cli({"compare", "--data", csv}).exit_code == 1);
}

TEST_CASE("train fits, reports test metrics and saves the model") {
  const TempDir dir;
  const std::string csv = write_dataset(dir, "d.csv", 4, 30, true);
  for (const std::string method : {"linear", "tree", "forest", "knn"}) {
    CAPTURE(method);
    const std::string model = dir.file("m_" + method + ".json");
    const RunResult r = cli({"train", "--data", csv, "--model-out", model,
                             "--method", method, "--seed", "11"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("test MAE") != std::string::npos);
    CHECK(r.out.find("train rows: 24") != std::string::npos);
    CHECK(std::filesystem::exists(model));
  }

  // knn defaults to cross-validated k and says which k won.
  const RunResult knn = cli({"train", "--data", csv, "--model-out",
                             dir.file("k.json"), "--method", "knn", "--seed",
                             "11"});
  CHECK(knn.out.find("k: ") != std::string::npos);

  // Oversized explicit k is a data error.
  CHECK(cli({"train", "--data", csv, "--model-out", dir.file("k2.json"),
             "--method", "knn", "--seed", "11", "--k", "50"})
            .exit_code == 2);
}

TEST_CASE("train and compare are byte-deterministic across runs") {
  const TempDir dir;
  const std::string csv = write_dataset(dir, "d.csv", 5, 26, true);

  const std::string m1 = dir.file("m1.json");
  const std::string m2 = dir.file("m2.json");
  CHECK(cli({"train", "--data", csv, "--model-out", m1, "--method", "forest",
             "--seed", "7"})
            .exit_code == 0);
  CHECK(cli({"train", "--data", csv, "--model-out", m2, "--method", "forest",
             "--seed", "7"})
            .exit_code == 0);
  CHECK(subprocess::read_all(m1) == subprocess::read_all(m2));

  const RunResult c1 = cli({"compare", "--data", csv, "--seed", "42"});
  const RunResult c2 = cli({"compare", "--data", csv, "--seed", "42"});
  CHECK(c1.exit_code == 0);
  CHECK(c2.exit_code == 0);
  CHECK(c1.out == c2.out);

  const std::string r1 = dir.file("r1.json");
  const std::string r2 = dir.file("r2.json");
  CHECK(cli({"compare", "--data", csv, "--seed", "42", "--out", r1})
            .exit_code == 0);
  CHECK(cli({"compare", "--data", csv, "--seed", "42", "--out", r2})
            .exit_code == 0);
  CHECK(subprocess::read_all(r1) == subprocess::read_all(r2));
}

TEST_CASE("compare prints the four canonical rows in order") {
  const TempDir dir;
  const std::string csv = write_dataset(dir, "d.csv", 6, 26, true);
  const RunResult r = cli({"compare", "--data", csv, "--seed", "42"});
  REQUIRE(r.exit_code == 0);

  const auto linear = r.out.find("Linear Regression");
  const auto forest = r.out.find("Random Forest Regressor");
  const auto tree = r.out.find("Decision Tree Regressor");
  const auto knn = r.out.find("K-Nearest Neighbour Regressor");
  CHECK(linear != std::string::npos);
  CHECK(forest != std::string::npos);
  CHECK(tree != std::string::npos);
  CHECK(knn != std::string::npos);
  CHECK(linear < forest);
  CHECK(forest < tree);
  CHECK(tree < knn);
}

TEST_CASE("predict appends predicted_gross_loss_pct and ignores targets") {
  const TempDir dir;
  const std::string csv = write_dataset(dir, "train.csv", 7, 30, true);
  const std::string model = dir.file("m.json");
  REQUIRE(cli({"train", "--data", csv, "--model-out", model, "--method",
               "tree", "--seed", "3"})
              .exit_code == 0);

  // Target-free input.
  SplitMix64 rng(8);
  Dataset fresh = synth::random_dataset(rng, 9, false);
  const std::string input = dir.file("fresh.csv");
  write_csv_file(fresh, input);

  const std::string out = dir.file("pred.csv");
  const RunResult r = cli({"predict", "--model", model, "--input", input,
                           "--out", out});
  REQUIRE(r.exit_code == 0);
  const auto lines = split_lines(subprocess::read_all(out));
  REQUIRE(lines.size() == 10);  // header + 9 rows
  CHECK(lines[0] ==
        csv_header_line(false) + ",predicted_gross_loss_pct");
  // Each row must echo the input record verbatim, then the prediction.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string echoed = csv_record_line(fresh.records[i - 1], false);
    CHECK(lines[i].substr(0, echoed.size() + 1) == echoed + ",");
    CHECK(!last_cell(lines[i]).empty());
  }

  // Same records with two different sets of target values: the prediction
  // column must not move.
  Dataset labeled = fresh;
  labeled.has_target_column = true;
  for (RingRecord& rec : labeled.records) rec.gross_loss_pct = 5.0;
  const std::string in_a = dir.file("a.csv");
  write_csv_file(labeled, in_a);
  for (RingRecord& rec : labeled.records) rec.gross_loss_pct = 9.0;
  const std::string in_b = dir.file("b.csv");
  write_csv_file(labeled, in_b);

  const std::string out_a = dir.file("pa.csv");
  const std::string out_b = dir.file("pb.csv");
  REQUIRE(cli({"predict", "--model", model, "--input", in_a, "--out", out_a})
              .exit_code == 0);
  REQUIRE(cli({"predict", "--model", model, "--input", in_b, "--out", out_b})
              .exit_code == 0);
  const auto la = split_lines(subprocess::read_all(out_a));
  const auto lb = split_lines(subprocess::read_all(out_b));
  REQUIRE(la.size() == lb.size());
  for (std::size_t i = 1; i < la.size(); ++i) {
    CHECK(last_cell(la[i]) == last_cell(lb[i]));
    // And they match the target-free run row for row.
    CHECK(last_cell(la[i]) == last_cell(lines[i]));
  }
}

TEST_CASE("evaluate scores a saved model and needs labeled data") {
  const TempDir dir;
  const std::string csv = write_dataset(dir, "train.csv", 9, 30, true);
  const std::string model = dir.file("m.json");
  REQUIRE(cli({"train", "--data", csv, "--model-out", model, "--method",
               "linear", "--seed", "5"})
              .exit_code == 0);

  const RunResult ok = cli({"evaluate", "--model", model, "--data", csv});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("MAE:") != std::string::npos);
  CHECK(ok.out.find("RMSPE:") != std::string::npos);

  const std::string unlabeled = write_dataset(dir, "u.csv", 10, 8, false);
  CHECK(cli({"evaluate", "--model", model, "--data", unlabeled}).exit_code ==
        2);
  CHECK(cli({"evaluate", "--model", dir.file("no.json"), "--data", csv})
            .exit_code == 3);

  // A corrupted model file is a format problem, not a data problem.
  const std::string broken = dir.file("broken.json");
  subprocess::write_file(broken, "{\"format_version\": 1");
  CHECK(cli({"evaluate", "--model", broken, "--data", csv}).exit_code == 3);
}

int main(int argc, char** argv) {
  doctest::Context context;
  std::vector<char*> forwarded;
  for (int i = 0; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0)
      g_cli = std::string(arg.substr(6));
    else
      forwarded.push_back(argv[i]);
  }
  if (g_cli.empty()) {
    std::fprintf(stderr, "missing --cli=<path to the ringloss binary>\n");
    return 1;
  }
  context.applyCommandLine(static_cast<int>(forwarded.size()),
                           forwarded.data());
  return context.run();
}
