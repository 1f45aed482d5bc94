#include <doctest.h>

#include <sstream>

#include "test_util.hpp"
#include "vcne/cli.hpp"
#include "vcne/embedding_io.hpp"

using namespace vcne;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string p(const fs::path& path) { return path.string(); }

// Metrics line -> f1 column
double f1_of(const std::string& line) {
  std::istringstream in(line);
  double precision, recall, f1;
  in >> precision >> recall >> f1;
  return f1;
}

}  // namespace

TEST_CASE("cli train: zero iterations writes normalised rows and a sidecar") {
  testutil::TempDir dir;
  testutil::write_file(dir / "path.txt", "0 1\n1 2\n");
  Run r = run({"train", "--edges", p(dir / "path.txt"), "--iters", "0", "--dim", "4", "--out", p(dir / "e.txt")});
  REQUIRE(r.code == 0);
  LoadedEmbeddings e = read_embeddings_text(dir / "e.txt");
  CHECK(e.table.rows() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(norm(e.table.row(i)) == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(fs::exists(dir / "e.txt.report.tsv"));
  const std::string sidecar = testutil::read_file(dir / "e.txt.config");
  CHECK(sidecar.find("command = train\n") == 0);
  CHECK(sidecar.find("dim = 4\n") != std::string::npos);
  CHECK(r.err.find("iters = 0\n") != std::string::npos);
}

TEST_CASE("cli train: same flags and seed give byte-identical files") {
  testutil::TempDir dir;
  testutil::write_file(dir / "g.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n4 0\n5 4\n");
  auto train_to = [&](const std::string& out) {
    return run({"train", "--edges", p(dir / "g.txt"), "--iters", "5", "--dim", "8", "--seed", "9", "--partitions",
                "3", "--threads", "2", "--out", p(dir / out)})
        .code;
  };
  REQUIRE(train_to("a.txt") == 0);
  REQUIRE(train_to("b.txt") == 0);
  CHECK(testutil::read_file(dir / "a.txt") == testutil::read_file(dir / "b.txt"));
}

TEST_CASE("cli train: binary output writes a remap file") {
  testutil::TempDir dir;
  testutil::write_file(dir / "g.txt", "10 20\n20 30\n");
  Run r = run({"train", "--edges", p(dir / "g.txt"), "--iters", "2", "--dim", "3", "--format", "binary", "--out",
               p(dir / "e.bin")});
  REQUIRE(r.code == 0);
  CHECK(read_embeddings_binary(dir / "e.bin").rows() == 3);
  CHECK(testutil::read_file(dir / "e.bin.remap") == "10 0\n20 1\n30 2\n");
}

TEST_CASE("cli: usage errors exit 2") {
  Run missing = run({"train"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--edges") != std::string::npos);
  CHECK(missing.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  testutil::TempDir dir;
  testutil::write_file(dir / "g.txt", "0 1\n");
  CHECK(run({"train", "--edges", p(dir / "g.txt"), "--mode", "deepwalk"}).code == 2);
  CHECK(run({"train", "--edges", p(dir / "g.txt"), "--dim", "0"}).code == 2);
  CHECK(run({"train", "--edges", p(dir / "missing.txt")}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"train", "--help"}).code == 0);
}

TEST_CASE("cli: runtime errors exit 1") {
  testutil::TempDir dir;
  testutil::write_file(dir / "bad.txt", "0 1\n1 x\n");
  Run r = run({"train", "--edges", p(dir / "bad.txt"), "--out", p(dir / "e.txt")});
  CHECK(r.code == 1);
  CHECK(r.err.find(":2:") != std::string::npos);
  testutil::write_file(dir / "loops.txt", "3 3\n");
  CHECK(run({"train", "--edges", p(dir / "loops.txt"), "--out", p(dir / "e.txt")}).code == 1);
}

TEST_CASE("cli: config file supplies defaults, flags override it") {
  testutil::TempDir dir;
  testutil::write_file(dir / "g.txt", "0 1\n1 2\n2 0\n2 3\n");
  testutil::write_file(dir / "run.conf", "# saved run\ncommand = train\nedges = " + p(dir / "g.txt") +
                                             "\ndim = 5\niters = 1\nout = " + p(dir / "e.txt") + "\n");
  Run r = run({"--config", p(dir / "run.conf"), "--dim", "6"});
  REQUIRE(r.code == 0);
  CHECK(read_embeddings_text(dir / "e.txt").table.dim() == 6);

  // the sidecar replays the run exactly
  fs::rename(dir / "e.txt", dir / "first.txt");
  REQUIRE(run({"--config", p(dir / "e.txt.config")}).code == 0);
  CHECK(testutil::read_file(dir / "e.txt") == testutil::read_file(dir / "first.txt"));

  testutil::write_file(dir / "broken.conf", "dim 5\n");
  CHECK(run({"--config", p(dir / "broken.conf")}).code == 2);
  CHECK(run({"--config", p(dir / "nope.conf")}).code == 2);
}

TEST_CASE("cli: boolean options accept explicit values") {
  testutil::TempDir dir;
  testutil::write_file(dir / "g.txt", "0 1\n1 2\n2 0\n2 3\n");
  Run r = run({"train", "--edges", p(dir / "g.txt"), "--iters", "1", "--dim", "2", "--exclude-neighbors=false",
               "--out", p(dir / "e.txt")});
  CHECK(r.code == 0);
  CHECK(r.err.find("exclude-neighbors = false") != std::string::npos);
}

TEST_CASE("parse_config") {
  std::istringstream in("a = 1\n  # c\nb=two words \n\n");
  auto kv = cli::parse_config(in);
  CHECK(kv.size() == 2);
  CHECK(kv["a"] == "1");
  CHECK(kv["b"] == "two words");
}

TEST_CASE("cli link-split, jaccard and eval-link") {
  testutil::TempDir dir;
  REQUIRE(run({"gen-sbm", "--blocks", "2", "--block-size", "40", "--p-in", "0.3", "--p-out", "0.02", "--seed", "2",
               "--out", p(dir / "g.txt")})
              .code == 0);
  REQUIRE(run({"link-split", "--edges", p(dir / "g.txt"), "--holdout", "0.05", "--seed", "2", "--out-dir",
               p(dir / "sp")})
              .code == 0);
  for (const char* f : {"core.txt", "train.txt", "val.txt", "test.txt", "link-split.config"})
    CHECK(fs::exists(dir / "sp" / f));

  Run j1 = run({"jaccard", "--edges", p(dir / "sp" / "core.txt"), "--splits-dir", p(dir / "sp")});
  Run j2 = run({"jaccard", "--edges", p(dir / "sp" / "core.txt"), "--splits-dir", p(dir / "sp")});
  REQUIRE(j1.code == 0);
  CHECK(j1.out == j2.out);
  CHECK(std::count(j1.out.begin(), j1.out.end(), '\t') == 3);

  REQUIRE(run({"train", "--edges", p(dir / "sp" / "core.txt"), "--dim", "8", "--iters", "30", "--out",
               p(dir / "e.txt")})
              .code == 0);
  for (const char* feature : {"hadamard", "concat", "dot"}) {
    Run r = run({"eval-link", "--embeddings", p(dir / "e.txt"), "--splits-dir", p(dir / "sp"), "--feature", feature});
    CHECK(r.code == 0);
    CHECK(f1_of(r.out) > 0.5);
  }
  Run mlp = run({"eval-link", "--embeddings", p(dir / "e.txt"), "--splits-dir", p(dir / "sp"), "--classifier", "mlp",
                 "--hidden", "16", "--epochs", "20"});
  CHECK(mlp.code == 0);
  CHECK(run({"eval-link", "--embeddings", p(dir / "e.txt"), "--splits-dir", p(dir / "sp"), "--classifier", "svm"})
            .code == 2);
}

TEST_CASE("cli eval-link: toy splits") {
  testutil::TempDir dir;
  fs::create_directories(dir / "sp");
  // vertices 0-3 at +1, 4-7 at -1; edges live within a group
  std::string emb;
  for (int v = 0; v < 8; ++v) emb += std::to_string(v) + (v < 4 ? " 1 0\n" : " -1 0\n");
  testutil::write_file(dir / "e.txt", emb);
  testutil::write_file(dir / "sp" / "train.txt", "0 1 1\n4 5 1\n2 3 1\n0 4 0\n1 5 0\n2 6 0\n");
  testutil::write_file(dir / "sp" / "val.txt", "0 2 1\n3 7 0\n");
  testutil::write_file(dir / "sp" / "test.txt", "1 3 1\n6 7 1\n0 7 0\n2 5 0\n");
  Run perfect = run({"eval-link", "--embeddings", p(dir / "e.txt"), "--splits-dir", p(dir / "sp"), "--feature", "dot"});
  REQUIRE(perfect.code == 0);
  CHECK(f1_of(perfect.out) == 1.0);

  // identical embeddings: every pair scores 0.5, predicted positive
  std::string flat;
  for (int v = 0; v < 8; ++v) flat += std::to_string(v) + " 1 0\n";
  testutil::write_file(dir / "flat.txt", flat);
  Run degenerate = run({"eval-link", "--embeddings", p(dir / "flat.txt"), "--splits-dir", p(dir / "sp")});
  REQUIRE(degenerate.code == 0);
  CHECK(f1_of(degenerate.out) == doctest::Approx(2.0 / 3.0).epsilon(1e-5));

  testutil::write_file(dir / "few.txt", "0 1 0\n1 1 0\n");
  CHECK(run({"eval-link", "--embeddings", p(dir / "few.txt"), "--splits-dir", p(dir / "sp")}).code == 1);
}

TEST_CASE("cli jaccard: triangle toy and empty split") {
  testutil::TempDir dir;
  fs::create_directories(dir / "sp");
  // core: triangle 0-1-2 plus pendant 3 on 2; J(0,1) = 1/3, J(0,3) = 1/2, J(2,3) = 0
  testutil::write_file(dir / "core.txt", "0 1\n1 2\n0 2\n2 3\n");
  testutil::write_file(dir / "sp" / "train.txt", "");
  testutil::write_file(dir / "sp" / "val.txt", "0 1 1\n3 2 0\n");
  testutil::write_file(dir / "sp" / "test.txt", "0 3 1\n2 3 0\n");
  Run r = run({"jaccard", "--edges", p(dir / "core.txt"), "--splits-dir", p(dir / "sp")});
  REQUIRE(r.code == 0);
  CHECK(r.out == "1.000000\t1.000000\t1.000000\t0.333333\n");

  testutil::write_file(dir / "sp" / "test.txt", "");
  CHECK(run({"jaccard", "--edges", p(dir / "core.txt"), "--splits-dir", p(dir / "sp")}).code == 1);
}

TEST_CASE("cli classify and gen-sbm") {
  testutil::TempDir dir;
  REQUIRE(run({"gen-sbm", "--blocks", "2", "--block-size", "30", "--p-in", "0.3", "--p-out", "0.02", "--seed", "4",
               "--out", p(dir / "g.txt"), "--labels-out", p(dir / "labels.txt"), "--features-out",
               p(dir / "features.txt"), "--noise-features", "3", "--vertex-splits-out", p(dir / "splits.txt")})
              .code == 0);
  REQUIRE(run({"train", "--edges", p(dir / "g.txt"), "--dim", "8", "--iters", "30", "--out", p(dir / "e.txt")}).code ==
          0);
  Run r = run({"classify", "--embeddings", p(dir / "e.txt"), "--features", p(dir / "features.txt"), "--labels",
               p(dir / "labels.txt"), "--splits", p(dir / "splits.txt")});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string base, combined;
  std::getline(lines, base);
  std::getline(lines, combined);
  CHECK(f1_of(combined) > f1_of(base));

  // zero-dimensional embedding: both lines agree
  std::string empty;
  for (int v = 0; v < 60; ++v) empty += std::to_string(v) + "\n";
  testutil::write_file(dir / "empty.txt", empty);
  Run same = run({"classify", "--embeddings", p(dir / "empty.txt"), "--features", p(dir / "features.txt"), "--labels",
                  p(dir / "labels.txt"), "--splits", p(dir / "splits.txt")});
  REQUIRE(same.code == 0);
  std::istringstream sl(same.out);
  std::getline(sl, base);
  std::getline(sl, combined);
  CHECK(base == combined);

  // leaked label: the first feature column is the label
  std::string leak, lab = testutil::read_file(dir / "labels.txt");
  std::istringstream li(lab);
  std::string line;
  while (std::getline(li, line)) {
    std::istringstream f(line);
    int id, a, b;
    f >> id >> a >> b;
    leak += std::to_string(id) + " " + std::to_string(a) + " 0.5\n";
  }
  testutil::write_file(dir / "leak.txt", leak);
  Run leaked = run({"classify", "--embeddings", p(dir / "empty.txt"), "--features", p(dir / "leak.txt"), "--labels",
                    p(dir / "labels.txt"), "--splits", p(dir / "splits.txt")});
  REQUIRE(leaked.code == 0);
  CHECK(f1_of(leaked.out) == 1.0);

  testutil::write_file(dir / "ragged.txt", "0 1 2\n1 1\n");
  CHECK(run({"classify", "--embeddings", p(dir / "e.txt"), "--features", p(dir / "ragged.txt"), "--labels",
             p(dir / "labels.txt"), "--splits", p(dir / "splits.txt")})
            .code == 1);
}

TEST_CASE("cli bench prints one line per sweep value") {
  testutil::TempDir dir;
  testutil::write_file(dir / "g.txt", "0 1\n1 2\n2 3\n3 0\n0 2\n4 0\n");
  Run r = run({"bench", "--edges", p(dir / "g.txt"), "--sweep", "dim", "--values", "4,8", "--dim", "2"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> keys;
  while (std::getline(lines, line)) keys.push_back(line.substr(0, line.find('\t')));
  CHECK(keys == std::vector<std::string>{"4", "8"});
  CHECK(fs::exists(p(dir / "g.txt") + ".bench.config"));
  CHECK(run({"bench", "--edges", p(dir / "g.txt"), "--sweep", "dim", "--values", "x"}).code == 1);
  CHECK(run({"bench", "--edges", p(dir / "g.txt"), "--sweep", "colour", "--values", "1"}).code == 2);
}
