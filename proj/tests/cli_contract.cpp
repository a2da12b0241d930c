// End-to-end checks against the installed CLI binary.  argv[1] is the path to
// the fcgp executable; everything runs inside a scratch directory so repeated
// invocations start clean.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "[ok]   " : "[FAIL] ") << what << '\n';
  if (!ok) ++failures;
}

struct RunResult {
  int code = -1;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const std::string& bin, const std::string& args, const fs::path& dir) {
  fs::path out = dir / "stdout.txt", err = dir / "stderr.txt";
  std::string cmd = "cd " + dir.string() + " && " + bin + " " + args + " >" +
                    out.filename().string() + " 2>" + err.filename().string();
  int raw = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: cli_contract <path-to-fcgp>\n";
    return 2;
  }
  const std::string bin = fs::absolute(argv[1]).string();
  const fs::path dir = fs::absolute("cli_scratch");
  fs::remove_all(dir);
  fs::create_directories(dir);

  // generator writes the pair of files and reports their names
  RunResult g1 = run(bin, "generate --family gap --k 4 --N 3 --mu 1/6 --out-prefix gap1", dir);
  expect(g1.code == 0, "generate gap exits 0");
  expect(fs::exists(dir / "gap1.edges") && fs::exists(dir / "gap1.json"),
         "generate gap writes both files");
  expect(has(g1.out, "gap1.edges") && has(g1.out, "gap1.json"),
         "generate gap prints both paths");
  expect(has(slurp(dir / "gap1.edges"), "19 18"), "gap instance has 19 vertices, 18 edges");
  expect(has(slurp(dir / "gap1.json"), "\"family\": \"gap\""), "sidecar names the family");

  // same seed, same bytes; new seed, new graph
  run(bin, "generate --family gnm --n 12 --m 20 --seed 7 --out-prefix a", dir);
  run(bin, "generate --family gnm --n 12 --m 20 --seed 7 --out-prefix b", dir);
  run(bin, "generate --family gnm --n 12 --m 20 --seed 8 --out-prefix c", dir);
  expect(slurp(dir / "a.edges") == slurp(dir / "b.edges"), "gnm repeats under one seed");
  expect(slurp(dir / "a.edges") != slurp(dir / "c.edges"), "gnm moves with the seed");

  // hand-written triangle
  {
    std::ofstream k3(dir / "k3.edges", std::ios::binary);
    k3 << "3 3\n0 1\n0 2\n1 2\n";
  }
  RunResult s1 = run(bin, "solve k3.edges --k 2 --alpha 1/2 --mode max --algo brute", dir);
  expect(s1.code == 0, "solve brute exits 0");
  expect(has(s1.out, "# fcgp-csv v1"), "solve emits the CSV preamble");
  expect(has(s1.out, ",3/2,"), "solve reports the optimum 3/2");
  expect(has(s1.out, ",0 1,"), "solve reports the winning pair");

  RunResult sj = run(bin,
                     "solve k3.edges --k 2 --alpha 1/2 --mode max --algo brute --out json "
                     "--stable-output --with-oracle",
                     dir);
  expect(sj.code == 0 && has(sj.out, "\"value\": \"3/2\"") && has(sj.out, "\"ratio\": \"1/1\""),
         "json output carries value and oracle ratio");

  // star: greedy grabs the center
  {
    std::ofstream st(dir / "star.edges", std::ios::binary);
    st << "5 4\n0 1\n0 2\n0 3\n0 4\n";
  }
  RunResult s2 = run(bin, "solve star.edges --k 1 --alpha 1 --mode max --algo greedy", dir);
  expect(s2.code == 0 && has(s2.out, ",4/1,0,"), "greedy takes the star center");

  // regime violation surfaces as the dedicated exit code
  RunResult s3 = run(bin, "solve star.edges --k 1 --alpha 1/4 --mode max --algo topdeg "
                          "--epsilon 1/2",
                     dir);
  expect(s3.code == 2 && has(s3.err, "unsupported"), "topdeg below 1/3 exits 2");

  RunResult s4 = run(bin, "solve star.edges --k 1 --alpha 1/2 --mode max --algo fptas", dir);
  expect(s4.code == 1 && has(s4.err, "--epsilon"), "fptas without epsilon exits 1");

  // parse failures carry the line number
  {
    std::ofstream badf(dir / "bad.edges", std::ios::binary);
    badf << "3 2\n0 1\n0 x\n";
  }
  RunResult s5 = run(bin, "solve bad.edges --k 1 --alpha 1/2 --mode max --algo brute", dir);
  expect(s5.code == 1 && has(s5.err, "line 3"), "malformed edge file exits 1 with the line");

  // gates all closed
  {
    std::ofstream k6(dir / "k6.edges", std::ios::binary);
    k6 << "6 15\n";
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) k6 << u << ' ' << v << '\n';
  }
  RunResult s6 = run(bin, "solve k6.edges --k 2 --alpha 1/2 --mode max --algo subexp "
                          "--width-budget 0",
                     dir);
  expect(s6.code == 3 && has(s6.err, "gate exhausted"), "impossible width budget exits 3");

  // clean sweep: exit 0, machine-readable summary
  RunResult e1 = run(bin,
                     "experiment --suite approx --trials 6 --max-n 9 --max-k 3 "
                     "--threads 2 --stable-output",
                     dir);
  expect(e1.code == 0, "approx sweep exits 0");
  expect(has(e1.out, "# fcgp-csv v1") && has(e1.out, "\nsummary,"), "sweep CSV has a summary row");
  expect(has(e1.err, " 0 violations"), "sweep reports zero violations");

  // the strict gap clause fails by design and leaves repro instances behind
  RunResult e2 = run(bin, "experiment --suite gap --stable-output --repro-dir gapre", dir);
  expect(e2.code == 1, "gap sweep exits 1");
  expect(has(e2.err, "gap-ratio-asymptotic"), "gap sweep names the failing check");
  bool wrote = fs::exists(dir / "gapre") && !fs::is_empty(dir / "gapre");
  expect(wrote, "gap sweep writes repro instances");

  // identical stable runs are byte identical across thread counts
  RunResult d1 = run(bin,
                     "experiment --suite exchange --trials 40 --stable-output --threads 1",
                     dir);
  RunResult d2 = run(bin,
                     "experiment --suite exchange --trials 40 --stable-output --threads 4",
                     dir);
  expect(d1.code == 0 && d1.out == d2.out, "exchange sweep is thread-count invariant");

  std::cout << (failures ? "FAILED " : "passed ") << "cli contract ("
            << failures << " failures)\n";
  return failures ? 1 : 0;
}
