// End-to-end checks of the installed CLI: output formats, cross-method
// determinism, b-file export, and exit codes (0 ok, 1 verification
// failure / zero cell, 2 usage error).

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "reference_rows.hpp"

namespace {

int g_failures = 0;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const char* bin = std::getenv("FIXMAT_BIN");
  if (!bin) {
    std::cerr << "FIXMAT_BIN not set\n";
    std::exit(2);
  }
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed\n";
    std::exit(2);
  }
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, out};
}

void expect(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << '\n';
    ++g_failures;
  }
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  // matrix output matches the reference display
  RunResult m = run("matrix --rows 17");
  expect(m.exit_code == 0, "matrix exit code");
  std::string expected;
  for (const auto& row : kReferenceRows) expected += row + "\n";
  expect(m.output == expected, "matrix --rows 17 content");

  expect(run("matrix --rows 0").output == "1\n", "matrix --rows 0");

  // method choice does not change the bytes
  RunResult md = run("matrix --rows 17 --method descent");
  RunResult mo = run("matrix --rows 17 --method orbit");
  RunResult ms = run("matrix --rows 17 --method step");
  expect(md.output == mo.output && mo.output == ms.output, "cross-method identical output");

  // determinism
  expect(run("matrix --rows 17 --method orbit").output == mo.output, "deterministic output");

  RunResult steps = run("matrix --rows 2 --method step --show-steps");
  expect(contains(steps.output, "2 1 2") && contains(steps.output, "2 2 2"),
         "show-steps triples");

  // sequences
  RunResult f = run("seq F --max 17");
  std::ostringstream fexp;
  for (size_t n = 0; n < kReferenceRowSums.size(); ++n)
    fexp << n << ' ' << kReferenceRowSums[n] << '\n';
  expect(f.exit_code == 0 && f.output == fexp.str(), "seq F --max 17");

  RunResult a7 = run("seq a --max 7 --method divsum");
  expect(a7.exit_code == 0 && contains(a7.output, "7 2"), "seq a final line");
  expect(run("seq a --max 60 --check").exit_code == 0, "seq a --check");

  // b-file round trip
  std::string path = "cli_test_bfile.txt";
  RunResult bf = run("seq F --max 17 --bfile " + path);
  expect(bf.exit_code == 0, "bfile export exit");
  std::ifstream in(path, std::ios::binary);
  std::stringstream content;
  content << in.rdbuf();
  expect(content.str() == fexp.str(), "bfile content matches stdout format");
  std::remove(path.c_str());

  // track
  RunResult t = run("track 35 15");
  expect(t.exit_code == 0 && contains(t.output, "track=(1,2,2,1) breadth=3 step=6"),
         "track 35 15");
  RunResult t99 = run("track 9 9");
  expect(contains(t99.output, "track=(9) breadth=0 step=9"), "track 9 9");
  RunResult tz = run("track 7 3");
  expect(tz.exit_code == 1 && contains(tz.output, "zero"), "track on zero cell exits 1");

  // verify suites
  RunResult v = run("verify --suite closedforms");
  expect(v.exit_code == 0 && contains(v.output, "PASS\tclosed-forms-G-S-SiG"),
         "verify closedforms");
  // the 12F <= 10n-13 cap has a known single exception at n=8
  RunResult vb = run("verify --suite bounds --max 200 --threads 2");
  expect(vb.exit_code == 1 && contains(vb.output, "FAIL\tbounds") &&
             contains(vb.output, "12F<=10n-13 n=8"),
         "verify bounds reports the n=8 exception");
  RunResult vp = run("verify --suite patterns --max 200 --threads 2");
  expect(vp.exit_code == 0 && contains(vp.output, "PASS\ttrack-patterns"),
         "verify patterns threaded");

  // conjectures
  RunResult c = run("conjectures --max 100");
  expect(c.exit_code == 0 && contains(c.output, "6 35 2"), "conjectures r_i table");

  // usage errors
  expect(run("matrix --bogus-flag").exit_code == 2, "unknown flag exits 2");
  expect(run("seq Q --max 5").exit_code == 2, "bad sequence name exits 2");
  expect(run("").exit_code == 2, "missing subcommand exits 2");

  if (g_failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << g_failures << " failures\n";
  return 1;
}
