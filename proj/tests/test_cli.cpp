// End-to-end CLI contract: golden output bytes, exit codes, determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string err_file = "/tmp/gengeo_cli_err_" + std::to_string(counter++) + ".txt";
  std::string cmd = std::string(GENGEO_CLI_PATH) + " " + args + " 2>" + err_file;
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = read_file(err_file);
  std::remove(err_file.c_str());
  return r;
}

std::string doc(const std::string& name) {
  return std::string(GENGEO_DATA_DIR) + "/" + name + ".json";
}

std::string golden(const std::string& name) {
  return read_file(std::string(GENGEO_GOLDEN_DIR) + "/" + name);
}

void check_golden(const std::string& args, const std::string& golden_name, int expected_exit) {
  CAPTURE(args);
  RunResult r = run_cli(args);
  CHECK(r.exit_code == expected_exit);
  std::string want = golden(golden_name);
  REQUIRE(!want.empty());
  CHECK(r.out == want);
}

}  // namespace

TEST_CASE("golden text reports") {
  check_golden("validate " + doc("torus-kahler"), "validate-torus.txt", 0);
  check_golden("validate " + doc("kodaira-thurston"), "validate-kodaira-thurston.txt", 0);
  check_golden("validate " + doc("abelian-twisted"), "validate-abelian-twisted.txt", 0);
  check_golden("cohomology " + doc("torus-kahler"), "cohomology-torus.txt", 0);
  check_golden("cohomology --twisted " + doc("abelian-twisted"),
               "cohomology-abelian-twisted.txt", 0);
  check_golden("cohomology --twisted --mode float " + doc("abelian-twisted"),
               "cohomology-abelian-twisted-float.txt", 0);
  check_golden("diamond " + doc("torus-kahler"), "diamond-torus.txt", 0);
  check_golden("identities " + doc("torus-kahler"), "identities-torus.txt", 0);
  check_golden("ddj " + doc("torus-kahler"), "ddj-torus.txt", 0);
  check_golden("deform " + doc("torus-kahler"), "deform-torus.txt", 0);
  check_golden("deform --which 2 " + doc("torus-kahler"), "deform-torus-symplectic.txt", 0);
  check_golden("lefschetz " + doc("torus-kahler"), "lefschetz-torus.txt", 0);
  check_golden("cohomology " + doc("kodaira-thurston"), "cohomology-kodaira-thurston.txt", 0);
}

TEST_CASE("negative controls exit with the mathematical-failure code") {
  check_golden("ddj " + doc("kodaira-thurston"), "ddj-kodaira-thurston.txt", 1);
  check_golden("lefschetz " + doc("kodaira-thurston"), "lefschetz-kodaira-thurston.txt", 1);
}

TEST_CASE("golden json reports") {
  check_golden("validate --format json " + doc("torus-kahler"), "validate-torus.json", 0);
  check_golden("diamond --format json " + doc("torus-kahler"), "diamond-torus.json", 0);
  check_golden("cohomology --twisted --format json " + doc("abelian-twisted"),
               "cohomology-abelian-twisted.json", 0);
}

TEST_CASE("input errors exit with code 2 and report on stderr") {
  RunResult missing = run_cli("validate /no/such/file.json");
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("input error") != std::string::npos);
  CHECK(missing.out.empty());

  RunResult which = run_cli("ddj --which 3 " + doc("torus-kahler"));
  CHECK(which.exit_code == 2);
  CHECK(which.err.find("input error") != std::string::npos);

  RunResult no_structures = run_cli("diamond " + doc("abelian-twisted"));
  CHECK(no_structures.exit_code == 2);

  RunResult no_symplectic = run_cli("lefschetz " + doc("abelian-twisted"));
  CHECK(no_symplectic.exit_code == 2);

  RunResult bad_flag = run_cli("cohomology --mode magic " + doc("torus-kahler"));
  CHECK(bad_flag.exit_code == 2);

  RunResult no_subcommand = run_cli("");
  CHECK(no_subcommand.exit_code == 2);

  RunResult unknown = run_cli("frobnicate " + doc("torus-kahler"));
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("validate") != std::string::npos);
}

TEST_CASE("output bytes are deterministic across runs") {
  for (std::string args : {"diamond " + doc("torus-kahler"),
                           "identities " + doc("torus-kahler"),
                           "cohomology --mode float " + doc("kodaira-thurston"),
                           "diamond --format json " + doc("torus-kahler")}) {
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
}
