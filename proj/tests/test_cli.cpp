// End-to-end checks of the installed command surface, run against the real
// binary with the shipped fixture files.

#include <catch2/catch.hpp>

#include <array>
#include <cstdio>

#include <sys/wait.h>
#include <fstream>
#include <string>

#ifndef CHIRAL_CLI_PATH
#error "CHIRAL_CLI_PATH must point at the CLI binary"
#endif
#ifndef CHIRAL_FIXTURE_DIR
#error "CHIRAL_FIXTURE_DIR must point at the fixture directory"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CHIRAL_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) {
  return std::string(CHIRAL_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("classify on the shipped fixtures") {
  const RunResult lactic = run("classify " + fixture("lactic.mol"));
  CHECK(lactic.exit_code == 0);
  CHECK(lactic.output == "chi = {1, 1}  ENANTIOMER\n");

  const RunResult meso = run("classify " + fixture("meso_tartaric.mol"));
  CHECK(meso.exit_code == 0);
  CHECK(meso.output == "chi = {2, 0}  ACHIRAL\n");
}

TEST_CASE("classify output is byte-identical across runs") {
  const RunResult a = run("classify " + fixture("meso_tartaric.mol"));
  const RunResult b = run("classify " + fixture("meso_tartaric.mol"));
  CHECK(a.output == b.output);
  const RunResult v1 = run("verify --closure");
  const RunResult v2 = run("verify --closure");
  CHECK(v1.output == v2.output);
}

TEST_CASE("verify subcommand") {
  const RunResult all = run("verify --all");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("PASS ") != std::string::npos);
  CHECK(all.output.find("FAIL ") == std::string::npos);
  CHECK(all.output.find(" 0 failures\n") != std::string::npos);

  const RunResult bare = run("verify");
  CHECK(bare.exit_code == 0);
  CHECK(bare.output == all.output);

  const RunResult quantum = run("verify --quantum");
  CHECK(quantum.exit_code == 0);
  CHECK(quantum.output.substr(0, 24) == "verify: scope = quantum\n");
  CHECK(quantum.output.find("quantum/radial-bounds") != std::string::npos);
  CHECK(quantum.output.find("closure/") == std::string::npos);

  const RunResult pair = run("verify --closure --eigen");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output.substr(0, 30) == "verify: scope = closure eigen\n");
}

TEST_CASE("tables and cayley emission") {
  const RunResult rot = run("tables --kind rot --format csv");
  CHECK(rot.exit_code == 0);
  CHECK(rot.output.substr(0, 11) == "R1\n1,0,0,0\n");
  CHECK(rot.output.find("R12") != std::string::npos);
  CHECK(rot.output.find("I1\n") == std::string::npos);

  const RunResult inv = run("tables --kind inv --format csv");
  CHECK(inv.exit_code == 0);
  CHECK(inv.output.substr(0, 11) == "I1\n0,0,0,1\n");
  CHECK(inv.output.find("R1\n") == std::string::npos);

  const RunResult cay = run("cayley --format csv");
  CHECK(cay.exit_code == 0);
  CHECK(cay.output.substr(0, 6) == "*,R1,R");
}

TEST_CASE("aufbau subcommand") {
  const RunResult r = run("aufbau --start 1,1 --deltas 1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("start: chi = {1, 1}  ENANTIOMER\n") != std::string::npos);
  CHECK(r.output.find("step 2 (dp=1): chi = {3, 3}  ENANTIOMER\n") !=
        std::string::npos);
  CHECK(r.output.find("final: chi = {3, 3}  ENANTIOMER\n") != std::string::npos);

  const RunResult empty = run("aufbau --start 1,0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("final: chi = {1, 0}  ACHIRAL\n") != std::string::npos);
}

TEST_CASE("project subcommand") {
  const RunResult r = run("project " + fixture("lactic.mol") + " --center c1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("R1: OH CO2H H CH3  orbit 1\n") != std::string::npos);
  CHECK(r.output.find("I1: CH3 CO2H H OH  orbit 2\n") != std::string::npos);
  CHECK(r.output.find("distinct projections: 24\n") != std::string::npos);
  CHECK(r.output.find("orbits: 2 (sizes: 12 12)\n") != std::string::npos);
}

TEST_CASE("quantum subcommands") {
  const RunResult radial = run("quantum radial --l 2 --E 0.5");
  CHECK(radial.exit_code == 0);
  CHECK(radial.output.find("radial: l=2 E=0.5") != std::string::npos);
  CHECK(radial.output.find("max-residual=") != std::string::npos);

  const RunResult azim = run("quantum azimuthal --m 3");
  CHECK(azim.exit_code == 0);
  CHECK(azim.output.find("azimuthal: m=3 samples=4001") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("classify /no/such/file.mol").exit_code == 2);
  CHECK(run("quantum radial --l -1 --E 1").exit_code == 2);
  CHECK(run("tables --kind bogus").exit_code == 2);
  CHECK(run("").exit_code == 2);

  const std::string bad = "/tmp/chiral_bad_fixture.mol";
  {
    std::ofstream f(bad);
    f << "molecule broken\ncenter c1: A B C\nend\n";
  }
  CHECK(run("classify " + bad).exit_code == 2);
  std::remove(bad.c_str());
}

TEST_CASE("help is available") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("classify --help").exit_code == 0);
}
