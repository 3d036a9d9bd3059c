// End-to-end checks of the command line tool: spawns the real binary.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult cli(const std::string& args) {
  std::string cmd = std::string(EUCLID_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 512> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scripts_dir() { return std::string(EUCLID_SOURCE_DIR) + "/scripts"; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("run: field trichotomy on I.1") {
  auto rat = cli("run " + scripts_dir() + "/i1.euc --field rational");
  CHECK(rat.exit_code == 2);
  CHECK(rat.out.find("NoSqrtInField") != std::string::npos);

  auto con = cli("run " + scripts_dir() + "/i1.euc --field constructible");
  CHECK(con.exit_code == 0);
  CHECK(con.out.find("sqrt(3)") != std::string::npos);

  auto sub = cli("run " + scripts_dir() + "/i1.euc --field nonarch --subplane");
  CHECK(sub.exit_code == 0);
}

TEST_CASE("run: JSON and SVG artifacts are written and reread") {
  std::string json_path = "cli_i1.json", svg_path = "cli_i1.svg", svg2 = "cli_i1_rendered.svg";
  auto run = cli("run " + scripts_dir() + "/i1.euc --field constructible --json " + json_path +
                 " --svg " + svg_path);
  REQUIRE(run.exit_code == 0);
  std::string json_bytes = slurp(json_path);
  CHECK(json_bytes.find("\"success\": true") != std::string::npos);
  CHECK(slurp(svg_path).find("<svg") != std::string::npos);

  auto render = cli("render " + json_path + " --svg " + svg2);
  REQUIRE(render.exit_code == 0);
  CHECK(slurp(svg2) == slurp(svg_path));

  // byte-determinism of the run artifacts
  auto again = cli("run " + scripts_dir() + "/i1.euc --field constructible --json " + json_path +
                   " --svg " + svg_path);
  REQUIRE(again.exit_code == 0);
  CHECK(slurp(json_path) == json_bytes);
}

TEST_CASE("suite: exit codes and determinism per field") {
  for (const char* flags : {"--field rational", "--field constructible", "--field nonarch",
                            "--field nonarch --subplane"}) {
    auto first = cli(std::string("suite ") + flags + " --json suite_a.json");
    REQUIRE_MESSAGE(first.exit_code == 0, first.out);
    auto second = cli(std::string("suite ") + flags + " --json suite_b.json");
    REQUIRE(second.exit_code == 0);
    CHECK(slurp("suite_a.json") == slurp("suite_b.json"));
  }
}

TEST_CASE("usage and IO failures exit 1") {
  CHECK(cli("run missing-file.euc").exit_code == 1);
  CHECK(cli("run " + scripts_dir() + "/i1.euc --field martian").exit_code == 1);
  CHECK(cli("suite --field rational --subplane").exit_code == 1);
  CHECK(cli("wibble").exit_code == 1);
  CHECK(cli("render no-such.json --svg out.svg").exit_code == 1);
  CHECK(cli("--help").exit_code == 0);
}

TEST_CASE("parse errors carry the position") {
  std::ofstream bad("bad_script.euc");
  bad << "point A = (0,\n";
  bad.close();
  auto r = cli("run bad_script.euc");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("line 1") != std::string::npos);
}

TEST_CASE("fig9 demo: the two models disagree, by design") {
  auto sub = cli("run " + scripts_dir() + "/fig9.euc --field nonarch --subplane");
  CHECK(sub.exit_code == 0);
  auto full = cli("run " + scripts_dir() + "/fig9.euc --field nonarch");
  CHECK(full.exit_code == 2);
  CHECK(full.out.find("eps^-1") != std::string::npos);  // the meeting point witness
}
