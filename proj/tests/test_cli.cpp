#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// End-to-end runs of the built binary: exit codes, stdout contents, and the
// file pipeline gadget -> reduce -> graph -> solve.

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int code = -1;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "mti_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd =
      std::string(MTI_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::ostringstream os;
  os << in.rdbuf();
  r.out = os.str();
  return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* sample4_text =
    "p csat 4 4\n"
    "1 3 0\n"
    "-3 -4 0\n"
    "2 -3 0\n"
    "-1 4 0\n";

}  // namespace

TEST_CASE("cli: solve a csat file") {
  const fs::path in = write_file("sample4.csat", sample4_text);
  const RunResult r = run("solve " + in.string());
  CHECK(r.code == 0);
  CHECK(r.out == "z*=2\nassignment=0100\n");
}

TEST_CASE("cli: gadget then solve doubles the optimum") {
  const fs::path in = write_file("one.sat", "p sat 2 1\n1 2 0\n");
  const fs::path out = work_dir() / "one.csat";
  const RunResult g = run("gadget " + in.string() + " " + out.string());
  REQUIRE(g.code == 0);
  const std::string csat = slurp(out);
  CHECK(csat.find("p csat 3 6") == 0);
  CHECK(csat.find("c gadget 1 -> 1..6 y=3") != std::string::npos);
  const RunResult s = run("solve " + out.string());
  CHECK(s.code == 0);
  CHECK(s.out.find("z*=2\n") == 0);
}

TEST_CASE("cli: reduce, graph, and solve the tracks pipeline") {
  const fs::path in = write_file("sample4b.csat", sample4_text);
  const fs::path tracks = work_dir() / "sample4.tracks";
  REQUIRE(run("reduce " + in.string() + " " + tracks.string()).code == 0);
  const std::string text = slurp(tracks);
  CHECK(text.find("p tracks 4 4") == 0);
  CHECK(text.find("1# -5 -3 -5 1 2 3\n") != std::string::npos);

  const RunResult direct = run("solve " + tracks.string() + " --engine both");
  CHECK(direct.code == 0);
  CHECK(direct.out.find("w*=50\n") == 0);
  CHECK(direct.out.find("engines=agree\n") != std::string::npos);

  const fs::path graph = work_dir() / "sample4.graph";
  REQUIRE(run("graph " + tracks.string() + " " + graph.string()).code == 0);
  CHECK(slurp(graph).find("p edge 12 ") == 0);
  const RunResult gsolve = run("solve " + graph.string() + " --engine enum");
  CHECK(gsolve.code == 0);
  CHECK(gsolve.out.find("w*=50\n") == 0);

  const fs::path full = work_dir() / "sample4_full.graph";
  REQUIRE(run("graph --full " + tracks.string() + " " + full.string()).code == 0);
  CHECK(slurp(full).find("p edge 100 ") == 0);
}

TEST_CASE("cli: solve a sat file reports its optimum") {
  const fs::path in = write_file("tiny.sat", "p sat 2 3\n1 2 0\n-1 2 0\n1 -2 0\n");
  const RunResult r = run("solve " + in.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("z*=3\n") == 0);
}

TEST_CASE("cli: reduce rejects an instance with unused variables") {
  const fs::path in = write_file("empty.csat", "p csat 4 0\n");
  const RunResult r = run("reduce " + in.string() + " -");
  CHECK(r.code == 2);
  CHECK(r.out.find("unused") != std::string::npos);
}

TEST_CASE("cli: malformed input names the line and exits 2") {
  const fs::path in = write_file("broken.csat", "p csat 2 1\n1 2\n");
  const RunResult r = run("solve " + in.string());
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);

  const fs::path bad_header = write_file("bad_header.sat", "p nope 1 1\n1 1 0\n");
  const RunResult h = run("gadget " + bad_header.string() + " -");
  CHECK(h.code == 2);
  CHECK(h.out.find("line 1") != std::string::npos);
}

TEST_CASE("cli: verify passes on the sample and fails under fault injection") {
  const fs::path in = write_file("sample4c.csat", sample4_text);
  const RunResult ok = run("verify " + in.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("PASS identity z*=2 w*=50") != std::string::npos);
  CHECK(ok.out.find("z_star=2 w_star=50") != std::string::npos);

  const RunResult bad = run("verify --inject-fault " + in.string());
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL observation-3 counterexample (+1.") != std::string::npos);
}

TEST_CASE("cli: verify a sat file runs the gadget battery") {
  const RunResult gen = run("gen sat --n 4 --seed 1 " + (work_dir() / "g.sat").string());
  REQUIRE(gen.code == 0);
  const RunResult r = run("verify " + (work_dir() / "g.sat").string());
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS gadget-block-law") != std::string::npos);
  CHECK(r.out.find("PASS gadget-optimum") != std::string::npos);
}

TEST_CASE("cli: verify generator sweep") {
  const RunResult r = run("verify --seeds 10");
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS seeds count=10 failures=0") != std::string::npos);
}

TEST_CASE("cli: gen is reproducible and validates its arguments") {
  const RunResult a = run("gen csat --n 4 --m 6 --seed 9");
  const RunResult b = run("gen csat --n 4 --m 6 --seed 9");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("p csat 4 6") == 0);

  CHECK(run("gen sat --n 3 --seed 1").code == 2);    // odd variable count
  CHECK(run("gen csat --n 9 --m 2 --seed 1").code == 2);
  CHECK(run("gen csat --n 4 --seed 1").code == 2);   // missing --m
}

TEST_CASE("cli: render matches the library golden and supports svg") {
  const fs::path in = write_file("sample4d.csat", sample4_text);
  const fs::path tracks = work_dir() / "render.tracks";
  REQUIRE(run("reduce " + in.string() + " " + tracks.string()).code == 0);

  const RunResult text = run("render " + tracks.string() + " -");
  CHECK(text.code == 0);
  CHECK(text.out == slurp(fs::path(MTI_DATA_DIR) / "sample4_render.txt"));

  const RunResult svg = run("render --format svg " + tracks.string() + " -");
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") == 0);

  const RunResult copies = run("render --copies " + tracks.string() + " -");
  CHECK(copies.code == 0);
  CHECK(copies.out.find("+1.12") != std::string::npos);
}

TEST_CASE("cli: stdin and stdout plumbing") {
  const fs::path in = write_file("pipe.csat", sample4_text);
  const fs::path out_file = work_dir() / "pipe_out.txt";
  const std::string cmd = std::string("cat ") + in.string() + " | " + MTI_CLI_PATH +
                          " reduce - - | " + MTI_CLI_PATH + " solve - > " + out_file.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  CHECK(slurp(out_file).find("w*=50\n") == 0);
}

TEST_CASE("cli: budgeted solve reports optimal=false") {
  const fs::path in = write_file("sample4e.csat", sample4_text);
  const fs::path tracks = work_dir() / "budget.tracks";
  REQUIRE(run("reduce " + in.string() + " " + tracks.string()).code == 0);
  const RunResult r = run("solve --budget 1 " + (work_dir() / "budget.tracks").string());
  CHECK(r.code == 0);
  CHECK(r.out.find("optimal=false") != std::string::npos);
}
