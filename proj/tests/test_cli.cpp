// End-to-end exercises of the command-line surface: real process launches,
// real files, real exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = YBLIE_CLI_PATH;
const fs::path kFixtures = YBLIE_FIXTURE_DIR;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  static int counter = 0;
  fs::path log = fs::temp_directory_path() /
                 ("yblie-cli-test-" + std::to_string(counter++) + ".log");
  std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream os;
  os << in.rdbuf();
  fs::remove(log);
  return {code, os.str()};
}

fs::path fixture(const std::string& name) { return kFixtures / name; }

fs::path temp_out(const std::string& name) {
  return fs::temp_directory_path() / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("check: valid fixtures exit 0, broken exit 1 with the axiom named") {
  CHECK(run("check " + fixture("sl2.json").string()).exit_code == 0);
  CHECK(run("check " + fixture("ext1.json").string()).exit_code == 0);

  RunResult broken = run("check " + fixture("sl2-broken.json").string());
  CHECK(broken.exit_code == 1);
  CHECK(broken.output.find("[FAIL] jacobi") != std::string::npos);
  CHECK(broken.output.find("at (") != std::string::npos);  // witness coordinates
}

TEST_CASE("check: unreadable and malformed inputs exit 2") {
  CHECK(run("check /no/such/file.json").exit_code == 2);
  fs::path junk = temp_out("junk.json");
  std::ofstream(junk) << "{\"format_version\": 1}";
  CHECK(run("check " + junk.string()).exit_code == 2);
  fs::remove(junk);

  // Declaring the anyonic braiding over a field without i is an input error.
  fs::path noi = temp_out("noi.json");
  std::ofstream(noi) << R"({"format_version": 1,
    "field": {"kind": "rational"},
    "context": {"braiding": "anyonic", "associator": "sign"},
    "kind": "yb_operator", "objects": {"l": [1]},
    "morphisms": {"c": [["1"]]}})";
  CHECK(run("check " + noi.string()).exit_code == 2);
  fs::remove(noi);
}

TEST_CASE("report: json format carries the verdict and digest") {
  RunResult r = run("report " + fixture("sl2.json").string() + " --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"overall_pass\": true") != std::string::npos);
  CHECK(r.output.find("\"input_digest\": \"fnv1a64:") != std::string::npos);

  RunResult rb =
      run("report " + fixture("ext1-broken.json").string() + " --format json");
  CHECK(rb.exit_code == 1);
  CHECK(rb.output.find("\"name\": \"hopf_compatibility\"") != std::string::npos);
  CHECK(rb.output.find("\"overall_pass\": false") != std::string::npos);
}

TEST_CASE("construct: primitives of ext1") {
  fs::path out = temp_out("p-ext1.json");
  RunResult r = run("construct primitives " + fixture("ext1.json").string() +
                    " -o " + out.string());
  CHECK(r.exit_code == 0);
  std::string bytes = slurp(out);
  CHECK(bytes.find("\"yb_lie_algebra\"") != std::string::npos);
  CHECK(bytes.find("\"l\": [\n      1\n    ]") != std::string::npos);  // one odd basis vector
  CHECK(run("check " + out.string()).exit_code == 0);

  // Determinism: a second run produces byte-identical output.
  fs::path out2 = temp_out("p-ext1-again.json");
  CHECK(run("construct primitives " + fixture("ext1.json").string() + " -o " +
            out2.string())
            .exit_code == 0);
  CHECK(slurp(out) == slurp(out2));
  fs::remove(out);
  fs::remove(out2);
}

TEST_CASE("construct: dual-pair of sl2 passes check") {
  fs::path out = temp_out("sl2-dual.json");
  CHECK(run("construct dual-pair " + fixture("sl2.json").string() + " -o " +
            out.string())
            .exit_code == 0);
  CHECK(run("check " + out.string()).exit_code == 0);
  CHECK(slurp(out) == slurp(fixture("sl2-pair.json")));  // same canonical pair
  fs::remove(out);
}

TEST_CASE("construct: strengthen") {
  fs::path out = temp_out("strong.json");
  RunResult bad = run("construct strengthen " +
                      fixture("ab2-zero-ev.json").string() + " -o " + out.string());
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("Gram") != std::string::npos);

  RunResult good = run("construct strengthen " +
                       fixture("sl2-pair.json").string() + " -o " + out.string());
  CHECK(good.exit_code == 0);
  CHECK(slurp(out).find("\"coev\"") != std::string::npos);
  CHECK(run("check " + out.string()).exit_code == 0);
  fs::remove(out);
}

TEST_CASE("construct: commutator, cocommutator, opposite, indecomposables") {
  fs::path out = temp_out("derived.json");
  CHECK(run("construct commutator " + fixture("m2.json").string() + " -o " +
            out.string())
            .exit_code == 0);
  CHECK(slurp(out) == slurp(fixture("gl2.json")));

  CHECK(run("construct cocommutator " + fixture("kz2.json").string() + " -o " +
            out.string())
            .exit_code == 0);
  CHECK(run("check " + out.string()).exit_code == 0);

  CHECK(run("construct opposite " + fixture("sl2.json").string() + " -o " +
            out.string())
            .exit_code == 0);
  CHECK(run("check " + out.string()).exit_code == 0);

  CHECK(run("construct indecomposables " + fixture("ext1.json").string() +
            " -o " + out.string())
            .exit_code == 0);
  CHECK(slurp(out).find("\"yb_lie_coalgebra\"") != std::string::npos);

  CHECK(run("construct michaelis-from-takeuchi " +
            fixture("ext1-tak.json").string() + " -o " + out.string())
            .exit_code == 0);
  CHECK(run("check " + out.string()).exit_code == 0);

  // The group-algebra pair collapses to zero-dimensional objects; the empty
  // matrices must survive the file format.
  CHECK(run("construct michaelis-from-takeuchi " +
            fixture("kz2-tak.json").string() + " -o " + out.string())
            .exit_code == 0);
  CHECK(slurp(out).find("\"l\": []") != std::string::npos);
  CHECK(run("check " + out.string()).exit_code == 0);
  fs::remove(out);
}

TEST_CASE("construct: lie-hom and the module/comodule transfer") {
  fs::path hom = temp_out("hom.json");
  CHECK(run("construct lie-hom " + fixture("sl2-module.json").string() + " " +
            fixture("sl2-module.json").string() + " -o " + hom.string())
            .exit_code == 0);
  std::string bytes = slurp(hom);
  CHECK(bytes.find("\"hom_space\"") != std::string::npos);
  CHECK(run("check " + hom.string()).exit_code == 0);
  fs::remove(hom);

  // module -> comodule -> module across files; right-sided input is
  // converted through the braiding on the way in.
  fs::path comod = temp_out("comod.json");
  fs::path back = temp_out("back.json");
  CHECK(run("construct module-to-comodule " + fixture("sl2-pair.json").string() +
            " " + fixture("sl2-module.json").string() + " -o " + comod.string())
            .exit_code == 0);
  CHECK(run("check " + comod.string()).exit_code == 0);
  CHECK(run("construct comodule-to-module " + fixture("sl2-pair.json").string() +
            " " + comod.string() + " -o " + back.string())
            .exit_code == 0);
  CHECK(run("check " + back.string()).exit_code == 0);
  CHECK(slurp(back).find("\"side\": \"left\"") != std::string::npos);
  fs::remove(comod);
  fs::remove(back);
}

TEST_CASE("construct: invalid inputs are refused") {
  fs::path out = temp_out("refused.json");
  RunResult r = run("construct opposite " + fixture("sl2-broken.json").string() +
                    " -o " + out.string());
  CHECK(r.exit_code == 1);
  RunResult r2 = run("construct primitives " +
                     fixture("ext1-broken.json").string() + " -o " + out.string());
  CHECK(r2.exit_code == 1);
  RunResult r3 = run("construct commutator " + fixture("sl2.json").string() +
                     " -o " + out.string());
  CHECK(r3.exit_code == 2);  // wrong structure kind for the construction
}

TEST_CASE("fixtures: list and dump") {
  RunResult ls = run("fixtures list");
  CHECK(ls.exit_code == 0);
  for (const char* name : {"ab2", "sl2", "gl2", "ext1", "kz2", "kz2d", "any1"})
    CHECK(ls.output.find(name) != std::string::npos);

  RunResult dump = run("fixtures dump sl2");
  CHECK(dump.exit_code == 0);
  CHECK(dump.output == slurp(fixture("sl2.json")));

  CHECK(run("fixtures dump nonexistent").exit_code == 2);
}

TEST_CASE("any1 documents the order-two failure through the CLI") {
  RunResult r = run("check " + fixture("any1.json").string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("[FAIL] order_two") != std::string::npos);
  CHECK(r.output.find("[pass] yang_baxter") != std::string::npos);
}
