#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "yblie/errors.hpp"
#include "yblie/fixtures.hpp"
#include "yblie/io.hpp"

using namespace yblie;
namespace fx = yblie::fixtures;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<io::Structure> all_fixture_structures() {
  return {
      io::Structure(fx::ab2()),        io::Structure(fx::sl2()),
      io::Structure(fx::gl2()),        io::Structure(fx::m2()),
      io::Structure(fx::m2_column_module()),
      io::Structure(fx::ext1()),       io::Structure(fx::kz2()),
      io::Structure(fx::kz2d()),       io::Structure(fx::any1()),
      io::Structure(fx::sl2_adjoint()), io::Structure(fx::sl2_pair()),
      io::Structure(fx::ab2_zero_ev_pair()),
      io::Structure(fx::ext1_takeuchi()), io::Structure(fx::kz2_takeuchi()),
      io::Structure(fx::sl2_broken()), io::Structure(fx::ext1_broken()),
      io::Structure(fx::sl2_pair_broken()),
      io::Structure(fx::sl2_module_broken()),
  };
}

}  // namespace

TEST_CASE("every fixture structure round-trips bit-exactly") {
  for (const io::Structure& s : all_fixture_structures()) {
    std::string once = io::write_structure(s);
    io::Structure parsed = io::parse_structure(once);
    CHECK(io::kind_name(parsed) == io::kind_name(s));
    std::string twice = io::write_structure(parsed);
    CHECK(once == twice);
    // Writing is deterministic run over run.
    CHECK(io::write_structure(s) == once);
    // The parsed structure checks identically to the original.
    CheckReport a = io::check_structure(s);
    CheckReport b = io::check_structure(parsed);
    REQUIRE(a.axioms().size() == b.axioms().size());
    for (std::size_t i = 0; i < a.axioms().size(); ++i) {
      CHECK(a.axioms()[i].name == b.axioms()[i].name);
      CHECK(a.axioms()[i].pass == b.axioms()[i].pass);
    }
  }
}

TEST_CASE("shipped fixture files match their generators byte for byte") {
  std::filesystem::path dir(YBLIE_FIXTURE_DIR);
  REQUIRE(std::filesystem::exists(dir));
  struct Row {
    const char* file;
    io::Structure s;
  };
  std::vector<Row> rows;
  rows.push_back({"ab2.json", io::Structure(fx::ab2())});
  rows.push_back({"sl2.json", io::Structure(fx::sl2())});
  rows.push_back({"gl2.json", io::Structure(fx::gl2())});
  rows.push_back({"m2.json", io::Structure(fx::m2())});
  rows.push_back({"m2-column-module.json", io::Structure(fx::m2_column_module())});
  rows.push_back({"ext1.json", io::Structure(fx::ext1())});
  rows.push_back({"kz2.json", io::Structure(fx::kz2())});
  rows.push_back({"kz2d.json", io::Structure(fx::kz2d())});
  rows.push_back({"any1.json", io::Structure(fx::any1())});
  rows.push_back({"sl2-module.json", io::Structure(fx::sl2_adjoint())});
  rows.push_back({"sl2-pair.json", io::Structure(fx::sl2_pair())});
  rows.push_back({"ab2-zero-ev.json", io::Structure(fx::ab2_zero_ev_pair())});
  rows.push_back({"ext1-tak.json", io::Structure(fx::ext1_takeuchi())});
  rows.push_back({"kz2-tak.json", io::Structure(fx::kz2_takeuchi())});
  rows.push_back({"sl2-broken.json", io::Structure(fx::sl2_broken())});
  rows.push_back({"ext1-broken.json", io::Structure(fx::ext1_broken())});
  rows.push_back({"sl2-pair-broken.json", io::Structure(fx::sl2_pair_broken())});
  rows.push_back({"sl2-module-broken.json", io::Structure(fx::sl2_module_broken())});
  for (const auto& row : rows) {
    CAPTURE(row.file);
    CHECK(slurp(dir / row.file) == io::write_structure(row.s));
  }
}

TEST_CASE("scalar text syntax round trips in every field") {
  Field q = Field::rational();
  for (const char* text : {"0", "7", "-7", "1/2", "-22/7"}) {
    Scalar s = Scalar::parse(q, text);
    CHECK(s.to_string() == text);
  }
  Field g = Field::gaussian();
  for (const char* text : {"0", "3", "i", "-i", "2i", "1/2-3/4i", "1+i", "-1-2i"}) {
    Scalar s = Scalar::parse(g, text);
    CHECK(Scalar::parse(g, s.to_string()) == s);
  }
  CHECK(Scalar::parse(g, "3/4i").to_string() == "3/4i");
  Field f5 = Field::prime(5);
  CHECK(Scalar::parse(f5, "7") == Scalar::integer(f5, 2));
  CHECK(Scalar::parse(f5, "-1").to_string() == "4");
  CHECK_THROWS_AS(Scalar::parse(q, "2/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(q, ""), ParseError);
}

TEST_CASE("parser rejects malformed files with ParseError") {
  CHECK_THROWS_AS(io::parse_structure("not json at all"), ParseError);
  CHECK_THROWS_AS(io::parse_structure("{}"), ParseError);
  CHECK_THROWS_AS(io::parse_structure(R"({"format_version": 99})"), ParseError);

  std::string good = io::write_structure(io::Structure(fx::sl2()));
  // Unknown kind.
  std::string bad1 = good;
  bad1.replace(bad1.find("yb_lie_algebra"), 14, "mystery_object");
  CHECK_THROWS_AS(io::parse_structure(bad1), ParseError);
}

TEST_CASE("parser rejects shape violations with ShapeError") {
  // Drop one row of the bracket matrix.
  nlohmann::json j =
      nlohmann::json::parse(io::write_structure(io::Structure(fx::ab2())));
  j["morphisms"]["bracket"].erase(0);
  CHECK_THROWS_AS(io::parse_structure(j.dump()), ShapeError);

  // Grading violation: the unit of ext1 hitting the odd generator.
  nlohmann::json e =
      nlohmann::json::parse(io::write_structure(io::Structure(fx::ext1())));
  e["morphisms"]["unit"][1][0] = "1";
  CHECK_THROWS_AS(io::parse_structure(e.dump()), ShapeError);
}

TEST_CASE("digest is stable and content sensitive") {
  CHECK(io::digest_hex("abc") == io::digest_hex("abc"));
  CHECK(io::digest_hex("abc") != io::digest_hex("abd"));
  CHECK(io::digest_hex("").rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("report rendering") {
  io::Structure s(fx::sl2_broken());
  io::ReportDocument doc{io::kind_name(s), io::digest_hex("x"),
                         io::check_structure(s)};
  std::string text = io::report_to_text(doc);
  CHECK(text.find("[FAIL] jacobi") != std::string::npos);
  CHECK(text.find("overall: FAIL") != std::string::npos);

  std::string json = io::report_to_json(doc);
  CHECK(json.find("\"overall_pass\": false") != std::string::npos);
  CHECK(json.find("\"witness\"") != std::string::npos);
  CHECK(json.find("\"tool_version\"") != std::string::npos);

  io::Structure ok(fx::sl2());
  io::ReportDocument good{io::kind_name(ok), io::digest_hex("y"),
                          io::check_structure(ok)};
  CHECK(io::report_to_text(good).find("overall: pass") != std::string::npos);
}

TEST_CASE("strengthened pairs serialize their coev witness") {
  MichaelisPair p = fx::sl2_pair();
  p.coev = strengthen(p).coev;
  std::string bytes = io::write_structure(io::Structure(p));
  CHECK(bytes.find("coev") != std::string::npos);
  io::Structure parsed = io::parse_structure(bytes);
  const auto& q = std::get<MichaelisPair>(parsed);
  REQUIRE(q.coev.has_value());
  CHECK(q.coev->mat() == p.coev->mat());
  CHECK(io::write_structure(parsed) == bytes);
}

TEST_CASE("hom_space records parse and check") {
  LieModule adj = fx::sl2_adjoint();
  HomSubspace lh = lie_hom_space(adj, adj);
  io::HomSpace hs(adj.algebra.ctx, lh.obj, lh.inclusion.target(), lh.inclusion);
  std::string bytes = io::write_structure(io::Structure(hs));
  io::Structure parsed = io::parse_structure(bytes);
  CHECK(io::check_structure(parsed).all_pass());
  CHECK(io::write_structure(parsed) == bytes);
}
