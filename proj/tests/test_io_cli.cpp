#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "nlie/algebra_io.hpp"
#include "nlie/catalog.hpp"
#include "nlie/cli.hpp"

using namespace nlie;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("nlie_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("serialize and parse round trip structurally") {
  for (const auto& alg : {catalog_heisenberg(Q, 3), catalog_affine(FieldSpec::gf(5), 3),
                          catalog_cross(FieldSpec::gf(7), 2)}) {
    std::string text = serialize_algebra(alg);
    NLieAlgebra back = parse_algebra(text);
    CHECK(back == alg);
    // canonical form: re-serialising is byte-identical
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("round trip the whole corpus") {
  CorpusLimits limits;
  limits.max_members = 25;
  for (const auto& alg : corpus(0, FieldSpec::gf(5), limits)) {
    std::string text = serialize_algebra(alg);
    CHECK(parse_algebra(text) == alg);
    CHECK(serialize_algebra(parse_algebra(text)) == text);
  }
}

TEST_CASE("rational scalars serialize exactly") {
  NLieAlgebra alg(Q, 2, 2);
  std::vector<std::size_t> t{0, 1};
  Vec v{Scalar::rational(2, 3), Scalar::rational(-7, 2)};
  alg.set_bracket(t, v);
  NLieAlgebra back = parse_algebra(serialize_algebra(alg), false);
  CHECK(back == alg);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_algebra("not json"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra(R"({"field":{"kind":"R"},"n":2,"dim":1})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra(R"({"n":2,"dim":1})"), std::invalid_argument);
  // args must be increasing and in range
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"field":{"kind":"Q"},"n":2,"dim":2,"basis":["e1","e2"],
              "brackets":[{"args":[2,1],"value":{"1":"1"}}]})"),
      std::invalid_argument);
}

TEST_CASE("parse rejects structural inconsistencies") {
  // value index out of range
  CHECK_THROWS_AS(
      parse_algebra(R"({"field":{"kind":"Q"},"n":2,"dim":2,"basis":["e1","e2"],
                       "brackets":[{"args":[1,2],"value":{"3":"1"}}]})"),
      std::invalid_argument);
  // wrong number of args for the arity
  CHECK_THROWS_AS(
      parse_algebra(R"({"field":{"kind":"Q"},"n":3,"dim":3,"basis":["e1","e2","e3"],
                       "brackets":[{"args":[1,2],"value":{"1":"1"}}]})"),
      std::invalid_argument);
  // residue out of range for the field
  CHECK_THROWS_AS(
      parse_algebra(R"({"field":{"kind":"GF","p":3},"n":2,"dim":2,"basis":["e1","e2"],
                       "brackets":[{"args":[1,2],"value":{"1":"5"}}]})"),
      std::invalid_argument);
  // composite modulus
  CHECK_THROWS_AS(
      parse_algebra(R"({"field":{"kind":"GF","p":6},"n":2,"dim":1,"basis":["e1"],
                       "brackets":[]})"),
      std::invalid_argument);
  // zero-based args
  CHECK_THROWS_AS(
      parse_algebra(R"({"field":{"kind":"Q"},"n":2,"dim":2,"basis":["e1","e2"],
                       "brackets":[{"args":[0,1],"value":{"1":"1"}}]})"),
      std::invalid_argument);
  // basis name count mismatch
  CHECK_THROWS_AS(
      parse_algebra(R"({"field":{"kind":"Q"},"n":2,"dim":2,"basis":["e1"],"brackets":[]})"),
      std::invalid_argument);
}

TEST_CASE("parse validates the Jacobi identity unless told not to") {
  // heis(3) plus [e1,e2,e4] = e1 fails the Jacobi identity
  std::string bad = R"({"field":{"kind":"Q"},"n":3,"dim":4,
    "basis":["e1","e2","e3","e4"],
    "brackets":[{"args":[1,2,3],"value":{"4":"1"}},
                {"args":[1,2,4],"value":{"1":"1"}}]})";
  CHECK_THROWS_AS(parse_algebra(bad), std::invalid_argument);
  NLieAlgebra loaded = parse_algebra(bad, false);
  CHECK(loaded.dim() == 4);
}

TEST_CASE("cli validate") {
  TempDir dir;
  save_algebra_file(catalog_heisenberg(Q, 3), dir.file("heis.json"));
  CliResult good = cli({"validate", dir.file("heis.json")});
  CHECK(good.code == 0);

  std::ofstream bad(dir.file("bad.json"));
  bad << R"({"field":{"kind":"Q"},"n":3,"dim":4,
    "basis":["e1","e2","e3","e4"],
    "brackets":[{"args":[1,2,3],"value":{"4":"1"}},
                {"args":[1,2,4],"value":{"1":"1"}}]})";
  bad.close();
  CliResult fail = cli({"validate", dir.file("bad.json")});
  CHECK(fail.code == 1);

  CliResult missing = cli({"validate", dir.file("missing.json")});
  CHECK(missing.code == 2);
}

TEST_CASE("cli info, series, engel") {
  TempDir dir;
  save_algebra_file(catalog_affine(FieldSpec::gf(5), 3), dir.file("aff.json"));
  CliResult info = cli({"info", dir.file("aff.json")});
  CHECK(info.code == 0);
  CHECK(info.out.find("nilpotent: no") != std::string::npos);

  CliResult series = cli({"series", dir.file("aff.json"), "--ideal", "e3", "--k", "2"});
  CHECK(series.code == 0);

  CliResult engel = cli({"engel", dir.file("aff.json"), "--string", "1,2"});
  CHECK(engel.code == 0);
  CHECK(engel.out.find("certified Engel subalgebra: yes") != std::string::npos);

  CliResult bad_string = cli({"engel", dir.file("aff.json"), "--string", "1"});
  CHECK(bad_string.code == 2);
}

TEST_CASE("cli cartan and unsupported fields") {
  TempDir dir;
  save_algebra_file(catalog_affine(FieldSpec::gf(5), 3), dir.file("aff5.json"));
  CliResult cartan = cli({"cartan", dir.file("aff5.json"), "--seed", "7"});
  CHECK(cartan.code == 0);
  CHECK(cartan.out.find("dim 2 of 3") != std::string::npos);

  save_algebra_file(catalog_affine(FieldSpec::gf(2), 3), dir.file("aff2.json"));
  CliResult small = cli({"cartan", dir.file("aff2.json")});
  CHECK(small.code == 3);
}

TEST_CASE("cli frattini, split, conjugate, theorems") {
  TempDir dir;
  save_algebra_file(catalog_affine(FieldSpec::gf(5), 3), dir.file("aff.json"));
  CHECK(cli({"frattini", dir.file("aff.json")}).code == 0);
  CHECK(cli({"split", dir.file("aff.json"), "--ideal", "e3"}).code == 0);
  CHECK(cli({"split", dir.file("aff.json"), "--ideal", "e1"}).code == 1);
  CHECK(cli({"conjugate", dir.file("aff.json"), "--ideal", "e3", "--seed", "3"}).code == 0);
  CHECK(cli({"theorems", dir.file("aff.json")}).code == 0);

  save_algebra_file(catalog_affine(Q, 3), dir.file("affq.json"));
  CHECK(cli({"frattini", dir.file("affq.json")}).code == 3);
}

TEST_CASE("cli theorems on a corrupted file reports the defect tuple") {
  TempDir dir;
  std::ofstream bad(dir.file("bad.json"));
  bad << R"({"field":{"kind":"GF","p":3},"n":3,"dim":4,
    "basis":["e1","e2","e3","e4"],
    "brackets":[{"args":[1,2,3],"value":{"4":"1"}},
                {"args":[1,2,4],"value":{"1":"1"}}]})";
  bad.close();
  CliResult r = cli({"theorems", dir.file("bad.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("Jacobi") != std::string::npos);
  CHECK(r.err.find("x=(") != std::string::npos);  // the offending tuple pair
}

TEST_CASE("cli catalog and corpus") {
  TempDir dir;
  CliResult cat = cli({"catalog", "--name", "heis", "--params", "n=3,field=GF,p=5", "-o",
                       dir.file("out.json")});
  CHECK(cat.code == 0);
  NLieAlgebra loaded = load_algebra_file(dir.file("out.json"));
  CHECK(loaded == catalog_heisenberg(FieldSpec::gf(5), 3));

  CliResult to_stdout = cli({"catalog", "--name", "aff", "--params", "n=2"});
  CHECK(to_stdout.code == 0);
  CHECK(parse_algebra(to_stdout.out) == catalog_affine(Q, 2));

  CliResult unknown = cli({"catalog", "--name", "nope"});
  CHECK(unknown.code == 2);

  CliResult corp = cli({"corpus", "--field", "GF:5", "--count", "10", "--max-dim", "4", "-o",
                        dir.path.string()});
  CHECK(corp.code == 0);
  CHECK(std::filesystem::exists(dir.file("corpus_000.json")));
  CHECK(load_algebra_file(dir.file("corpus_000.json")).dim() == 1);
}

TEST_CASE("cli json output is deterministic") {
  TempDir dir;
  save_algebra_file(catalog_affine(FieldSpec::gf(5), 3), dir.file("aff.json"));
  for (const char* sub : {"info", "cartan", "theorems"}) {
    CliResult a = cli({"--format", "json", "--seed", "5", sub, dir.file("aff.json")});
    CliResult b = cli({"--format", "json", "--seed", "5", sub, dir.file("aff.json")});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": \"nlie.report/1\"") != std::string::npos);
  }
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({"validate"}).code == 2);
}
