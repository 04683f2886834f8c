#include "pda/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "golden.hpp"
#include "pda/errors.hpp"
#include "pda/pda.hpp"

using pda::ParseError;
using pda::Pda;

namespace {

ParseError capture(const std::string& text) {
  std::istringstream in(text);
  try {
    pda::read_pda(in, "t");
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0, "");
}

}  // namespace

TEST_CASE("read then write is byte-exact on canonical text") {
  for (const char* text : {golden::kA22, golden::kB22, golden::kD63, golden::kA32,
                           golden::kB32, golden::kEx1}) {
    const Pda p = golden::from_text(text);
    CHECK(pda::to_text(p) == text);
  }
}

TEST_CASE("write then read round-trips the object") {
  const Pda a32 = golden::from_text(golden::kA32);
  std::stringstream buf;
  pda::write_pda(buf, a32);
  CHECK(pda::read_pda(buf) == a32);
}

TEST_CASE("comments and blank lines are skipped") {
  const std::string text =
      "# demand side\n"
      "\n"
      "2 2 1 1\n"
      "   \n"
      "* 0\n"
      "# middle note\n"
      "0 *\n"
      "\n";
  std::istringstream in(text);
  CHECK(pda::read_pda(in) == golden::from_text(golden::kEx1));
}

TEST_CASE("declared header values are kept, not recomputed") {
  std::istringstream in("2 2 0 2\n* 0\n0 *\n");
  const Pda p = pda::read_pda(in);
  CHECK(p.z() == 0);
  CHECK(p.s() == 2);
  CHECK_FALSE(pda::validate(p).valid);
}

TEST_CASE("parse errors carry 1-based line and token positions") {
  SUBCASE("missing header") {
    const auto e = capture("");
    CHECK(e.line() == 0);
    CHECK(std::string(e.what()).find("missing header") != std::string::npos);
  }
  SUBCASE("short header") {
    const auto e = capture("2 2 1\n");
    CHECK(e.line() == 1);
    CHECK(std::string(e.what()).find("4 fields") != std::string::npos);
  }
  SUBCASE("non-numeric header field") {
    const auto e = capture("2 x 1 1\n");
    CHECK(e.line() == 1);
    CHECK(e.col() == 2);
    CHECK(std::string(e.what()).find("expected F") != std::string::npos);
  }
  SUBCASE("Z above F") {
    const auto e = capture("2 2 3 1\n");
    CHECK(e.line() == 1);
    CHECK(e.col() == 3);
    CHECK(std::string(e.what()).find("outside [0,2]") != std::string::npos);
  }
  SUBCASE("bad entry token") {
    const auto e = capture("2 2 1 1\n* q\n");
    CHECK(e.line() == 2);
    CHECK(e.col() == 2);
    CHECK(std::string(e.what()).find("integer entry") != std::string::npos);
  }
  SUBCASE("negative entry") {
    const auto e = capture("2 2 1 1\n* -1\n");
    CHECK(e.line() == 2);
    CHECK(e.col() == 2);
  }
  SUBCASE("short row points at the first missing token") {
    const auto e = capture("3 2 1 1\n* 0\n");
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
    CHECK(std::string(e.what()).find("expected K=3") != std::string::npos);
  }
  SUBCASE("long row points at the first surplus token") {
    const auto e = capture("2 2 1 1\n* 0 0\n");
    CHECK(e.line() == 2);
    CHECK(e.col() == 3);
  }
  SUBCASE("too few rows") {
    const auto e = capture("2 2 1 1\n* 0\n");
    CHECK(std::string(e.what()).find("ends after 1 rows") != std::string::npos);
  }
  SUBCASE("too many rows") {
    const auto e = capture("2 2 1 1\n* 0\n0 *\n* 0\n");
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("after 2 rows") != std::string::npos);
  }
  SUBCASE("message is prefixed with source, line and column") {
    const auto e = capture("2 x 1 1\n");
    CHECK(std::string(e.what()).rfind("t:1:2: ", 0) == 0);
  }
}

TEST_CASE("file round-trip and open failures") {
  const std::string path = "io_roundtrip_tmp.pda";
  const Pda d63 = golden::from_text(golden::kD63);
  pda::write_pda_file(path, d63);

  std::ifstream back(path, std::ios::binary);
  std::stringstream contents;
  contents << back.rdbuf();
  CHECK(contents.str() == golden::kD63);

  CHECK(pda::read_pda_file(path) == d63);
  std::remove(path.c_str());

  CHECK_THROWS_AS(pda::read_pda_file("no_such_file.pda"), ParseError);
  try {
    pda::read_pda_file("no_such_file.pda");
  } catch (const ParseError& e) {
    CHECK(e.line() == 0);
    CHECK(std::string(e.what()).find("cannot open") != std::string::npos);
  }
}
