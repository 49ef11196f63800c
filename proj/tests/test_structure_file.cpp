#include <fstream>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "qhopf/structure_file.hpp"

using namespace qhopf;

#ifndef QHOPF_DATA_DIR
#error "QHOPF_DATA_DIR must point at the golden files"
#endif

namespace {

std::string golden(const std::string& name) {
  return std::string(QHOPF_DATA_DIR) + "/" + name + ".qh";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  return text.replace(at, from.size(), to);
}

}  // namespace

TEST_CASE("round trip is exact for every built-in") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const CatalogEntry e = load_builtin(name, false);
    const std::string text = render_structure(e);
    const CatalogEntry back = parse_structure(text);
    CHECK(render_structure(back) == text);
    const QuasiHopf& a = e.structure;
    const QuasiHopf& b = back.structure;
    CHECK(a.algebra->same_as(*b.algebra));
    CHECK(a.phi == b.phi);
    CHECK(a.phi_inv == b.phi_inv);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(a.r == b.r);
    CHECK(a.coproduct == b.coproduct);
    CHECK(a.antipode == b.antipode);
    CHECK(back.twistors.size() == e.twistors.size());
    CHECK(back.representations.size() == e.representations.size());
    CHECK(back.other_r.size() == e.other_r.size());
  }
}

TEST_CASE("golden files match the catalog") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    CHECK(slurp(golden(name)) == render_structure(load_builtin(name, false)));
  }
}

TEST_CASE("golden files verify") {
  for (const auto& name : builtin_names()) {
    if (is_stretch_builtin(name)) continue;
    CAPTURE(name);
    CHECK(verify_all(read_structure_file(golden(name)).structure).passed());
  }
}

TEST_CASE("rendering is deterministic and human readable") {
  const CatalogEntry e = load_builtin("z2-group", false);
  const std::string text = render_structure(e);
  CHECK(text == render_structure(e));
  CHECK(text.find(R"([["g","g"],"-1/2"])") != std::string::npos);
  CHECK(text.find(R"("field": "rationals")") != std::string::npos);
  const std::string uq = render_structure(load_builtin("small-uqsl2", false));
  CHECK(uq.find(R"x("field": "cyclotomic(3)")x") != std::string::npos);
}

TEST_CASE("parse errors carry a location") {
  const std::string text = slurp(golden("z2-group"));
  SUBCASE("malformed JSON") {
    try {
      parse_structure(text.substr(0, 40));
      FAIL("expected an error");
    } catch (const StructureFileError& e) {
      CHECK(e.position() > 0);
    }
  }
  SUBCASE("bad scalar token") {
    try {
      parse_structure(replace_once(text, R"("-1/2")", R"("-1/*2")"));
      FAIL("expected an error");
    } catch (const StructureFileError& e) {
      CHECK(e.location() == "r[3][1]");
      CHECK(e.position() == 3);
    }
  }
  SUBCASE("unknown label") {
    try {
      parse_structure(replace_once(text, R"([["g","g"],"-1/2"])", R"([["g","h"],"-1/2"])"));
      FAIL("expected an error");
    } catch (const StructureFileError& e) {
      CHECK(e.location() == "r[3][0][1]");
    }
  }
  SUBCASE("missing key") {
    CHECK_THROWS_AS(parse_structure(replace_once(text, R"("unit")", R"("uni")")),
                    StructureFileError);
  }
  SUBCASE("non-associative multiplication") {
    CHECK_THROWS_AS(
        parse_structure(replace_once(text, R"(["g","g","1","1"])", R"(["g","g","1","2"])")),
        StructureFileError);
  }
  SUBCASE("wrong multi-index length") {
    CHECK_THROWS_AS(parse_structure(replace_once(text, R"([["1","1","1"],"1"])",
                                                 R"([["1","1"],"1"])")),
                    StructureFileError);
  }
  SUBCASE("invalid twistor") {
    CHECK_THROWS_AS(parse_structure(replace_once(text, R"("5/4")", R"("7/4")")),
                    StructureFileError);
  }
}

TEST_CASE("file input and output") {
  const auto path = std::filesystem::temp_directory_path() / "qhopf-roundtrip.qh";
  const CatalogEntry e = load_builtin("sweedler-twisted", false);
  write_structure_file(path.string(), e);
  CHECK(render_structure(read_structure_file(path.string())) == render_structure(e));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_structure_file(path.string()), StructureFileError);
  CHECK(load_structure("builtin:z2-group").structure.name == "z2-group");
  CHECK_THROWS_AS(load_structure("builtin:nothing"), Error);
}
