#include <doctest.h>

#include <hullkit/commands.hpp>
#include <hullkit/errors.hpp>
#include <hullkit/fixtures.hpp>

#include <json.hpp>

using namespace hullkit;

namespace {

const char* kSol = R"(# sol
schema_version 1
algebra
  dim 3
  basis t x y
  bracket t x = x
  bracket t y = -y
end
)";

std::string error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse a small document") {
  const InputDocument doc = parse_document(kSol);
  CHECK(doc.algebra.dim() == 3);
  CHECK(doc.algebra == fixture("sol").algebra);
  CHECK_FALSE(doc.omega);
  CHECK(doc.options.massey_depth == 0);
}

TEST_CASE("indices, decimals and coefficient syntax") {
  const InputDocument doc = parse_document(R"(schema_version 1
algebra
  basis a b c
  bracket 1 2 = 0.5 c
  bracket a c = -2/4*c + 0
end
options
  massey_depth 4
end
)");
  CHECK(doc.algebra.bracket_basis(0, 1) == Vec{0, 0, Rational(1, 2)});
  CHECK(doc.algebra.bracket_basis(0, 2) == Vec{0, 0, Rational(-1, 2)});
  CHECK(doc.options.massey_depth == 4);
}

TEST_CASE("parse errors carry locations") {
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n  bracket a a = b\nend\n") ==
        "4:11: self-bracket must be zero");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n  bracket a b = 1/0 a\nend\n") ==
        "4:17: zero denominator in '1/0'");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n  bracket 1 3 = a\nend\n") ==
        "4:13: index 3 out of range 1..2");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n  bracket a b = a\n  bracket b a = a\nend\n") ==
        "5:3: duplicate bracket for (b, a)");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n  bracket a b = q\nend\n") ==
        "4:17: unknown basis element 'q'");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n") == "2:1: unterminated 'algebra' block");
  CHECK(error_of("algebra\n  basis a\nend\n") == "1:1: missing schema_version");
  CHECK(error_of("schema_version 2\n") == "1:16: unsupported schema_version 2");
  CHECK(error_of("schema_version 1\nalgebra\n  dim 3\n  basis a b\nend\n") == "4:3: basis has 2 elements but dim is 3");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\nend\nomega a^b^a + a\n") == "5:7: expected a 2-form term");
  CHECK(error_of("schema_version 1\nalgebra\n  basis a b\n  bracket a b = 2 $\nend\n") == "4:19: unexpected character '$'");
}

TEST_CASE("hull_override blocks") {
  const InputDocument doc = parse_document(R"(schema_version 1
algebra
  basis x1 x2 x3
  bracket x1 x2 = x3
end
hull_override
  algebra
    basis x1 x2 x3
    bracket x1 x2 = x3
  end
  finite_generator
    1 0 0
    0 -1 0
    0 0 -1
  end
end
)");
  REQUIRE(doc.hull_override);
  CHECK(doc.hull_override->finite_generators.front() == Mat::diagonal({1, -1, -1}));
  CHECK(doc == fixture("section7"));
  CHECK(error_of("schema_version 1\nalgebra\n  basis a\nend\nhull_override\n  algebra\n    basis a\n  end\n"
                 "  torus_derivation\n    1 2\n  end\nend\n") == "10:5: row has 2 entries, expected 1");
}

TEST_CASE("parse and render round-trip on every fixture") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const InputDocument doc = fixture(name);
    const std::string text = render_document(doc);
    const InputDocument back = parse_document(text);
    CHECK(back == doc);
    CHECK(render_document(back) == text);
  }
  const InputDocument doc = fixture("example1:m=2:n=1:a=1/2,-3:b=7");
  CHECK(parse_document(render_document(doc)) == doc);
}

TEST_CASE("fixture ids") {
  const FixtureId id = parse_fixture_id("example1:m=2:a=1,1/2");
  CHECK(id.name == "example1");
  CHECK(id.params.at("a") == std::vector<Rational>{1, Rational(1, 2)});
  CHECK(to_string(id) == "example1:a=1,1/2:m=2");
  CHECK(fixture("example1:m=2:a=1,1/2").algebra.dim() == 8);
  CHECK_THROWS_AS(fixture("nope"), PreconditionError);
  CHECK_THROWS_AS(fixture("sol:m=1"), PreconditionError);
  CHECK_THROWS_AS(fixture("example1:m=2:a=1"), PreconditionError);
  CHECK_THROWS_AS(parse_fixture_id("example1:m"), ParseError);
  CHECK_THROWS_AS(fixture("example1:m=12"), PreconditionError);
  CHECK(fixture("example1").algebra.dim() == 6);
  CHECK(fixture("section7_Mdelta").hull_override->u.dim() == 4);
  CHECK(fixture("heisenberg").algebra.dim() == 3);
}

TEST_CASE("every fixture validates") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(run("validate", fixture(name)).exit_code == kExitOk);
  }
}

TEST_CASE("commands and exit codes") {
  const auto coh = run("cohomology", fixture("heisenberg"));
  CHECK(coh.exit_code == kExitOk);
  const auto j = nlohmann::json::parse(coh.structured);
  CHECK(j["result"]["betti"] == nlohmann::json({1, 2, 2, 1}));
  CHECK(coh.text.find("betti: (1, 2, 2, 1)") != std::string::npos);

  const auto analyze = run("analyze", fixture("sol"));
  CHECK(analyze.exit_code == kExitOk);
  CHECK(analyze.text.find("formality: certified_formal") != std::string::npos);
  CHECK(analyze.text.find("Kähler: not Kähler (assuming a lattice exists)") != std::string::npos);
  const auto aj = nlohmann::json::parse(analyze.structured);
  CHECK(aj["result"]["kahler"]["assumptions"] == nlohmann::json({"a lattice exists"}));

  const auto lef = run("lefschetz", fixture("section7_Mdelta"));
  CHECK(lef.exit_code == kExitOk);
  CHECK(lef.text.find("hard Lefschetz: holds") != std::string::npos);
  CHECK(lef.text.find("H^1 -> H^3 isomorphism") != std::string::npos);

  CHECK(run("lefschetz", fixture("sol")).exit_code == kExitPrecondition);
  CHECK(run("hull", fixture("sl2")).exit_code == kExitPrecondition);
  CHECK(run("bogus", fixture("sol")).exit_code == kExitUsage);

  InputDocument bad = parse_document(
      "schema_version 1\nalgebra\n basis a b c\n bracket a b = b\n bracket a c = c\n bracket b c = a\nend\n");
  const auto v = run("validate", bad);
  CHECK(v.exit_code == kExitValidation);
  CHECK(nlohmann::json::parse(v.structured)["error"]["kind"] == "validation");
  CHECK(run("analyze", bad).exit_code == kExitOk);

  CHECK(parse_failure("analyze", "1:1: oops").exit_code == kExitParse);
}

TEST_CASE("structured output is byte-stable") {
  for (const auto& cmd : command_names()) {
    CAPTURE(cmd);
    const InputDocument doc = fixture("example1");
    CHECK(run(cmd, doc).structured == run(cmd, parse_document(render_document(doc))).structured);
  }
}

TEST_CASE("parse_form for command-line omega") {
  const std::vector<std::string> names{"x1", "x2", "x3", "y"};
  CHECK(parse_form("x1^y + x2^x3", names) == ExteriorForm::basis(4, {0, 3}) + ExteriorForm::basis(4, {1, 2}));
  CHECK(parse_form("-1/2 x3^x2", names) == Rational(1, 2) * ExteriorForm::basis(4, {1, 2}));
  CHECK_THROWS_AS(parse_form("x1^q", names), ParseError);
}
