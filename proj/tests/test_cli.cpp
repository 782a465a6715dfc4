#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "homalg/cli.hpp"
#include "homalg/construct.hpp"
#include "homalg/errors.hpp"
#include "homalg/gallery.hpp"
#include "homalg/verify.hpp"
#include "support/mutation.hpp"

using namespace homalg;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run homcheck(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_homcheck(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "homcheck_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"({
  "format_version": 1,
  "field": "rational",
  "objects": [
    {"name": "k", "kind": "hom-algebra", "dim": 1, "maps": {
      "mult": {"axes": "out,in1,in2", "shape": [1, 1, 1], "data": ["1"]},
      "unit": {"axes": "out", "shape": [1], "data": ["1"]},
      "alpha": {"axes": "out,in", "shape": [1, 1], "data": ["1"]}}}
  ]
})";

std::string with_replaced(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("minimal file loads and passes") {
  const StructureFile f = parse_structure_file(kMinimal);
  CHECK(f.objects.size() == 1);
  CHECK(check_hom_algebra(algebra_of(f, "k")));
  CHECK(verify(f).ok());
}

TEST_CASE("parse and validation errors") {
  SUBCASE("malformed JSON reports a position") {
    try {
      parse_structure_file("{\n  \"format_version\": 1,\n  \"field\": \n}");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() >= 1);
    }
  }
  SUBCASE("unknown fields are rejected") {
    CHECK_THROWS_AS(parse_structure_file(with_replaced(kMinimal, "\"dim\": 1", "\"dim\": 1, \"extra\": 0")),
                    ParseError);
  }
  SUBCASE("numbers are not scalars") {
    CHECK_THROWS_AS(parse_structure_file(with_replaced(kMinimal, "\"data\": [\"1\"]}}}", "\"data\": [1]}}}")),
                    ParseError);
  }
  SUBCASE("unsupported version") {
    CHECK_THROWS_AS(parse_structure_file(with_replaced(kMinimal, "\"format_version\": 1", "\"format_version\": 2")),
                    ParseError);
  }
  SUBCASE("data length must match the shape") {
    CHECK_THROWS_AS(parse_structure_file(with_replaced(kMinimal, "\"data\": [\"1\"]}}}", "\"data\": [\"1\", \"0\"]}}}")),
                    ParseError);
  }
  SUBCASE("singular automorphism") {
    const std::string text = with_replaced(kMinimal, R"("shape": [1, 1], "data": ["1"])", R"("shape": [1, 1], "data": ["0"])");
    try {
      parse_structure_file(text);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("automorphism singular") != std::string::npos);
    }
  }
  SUBCASE("wrong shape and dangling reference") {
    CHECK_THROWS_AS(parse_structure_file(with_replaced(kMinimal, "\"dim\": 1", "\"dim\": 2")), ValidationError);
    StructureFile f = parse_structure_file(kMinimal);
    f.put(witness_object("w", ModuleWitness(LinearMap::identity(1, f.field)), "nowhere"));
    CHECK_THROWS_AS(validate(f), ValidationError);
  }
}

TEST_CASE("gallery") {
  CHECK(gallery_names().size() >= 10);
  CHECK_THROWS_AS(build_example("unknown"), UnknownExample);
  const StructureFile z2 = build_example("group_z2");
  CHECK(hopf_of(z2, "kZ2").dim() == 2);

  const StructureFile h4 = parse_structure_file(serialize(build_example("h4_twisted")));
  const HomHopfAlgebra h = hopf_of(h4, "H4");
  CHECK(h.dim() == 4);
  CHECK(h.algebra().alpha()(2, 2) == h4.field.from_int(2));
  CHECK(h.algebra().alpha()(3, 3) == h4.field.from_int(2));
  CHECK(check_hom_bialgebra(bialgebra_of(build_example("group_z3_twist"), "kZ3")));

  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    const StructureFile f = build_example(name);
    const std::string once = serialize(f);
    const std::string twice = serialize(parse_structure_file(once));
    CHECK(once == twice);
    CHECK(serialize(parse_structure_file(twice)) == twice);
    const Report r = verify(f);
    CHECK(r.ok());
    CHECK(r.records.size() >= 1);
  }
}

TEST_CASE("rationals are canonical") {
  const std::string text = with_replaced(kMinimal, R"("shape": [1, 1], "data": ["1"])", R"("shape": [1, 1], "data": ["4/4"])");
  CHECK(serialize(parse_structure_file(text)).find("\"4/4\"") == std::string::npos);
  const std::string half = with_replaced(kMinimal, R"("shape": [1, 1], "data": ["1"])", R"("shape": [1, 1], "data": ["2/4"])");
  CHECK(serialize(parse_structure_file(half)).find("\"1/2\"") != std::string::npos);
}

TEST_CASE("every single-coefficient mutation is detected") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    const support::MutationOutcome m = support::mutation_suite(build_example(name));
    CHECK(m.total > 0);
    CHECK(m.undetected.empty());
    CHECK(m.unexpected.empty());
    CHECK(m.check_failures + m.validation_errors == m.total);
  }
}

TEST_CASE("constructions produce verifiable files") {
  struct Case {
    const char* example;
    const char* construction;
    ConstructArgs args;
  };
  const std::vector<Case> cases = {
      {"group_z2", "trivial_coring", {}},
      {"group_z2", "sweedler_coring", {{"along", "unit"}}},
      {"group_z2", "sweedler_coring", {{"along", "identity"}}},
      {"group_z2", "long_entwining", {}},
      {"sweedler_coring_z2_over_k", "base_ring_extension", {{"target", "kZ2"}, {"along", "identity"}}},
      {"sweedler_coring_z2_over_k", "dual_algebra", {{"side", "left"}}},
      {"sweedler_coring_z2_over_k", "dual_algebra", {{"side", "right"}}},
      {"sweedler_coring_z2_over_k", "dual_algebra", {{"side", "two-sided"}}},
      {"flip_entwining_z2", "coring_from_entwining", {}},
      {"flip_entwining_z2", "koppinen_smash", {}},
      {"dk_self_h4", "entwining_from_dk", {}},
      {"yd_z2_id", "yetter_drinfeld_entwining", {}},
      {"alt_dk_z2", "entwining_from_alt_dk", {}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.example);
    CAPTURE(c.construction);
    const StructureFile out = construct(build_example(c.example), c.construction, c.args);
    const StructureFile reparsed = parse_structure_file(serialize(out));
    CHECK(verify(reparsed).ok());
  }

  SUBCASE("base ring extension of a trivial coring along the unit map") {
    StructureFile f = construct(build_example("sweedler_coring_z2_over_k"), "trivial_coring",
                                {{"algebra", "k"}, {"name", "trivial_k"}});
    f = construct(f, "base_ring_extension", {{"coring", "trivial_k"}, {"target", "kZ2"}, {"along", "unit"}});
    CHECK(verify(f).ok());
  }
  SUBCASE("entwining recovered from its coring") {
    StructureFile f = construct(build_example("flip_entwining_z2"), "coring_from_entwining", {{"name", "c"}});
    f = construct(f, "entwining_from_coring", {{"coring", "c"}, {"coalgebra", "kZ2"}, {"name", "back"}});
    CHECK(entwining_of(f, "back").psi == entwining_of(f, "psi").psi);
  }
  SUBCASE("argument errors") {
    const StructureFile f = build_example("group_z2");
    CHECK_THROWS_AS(construct(f, "no_such", {}), std::invalid_argument);
    CHECK_THROWS_AS(construct(f, "trivial_coring", {{"bogus", "1"}}), std::invalid_argument);
    CHECK_THROWS_AS(construct(f, "coring_from_entwining", {}), ValidationError);
  }
}

TEST_CASE("command line") {
  const std::string flip = write("flip.json", serialize(build_example("flip_entwining_z2")));
  const std::string h4 = write("h4.json", serialize(build_example("h4_twisted")));

  SUBCASE("verify and report") {
    CHECK(homcheck({"verify", h4}).code == kExitPass);
    const Run json = homcheck({"verify", h4, "--json"});
    CHECK(json.code == kExitPass);
    CHECK(json.out.find("\"summary\"") != std::string::npos);
    CHECK(homcheck({"verify", h4, "--object", "H4", "--check", "antipode"}).code == kExitPass);
    CHECK(homcheck({"verify", h4, "--object", "nobody"}).code == kExitUsage);
    CHECK(homcheck({"report", h4, flip}).code == kExitPass);
  }

  SUBCASE("construct then verify") {
    const std::string out = (scratch_dir() / "coring.json").string();
    CHECK(homcheck({"construct", "coring_from_entwining", flip, out}).code == kExitPass);
    CHECK(homcheck({"verify", out}).code == kExitPass);
    const std::string smash = (scratch_dir() / "smash.json").string();
    CHECK(homcheck({"construct", "koppinen_smash", flip, smash, "--arg", "name=smash"}).code == kExitPass);
    CHECK(homcheck({"verify", smash, "--object", "smash"}).code == kExitPass);
    CHECK(homcheck({"construct", "nonsense", flip, out}).code == kExitUsage);
  }

  SUBCASE("a doubled coefficient fails with a named identity") {
    StructureFile f = build_example("h4_twisted");
    StoredMap& mult = f.objects[0].maps.at("mult");
    for (auto& x : mult.matrix.entries())
      if (!x.is_zero()) {
        x = x + x;
        break;
      }
    const std::string bad = write("doubled.json", serialize(f));
    const Run r = homcheck({"verify", bad});
    CHECK(r.code == kExitCheckFailure);
    CHECK(r.out.find("violated:") != std::string::npos);
    const Run rep = homcheck({"report", bad, h4, "--json"});
    CHECK(rep.code == kExitCheckFailure);
    CHECK(rep.out.find("\"lhs\"") != std::string::npos);
    CHECK(rep.out.find("\"indices\"") != std::string::npos);
  }

  SUBCASE("exit codes") {
    CHECK(homcheck({"verify", write("broken.json", "{ not json")}).code == kExitParse);
    CHECK(homcheck({"verify", (scratch_dir() / "missing.json").string()}).code == kExitParse);
    const std::string singular =
        with_replaced(kMinimal, R"("shape": [1, 1], "data": ["1"])", R"("shape": [1, 1], "data": ["0"])");
    CHECK(homcheck({"verify", write("singular.json", singular)}).code == kExitValidation);
    CHECK(homcheck({}).code == kExitUsage);
    CHECK(homcheck({"verify"}).code == kExitUsage);
    CHECK(homcheck({"report", write("broken2.json", "[]"), h4}).code == kExitParse);
  }

  SUBCASE("gallery commands") {
    const Run list = homcheck({"gallery", "list"});
    CHECK(list.code == kExitPass);
    CHECK(list.out.find("yd_h4_antipode_sq_inv") != std::string::npos);
    const Run emit = homcheck({"gallery", "emit", "group_z2"});
    CHECK(emit.code == kExitPass);
    CHECK(emit.out == serialize(build_example("group_z2")));
    CHECK(homcheck({"gallery", "emit", "unknown"}).code == kExitUsage);
    const std::string out = (scratch_dir() / "emitted.json").string();
    CHECK(homcheck({"gallery", "emit", "long_z2", "-o", out}).code == kExitPass);
    CHECK(read(out) == serialize(build_example("long_z2")));
  }
}

TEST_CASE("golden gallery files") {
  for (const auto& name : gallery_names()) {
    CAPTURE(name);
    const std::string path = std::string(GALLERY_DIR) + "/" + name + ".json";
    CHECK(read(path) == serialize(build_example(name)));
    CHECK(homcheck({"verify", path}).code == kExitPass);
  }
}
