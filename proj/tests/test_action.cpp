#include <doctest.h>

#include <stdexcept>
#include <string>

#include "hilden/action.hpp"

using namespace hilden;

namespace {

const std::string kComplexes = std::string(TEST_DATA_DIR) + "/complexes";

std::vector<std::string> relator_strings(const Presentation& p) {
  std::vector<std::string> out;
  for (const GroupWord& w : p.relators) out.push_back(format_group_word(w));
  return out;
}

}  // namespace

TEST_CASE("group word algebra") {
  GroupWord w = parse_group_word("a b^-1 a");
  CHECK(format_group_word(w) == "a b^-1 a");
  CHECK(format_group_word(group_inverse(w)) == "a^-1 b a^-1");
  CHECK(group_free_reduce(parse_group_word("a a^-1 b")) == parse_group_word("b"));
  CHECK(format_group_word(group_concat(parse_group_word("a"), parse_group_word("b"))) == "a b");
}

TEST_CASE("triangle with the full symmetric action") {
  ActionComplex cx = parse_complex_file(kComplexes + "/triangle_s3.cx");
  ValidationReport rep = validate_complex(cx);
  CHECK_MESSAGE(rep.ok, (rep.problems.empty() ? "" : rep.problems.front()));

  Presentation p = assemble_presentation(cx);
  CHECK(p.generators == std::vector<std::string>{"w", "r1"});
  CHECK(relator_strings(p) ==
        std::vector<std::string>{"w w", "r1 r1", "r1 w r1 w r1 w^-1"});
  CHECK(p.relator_families == std::vector<std::string>{"R0", "R2", "R3"});

  // Every relator must die under the complex's own evaluation map, reading
  // r1 as the chosen transversal element.
  OrbitData od = orbit_data(cx);
  REQUIRE(od.edge_orbit_elts.size() == 1);
  auto eval_relator = [&](const GroupWord& w) {
    Permutation acc = Permutation::identity(3);
    for (const GroupLetter& l : w.letters) {
      Permutation g = l.name == "r1" ? od.edge_orbit_elts[0]
                                     : evaluate_word(cx, GroupWord{{{l.name, false}}});
      if (l.inverted) g = g.inverse();
      acc = acc.then(g);
    }
    return acc;
  };
  for (const GroupWord& w : p.relators) CHECK(eval_relator(w).is_identity());

  CHECK(coset_enumerate(p, {}, 1000) == 6);
}

TEST_CASE("triangle with the rotation action") {
  ActionComplex cx = parse_complex_file(kComplexes + "/triangle_c3.cx");
  CHECK(validate_complex(cx).ok);
  Presentation p = assemble_presentation(cx);
  CHECK(p.generators == std::vector<std::string>{"r1", "r2"});
  CHECK(relator_strings(p) == std::vector<std::string>{"r2 r1", "r1 r2", "r1 r1 r1"});
  CHECK(p.relator_families == std::vector<std::string>{"R2", "R2", "R3"});
  CHECK(coset_enumerate(p, {}, 1000) == 3);
}

TEST_CASE("tetrahedron boundary with the full symmetric action") {
  ActionComplex cx = parse_complex_file(kComplexes + "/tetrahedron.cx");
  ValidationReport rep = validate_complex(cx);
  CHECK_MESSAGE(rep.ok, (rep.problems.empty() ? "" : rep.problems.front()));
  Presentation p = assemble_presentation(cx);
  CHECK(p.generators == std::vector<std::string>{"c", "d", "r1"});
  CHECK(relator_strings(p) ==
        std::vector<std::string>{"c c", "d d", "c d c d c d", "r1 d r1^-1 d^-1", "r1 r1",
                                 "r1 c r1 c r1 c^-1"});
  CHECK(p.relator_families ==
        std::vector<std::string>{"R0", "R0", "R0", "R1", "R2", "R3"});
  CHECK(coset_enumerate(p, {}, 5000) == 24);
  // Quotient by the stabilizer recovers the vertex count.
  CHECK(coset_enumerate(p, {parse_group_word("c"), parse_group_word("d")}, 5000) == 4);
}

TEST_CASE("one-vertex complex gives back the stabilizer presentation") {
  ActionComplex cx = parse_complex_file(kComplexes + "/point.cx");
  CHECK(validate_complex(cx).ok);
  Presentation p = assemble_presentation(cx);
  CHECK(p.generators == std::vector<std::string>{"w"});
  CHECK(relator_strings(p) == std::vector<std::string>{"w"});
  CHECK(p.relator_families == std::vector<std::string>{"R0"});
  CHECK(coset_enumerate(p, {}, 10) == 1);
}

TEST_CASE("alternating products trace vertex paths") {
  ActionComplex cx = parse_complex_file(kComplexes + "/triangle_s3.cx");
  OrbitData od = orbit_data(cx);
  REQUIRE(od.edge_orbit_reps == std::vector<int>{1});
  std::vector<int> path = h_product_path(
      cx, od, {{0, GroupWord{}}, {0, parse_group_word("w")}, {0, parse_group_word("w")}});
  CHECK(path == std::vector<int>{0, 1, 2, 0});
  CHECK_THROWS_AS(h_product_path(cx, od, {{5, GroupWord{}}}), std::invalid_argument);
}

TEST_CASE("parser rejects malformed complexes") {
  CHECK_THROWS_AS(parse_complex_text("vertex v0\n", "inline"), std::runtime_error);  // no basepoint
  CHECK_THROWS_AS(parse_complex_text("basepoint v0\n", "inline"), std::runtime_error);
  CHECK_THROWS_AS(
      parse_complex_text("vertex v0\nvertex v1\nedge v0 v2\nbasepoint v0\n", "inline"),
      std::runtime_error);  // unknown vertex
  CHECK_THROWS_AS(
      parse_complex_text("vertex v0\nvertex v1\nedge v0 v1\nbasepoint v0\n"
                         "gen a = (v0 v1)\nstabgen a = ()\n",
                         "inline"),
      std::runtime_error);  // one name for two generators
}

TEST_CASE("validation flags broken hypotheses") {
  // Generator does not preserve the edge set.
  ActionComplex bad_edges = parse_complex_text(
      "vertex v0\nvertex v1\nvertex v2\n"
      "edge v0 v1\nedge v0 v2\n"
      "basepoint v0\n"
      "gen a = (v0 v1)\ngen b = (v0 v1 v2)\n"
      "stabgen w = (v1 v2)\n",
      "inline");
  ValidationReport r1 = validate_complex(bad_edges);
  CHECK_FALSE(r1.ok);
  bool found = false;
  for (const std::string& p : r1.problems)
    if (p.find("does not preserve the edge set") != std::string::npos) found = true;
  CHECK(found);

  // Declared stabilizer generators give a proper subgroup.
  ActionComplex small_stab = parse_complex_text(
      "vertex v0\nvertex v1\nvertex v2\n"
      "edge v0 v1\nedge v0 v2\nedge v1 v2\n"
      "face v0 v1 v2\n"
      "basepoint v0\n"
      "gen a = (v0 v1)\ngen b = (v0 v1 v2)\n",
      "inline");
  ValidationReport r2 = validate_complex(small_stab);
  CHECK_FALSE(r2.ok);
  found = false;
  for (const std::string& p : r2.problems)
    if (p.find("basepoint stabilizer has order 2") != std::string::npos) found = true;
  CHECK(found);

  // Stabilizer generator moving the basepoint, and a false stabilizer relator.
  ActionComplex moving = parse_complex_text(
      "vertex v0\nvertex v1\nvertex v2\n"
      "edge v0 v1\nedge v0 v2\nedge v1 v2\n"
      "face v0 v1 v2\n"
      "basepoint v0\n"
      "gen a = (v0 v1)\ngen b = (v0 v1 v2)\n"
      "stabgen x = (v0 v1)\nstabgen w = (v1 v2)\nstabrel w\n",
      "inline");
  ValidationReport r3 = validate_complex(moving);
  CHECK_FALSE(r3.ok);
  bool moved = false, relator = false;
  for (const std::string& p : r3.problems) {
    if (p.find("moves the basepoint") != std::string::npos) moved = true;
    if (p.find("does not evaluate to the identity") != std::string::npos) relator = true;
  }
  CHECK(moved);
  CHECK(relator);

  // Transitivity failure.
  ActionComplex split = parse_complex_text(
      "vertex v0\nvertex v1\n"
      "basepoint v0\n"
      "gen a = ()\n",
      "inline");
  ValidationReport r4 = validate_complex(split);
  CHECK_FALSE(r4.ok);
  found = false;
  for (const std::string& p : r4.problems)
    if (p.find("not vertex-transitive") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("coset enumeration on classic presentations") {
  Presentation cyclic;
  cyclic.generators = {"a"};
  cyclic.relators = {parse_group_word("a a a")};
  cyclic.relator_families = {"R0"};
  CHECK(coset_enumerate(cyclic, {}, 100) == 3);
  CHECK(coset_enumerate(cyclic, {parse_group_word("a")}, 100) == 1);

  Presentation sym3;
  sym3.generators = {"x", "y"};
  sym3.relators = {parse_group_word("x x"), parse_group_word("y y y"),
                   parse_group_word("x y x y")};
  sym3.relator_families = {"R0", "R0", "R0"};
  CHECK(coset_enumerate(sym3, {}, 100) == 6);
  CHECK(coset_enumerate(sym3, {parse_group_word("y")}, 100) == 2);

  Presentation free2;
  free2.generators = {"a", "b"};
  CHECK_FALSE(coset_enumerate(free2, {}, 500).has_value());
}
