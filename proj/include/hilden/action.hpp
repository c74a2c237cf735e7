#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilden/permutation.hpp"

namespace hilden {

// A word over named group generators, each letter possibly inverted.
struct GroupLetter {
  std::string name;
  bool inverted = false;
  friend bool operator==(const GroupLetter&, const GroupLetter&) = default;
  friend auto operator<=>(const GroupLetter&, const GroupLetter&) = default;
};

struct GroupWord {
  std::vector<GroupLetter> letters;
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

GroupWord parse_group_word(const std::string& text);
std::string format_group_word(const GroupWord& w);
GroupWord group_inverse(const GroupWord& w);
GroupWord group_concat(const GroupWord& a, const GroupWord& b);
GroupWord group_free_reduce(GroupWord w);

// A finite 2-complex with a right action of a finite permutation group on
// its vertices, a basepoint, and a presentation of the basepoint stabilizer.
struct ActionComplex {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<int, int>> edges;        // endpoints, stored (min,max)
  std::vector<std::vector<int>> faces;           // boundary vertex cycles
  int basepoint = 0;
  std::vector<std::pair<std::string, Permutation>> group_gens;  // acting group
  std::vector<std::pair<std::string, Permutation>> stab_gens;   // S_0, subset of stabilizer
  std::vector<GroupWord> stab_relators;                          // R_0, over S_0 names
};

// File format, one directive per line ('#' comments allowed):
//   vertex <name>
//   edge <name> <name>
//   face <name> <name> <name> [...]
//   basepoint <name>
//   gen <name> = <cycles>            e.g. gen a = (v1 v2)(v3 v4); () = identity
//   stabgen <name> = <cycles>
//   stabrel <word>                   e.g. stabrel w w
ActionComplex parse_complex_file(const std::string& path);
ActionComplex parse_complex_text(const std::string& text, const std::string& origin);

// Evaluates a word over the complex's generator names (group and stabilizer
// generators both usable) to a vertex permutation.
Permutation evaluate_word(const ActionComplex& cx, const GroupWord& w);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// Checks the standing hypotheses: edges have distinct endpoints and are
// unique, faces are simple closed cycles along edges, the group action is
// cellular (maps edges to edges, faces to faces), vertex-transitive, the
// stabilizer generators fix the basepoint and generate its full stabilizer,
// and the stabilizer relators evaluate to the identity permutation.
ValidationReport validate_complex(const ActionComplex& cx);

// Orbit bookkeeping for edges at the basepoint: representative neighbors
// u_lambda with chosen group elements r_lambda taking the basepoint there.
struct OrbitData {
  std::vector<int> edge_orbit_reps;            // neighbor vertex per orbit
  std::vector<Permutation> edge_orbit_elts;    // r_lambda as permutations
  std::vector<GroupWord> edge_orbit_words;     // r_lambda over group gens
  std::vector<int> neighbor_orbit;             // neighbor vertex -> orbit id
  std::vector<Permutation> stabilizer;         // all stabilizer elements
};

OrbitData orbit_data(const ActionComplex& cx);

// The vertex path traversed by an alternating product
// r_{lambda_k} h_k ... r_{lambda_1} h_1 read with its rightmost factor
// applied last: returns (v_0, v_1, ..., v_k).
std::vector<int> h_product_path(const ActionComplex& cx, const OrbitData& od,
                                const std::vector<std::pair<int, GroupWord>>& factors);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
  std::vector<std::string> relator_families;  // "R0" | "R1" | "R2" | "R3", per relator
};

std::string format_presentation(const Presentation& p);

// Assembles the presentation of the full group from the stabilizer
// presentation plus one new generator per basepoint edge orbit and the
// R1/R2/R3 relation families read off the complex.
Presentation assemble_presentation(const ActionComplex& cx);

// Coset enumeration over the subgroup generated by `subgroup` (empty for
// the trivial subgroup). Returns the index if the table closes within
// `max_cosets` live cosets, std::nullopt if the limit is hit.
std::optional<long long> coset_enumerate(const Presentation& p,
                                         const std::vector<GroupWord>& subgroup,
                                         long long max_cosets);

}  // namespace hilden
