#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hilden/braid.hpp"

namespace hilden {

// Abstract generators of the subgroup presentation: p_i, s_i, t_i and the
// auxiliary pair r_1, r_2 (r_1 = p_1 and r_2 = p_2 p_1 as braids).
enum class GenKind { P, S, T, R };

struct Gen {
  GenKind kind;
  int index;
  friend bool operator==(const Gen&, const Gen&) = default;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

struct AbstractLetter {
  Gen gen;
  bool inverted = false;
  friend bool operator==(const AbstractLetter&, const AbstractLetter&) = default;
  friend auto operator<=>(const AbstractLetter&, const AbstractLetter&) = default;
};

struct AbstractWord {
  std::vector<AbstractLetter> letters;
  friend bool operator==(const AbstractWord&, const AbstractWord&) = default;
  friend auto operator<=>(const AbstractWord&, const AbstractWord&) = default;
};

// Tokens "p1", "s2^-1", "t3", "r1", whitespace-separated.
AbstractWord parse_abstract_word(const std::string& text);
std::string format_abstract_word(const AbstractWord& w);
std::string format_letter(const AbstractLetter& l);

AbstractWord abstract_inverse(const AbstractWord& w);
AbstractWord abstract_concat(const AbstractWord& a, const AbstractWord& b);
AbstractWord abstract_free_reduce(AbstractWord w);

inline AbstractWord operator+(const AbstractWord& a, const AbstractWord& b) {
  return abstract_concat(a, b);
}

// The defining braid word of one generator inside B_{2n}. Throws
// std::invalid_argument if the generator does not exist at this n.
BraidWord generator_braid_word(Gen g, int n);

// Index validity at ambient n: p_i, s_i need 1<=i<=n-1; t_i needs 1<=i<=n;
// r_1 needs n>=2 and r_2 needs n>=3.
bool generator_valid(Gen g, int n);

// Expands an abstract word to its braid word in B_{2n}; throws if any
// letter is invalid at this n.
BraidWord expand_to_braid(const AbstractWord& w, int n);

// One instance of a relation family: both sides as abstract words, plus the
// family label and the instance parameters used in reports.
struct RelationInstance {
  std::string family;
  std::string params;
  AbstractWord lhs;
  AbstractWord rhs;
};

// All instances of one family at ambient n, in deterministic order. Known
// families: "R0", "R1.1".."R1.12", "R2.1", "R2.2", "R3.1".."R3.3",
// "P1".."P14", "BRIDGE". Throws std::invalid_argument on unknown labels.
std::vector<RelationInstance> relation_instances(const std::string& family, int n);

// Family labels in canonical report order.
std::vector<std::string> all_family_labels();

// Smallest n at which a family has at least one instance.
int family_min_n(const std::string& family);

struct InstanceCheck {
  bool pass = false;
  std::string diagnostics;  // empty on pass
};

// Checks lhs = rhs as braids in B_{2n}.
InstanceCheck verify_instance(const RelationInstance& inst, int n);

struct VerifyReport {
  std::string text;  // one line per instance plus per-family summaries
  int passed = 0;
  int failed = 0;
  int skipped_families = 0;
  bool ok() const { return failed == 0; }
};

// Runs every family (or only those whose label starts with family_filter)
// at ambient n.
VerifyReport verify_families(int n, const std::string& family_filter = "");

// Generating set of the stabilizer of cut-system edge e (1 or 2) at ambient
// n, each generator paired with the relation label witnessing that r_e
// conjugation fixes it.
struct StabilizerGenerator {
  AbstractWord word;
  std::string witness_family;  // an R1.x label
  std::vector<std::string> witness_params;
};

std::vector<StabilizerGenerator> stabilizer_generators(int edge, int n);

}  // namespace hilden
