#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilden/relations.hpp"

namespace hilden {

// A rewriting schema: either one of the presentation families P1..P14
// (instantiated with one or two indices) or a previously proved derived
// schema registered under its own name with fixed sides.
struct SchemaRegistry {
  struct Derived {
    AbstractWord lhs;
    AbstractWord rhs;
  };
  std::map<std::string, Derived> derived;

  void register_derived(const std::string& name, AbstractWord lhs, AbstractWord rhs);
  bool is_known(const std::string& name) const;
};

// Instantiates schema `rel` with the given indices at ambient n and returns
// its two sides. Throws std::invalid_argument for unknown schemas, missing
// or extra indices, or indices invalid at this n.
SchemaRegistry::Derived instantiate_schema(const std::string& rel, std::optional<int> i,
                                           std::optional<int> j, int n,
                                           const SchemaRegistry& registry);

struct DerivationStep {
  std::string rel;
  std::optional<int> i;
  std::optional<int> j;
  bool forward = true;
  int at = 0;
  AbstractWord result;
};

struct Derivation {
  std::string name;  // empty unless the file registers itself as a schema
  AbstractWord start;
  AbstractWord end;
  std::vector<DerivationStep> steps;
};

// Applies one step to `word`: some cyclic rotation of the instantiated
// relator (inverted for a backward step) splits as u * v^-1 with u nonempty;
// u must match at position `at`, and replacing it by v (then freely
// reducing) must yield exactly the step's recorded result. Returns the
// result or a diagnostic, including the positions at which the step would
// have applied.
struct StepOutcome {
  bool ok = false;
  AbstractWord word;
  std::string error;
};

StepOutcome apply_step(const AbstractWord& word, const DerivationStep& step, int n,
                       const SchemaRegistry& registry);

struct CheckOutcome {
  bool ok = false;
  std::string detail;  // per-step failure or cross-check diagnostics
};

// Replays every step from the claimed start, requires the final word to
// equal the claimed end, and cross-checks the claim as a braid equality in
// B_{2n}.
CheckOutcome check_derivation(const Derivation& d, int n, const SchemaRegistry& registry);

// Parses a derivation file. Grammar, one item per line:
//   # comment
//   name: <identifier>            (optional; registers the claim on success)
//   uses: <identifier>            (optional, repeatable; loads <id>.drv
//                                  from the same directory, checks it, and
//                                  registers it before this file is checked)
//   claim: <start word> => <end word>
//   step <k>: rel=<id> i=<int> [j=<int>] dir=<fwd|rev> at=<int> -> <word>
// Words use tokens like "p1 s2 t3 p1^-1". Throws std::runtime_error on
// malformed input. `registry` accumulates schemas from `uses:` imports.
Derivation load_derivation_file(const std::string& path, int n, SchemaRegistry& registry);

std::string format_derivation(const Derivation& d);

// Breadth-first search for a shortest derivation from start to end using
// every instance of P1..P14 (plus any registered derived schemas) at
// ambient n. Words are compared freely reduced. Returns the derivation if
// one exists within `depth` steps before `node_cap` distinct words are
// visited.
struct SearchOutcome {
  enum class Status { found, not_found, cap_exceeded } status;
  Derivation derivation;  // valid when status == found
  size_t visited = 0;
};

SearchOutcome search_derivation(const AbstractWord& start, const AbstractWord& end, int n,
                                const SchemaRegistry& registry, int depth, size_t node_cap);

}  // namespace hilden
