// Command-line front end for the braid/presentation toolkit.
//
// Subcommands:
//   braid eq <w1> <w2> --strands M     decide equality of two braid words
//   braid nf <w> --strands M           print the normal form of a braid word
//   verify --n N [--family F]          instantiate and check relation families
//   derive check <file> --n N          replay a recorded derivation file
//   derive search <start> <end> ...    search for a derivation between words
//   present <complex-file>             presentation from a group action
//   schema reduce <class>              reduce a face class to basis classes
//
// Exit codes: 0 success, 1 a checked property failed / nothing found,
// 2 usage error or malformed input syntax.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hilden/action.hpp"
#include "hilden/braid.hpp"
#include "hilden/derivation.hpp"
#include "hilden/faces.hpp"
#include "hilden/relations.hpp"

namespace {

int cmd_braid_eq(const std::string& w1, const std::string& w2, int strands) {
  hilden::BraidWord a = hilden::parse_braid_word(w1, strands);
  hilden::BraidWord b = hilden::parse_braid_word(w2, strands);
  hilden::GarsideNormalForm na = hilden::normal_form(a);
  hilden::GarsideNormalForm nb = hilden::normal_form(b);
  std::cout << "lhs: " << hilden::format_normal_form(na) << "\n";
  std::cout << "rhs: " << hilden::format_normal_form(nb) << "\n";
  if (na == nb) {
    std::cout << "PASS\n";
    return 0;
  }
  std::cout << "FAIL\n";
  return 1;
}

int cmd_braid_nf(const std::string& w, int strands) {
  hilden::BraidWord a = hilden::parse_braid_word(w, strands);
  std::cout << hilden::format_normal_form(hilden::normal_form(a)) << "\n";
  return 0;
}

int cmd_verify(int n, const std::string& family) {
  hilden::VerifyReport report = hilden::verify_families(n, family);
  std::cout << report.text;
  return report.ok() ? 0 : 1;
}

int cmd_derive_check(const std::string& path, int n) {
  hilden::SchemaRegistry registry;
  hilden::Derivation d = hilden::load_derivation_file(path, n, registry);
  hilden::CheckOutcome outcome = hilden::check_derivation(d, n, registry);
  if (outcome.ok) {
    std::cout << "OK " << d.name << ": " << hilden::format_abstract_word(d.start) << " => "
              << hilden::format_abstract_word(d.end) << " (" << d.steps.size() << " steps)\n";
    return 0;
  }
  std::cout << "FAIL " << d.name << "\n" << outcome.detail << "\n";
  return 1;
}

int cmd_derive_search(const std::string& start, const std::string& end, int depth, int n,
                      long long node_cap) {
  hilden::SchemaRegistry registry;
  hilden::AbstractWord from = hilden::parse_abstract_word(start);
  hilden::AbstractWord to = hilden::parse_abstract_word(end);
  hilden::SearchOutcome outcome =
      hilden::search_derivation(from, to, n, registry, depth, node_cap);
  if (outcome.status == hilden::SearchOutcome::Status::found) {
    std::cout << hilden::format_derivation(outcome.derivation);
    return 0;
  }
  if (outcome.status == hilden::SearchOutcome::Status::cap_exceeded) {
    std::cout << "SEARCH CAP EXCEEDED (" << outcome.visited << " words visited)\n";
    return 1;
  }
  std::cout << "NOT FOUND within depth " << depth << " (" << outcome.visited
            << " words visited)\n";
  return 1;
}

int cmd_present(const std::string& path, long long enumerate_limit) {
  hilden::ActionComplex cx = hilden::parse_complex_file(path);
  hilden::ValidationReport v = hilden::validate_complex(cx);
  if (!v.ok) {
    std::cout << "INVALID complex:\n";
    for (const std::string& p : v.problems) std::cout << "  " << p << "\n";
    return 1;
  }
  hilden::Presentation p = hilden::assemble_presentation(cx);
  std::cout << hilden::format_presentation(p);
  auto order = hilden::coset_enumerate(p, {}, enumerate_limit);
  if (!order) {
    std::cout << "order: enumeration did not complete within " << enumerate_limit
              << " cosets\n";
    return 1;
  }
  std::cout << "order: " << *order << "\n";
  return 0;
}

int cmd_schema_reduce(const std::string& cls) {
  hilden::FaceClass f = hilden::parse_face_class(cls);
  if (!hilden::face_class_well_formed(f)) {
    std::cerr << "error: " << hilden::format_face_class(f)
              << " is not a well-formed face class\n";
    return 2;
  }
  hilden::ReductionTrace trace = hilden::reduce_to_basis(f);
  std::cout << hilden::format_reduction_trace(trace);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braid word problem, relation checking, derivation replay, and "
               "presentations from group actions"};
  app.require_subcommand(1);

  // braid
  CLI::App* braid = app.add_subcommand("braid", "braid word operations");
  braid->require_subcommand(1);
  std::string braid_w1, braid_w2;
  int braid_strands = 0;
  CLI::App* braid_eq = braid->add_subcommand("eq", "decide whether two braid words are equal");
  braid_eq->add_option("word1", braid_w1, "first braid word")->required();
  braid_eq->add_option("word2", braid_w2, "second braid word")->required();
  braid_eq->add_option("--strands", braid_strands, "number of strands")
      ->required()
      ->check(CLI::Range(1, 64));
  CLI::App* braid_nf = braid->add_subcommand("nf", "print the normal form of a braid word");
  braid_nf->add_option("word", braid_w1, "braid word")->required();
  braid_nf->add_option("--strands", braid_strands, "number of strands")
      ->required()
      ->check(CLI::Range(1, 64));

  // verify
  CLI::App* verify = app.add_subcommand("verify", "check the relation families inside the braid group");
  int verify_n = 0;
  std::string verify_family;
  verify->add_option("--n", verify_n, "index of the ambient braid group (2n strands)")
      ->required()
      ->check(CLI::Range(2, 32));
  verify->add_option("--family", verify_family, "restrict to one family label (e.g. R1 or R1.4)");

  // derive
  CLI::App* derive = app.add_subcommand("derive", "recorded rewriting derivations");
  derive->require_subcommand(1);
  std::string derive_file, derive_start, derive_end;
  int derive_n = 4;
  int derive_depth = 0;
  long long derive_cap = 100000;
  CLI::App* derive_check = derive->add_subcommand("check", "replay and verify a derivation file");
  derive_check->add_option("file", derive_file, "derivation file")->required();
  derive_check->add_option("--n", derive_n, "index used to instantiate schemas")
      ->required()
      ->check(CLI::Range(2, 32));
  CLI::App* derive_search =
      derive->add_subcommand("search", "search for a derivation between two words");
  derive_search->add_option("start", derive_start, "starting word")->required();
  derive_search->add_option("end", derive_end, "target word")->required();
  derive_search->add_option("--depth", derive_depth, "maximum number of steps")
      ->required()
      ->check(CLI::Range(1, 64));
  derive_search->add_option("--n", derive_n, "index used to instantiate schemas")
      ->check(CLI::Range(2, 32));
  derive_search->add_option("--node-cap", derive_cap, "maximum number of visited words");

  // present
  CLI::App* present =
      app.add_subcommand("present", "presentation from a group action on a 2-complex");
  std::string present_file;
  long long present_limit = 10000;
  present->add_option("file", present_file, "complex description file")->required();
  present->add_option("--enumerate-limit", present_limit,
                      "coset cap while computing the group order");

  // schema
  CLI::App* schema = app.add_subcommand("schema", "face class bookkeeping");
  schema->require_subcommand(1);
  std::string schema_class;
  CLI::App* schema_reduce =
      schema->add_subcommand("reduce", "reduce a face class to basis classes");
  schema_reduce->add_option("class", schema_class, "face class, e.g. R(2,3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (braid_eq->parsed()) return cmd_braid_eq(braid_w1, braid_w2, braid_strands);
    if (braid_nf->parsed()) return cmd_braid_nf(braid_w1, braid_strands);
    if (verify->parsed()) return cmd_verify(verify_n, verify_family);
    if (derive_check->parsed()) return cmd_derive_check(derive_file, derive_n);
    if (derive_search->parsed())
      return cmd_derive_search(derive_start, derive_end, derive_depth, derive_n, derive_cap);
    if (present->parsed()) return cmd_present(present_file, present_limit);
    if (schema_reduce->parsed()) return cmd_schema_reduce(schema_class);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
