// Acceptance gate: one PASS/FAIL line per checked criterion, nonzero exit if
// any criterion fails. Run as: acceptance --data <data-dir> --cli <cli-path>
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hilden/action.hpp"
#include "hilden/braid.hpp"
#include "hilden/derivation.hpp"
#include "hilden/faces.hpp"
#include "hilden/relations.hpp"
#include "property_suite.hpp"

using namespace hilden;

namespace {

int g_failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::cout << (ok ? "PASS " : "FAIL ") << name;
  if (!detail.empty()) std::cout << ": " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

void run_criterion(const std::string& name, const std::function<std::string()>& body) {
  try {
    std::string detail = body();
    report(true, name, detail);
  } catch (const std::exception& e) {
    report(false, name, e.what());
  }
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

// Exit status of a shell command, with stdout/stderr redirected by `tail`.
int shell_status(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  if (WIFEXITED(rc)) return WEXITSTATUS(rc);
  return -2;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Rewrites the auxiliary generators into the p-generators they stand for.
AbstractWord expand_over_p(const AbstractWord& w) {
  AbstractWord out;
  for (const AbstractLetter& l : w.letters) {
    if (l.gen.kind != GenKind::R) {
      out.letters.push_back(l);
      continue;
    }
    std::vector<AbstractLetter> sub;
    if (l.gen.index == 1) {
      sub = {{{GenKind::P, 1}, false}};
    } else {
      sub = {{{GenKind::P, 2}, false}, {{GenKind::P, 1}, false}};
    }
    if (l.inverted) {
      std::reverse(sub.begin(), sub.end());
      for (AbstractLetter& s : sub) s.inverted = true;
    }
    out.letters.insert(out.letters.end(), sub.begin(), sub.end());
  }
  return abstract_free_reduce(out);
}

// Evaluates a presentation word back in the acting permutation group,
// reading each r-generator as its chosen transversal element.
Permutation eval_presentation_word(const ActionComplex& cx, const OrbitData& od,
                                   const GroupWord& w) {
  int nv = static_cast<int>(cx.vertex_names.size());
  Permutation acc = Permutation::identity(nv);
  for (const GroupLetter& l : w.letters) {
    Permutation g;
    if (l.name.size() >= 2 && l.name[0] == 'r' &&
        l.name.find_first_not_of("0123456789", 1) == std::string::npos) {
      size_t k = std::stoul(l.name.substr(1));
      require(k >= 1 && k <= od.edge_orbit_elts.size(), "unknown r-generator " + l.name);
      g = od.edge_orbit_elts[k - 1];
    } else {
      g = evaluate_word(cx, GroupWord{{{l.name, false}}});
    }
    if (l.inverted) g = g.inverse();
    acc = acc.then(g);
  }
  return acc;
}

std::string g_data;
std::string g_cli;

}  // namespace

int main(int argc, char** argv) {
  for (int k = 1; k + 1 < argc; k += 2) {
    std::string flag = argv[k];
    if (flag == "--data")
      g_data = argv[k + 1];
    else if (flag == "--cli")
      g_cli = argv[k + 1];
  }
  if (g_data.empty() || g_cli.empty()) {
    std::cerr << "usage: acceptance --data <data-dir> --cli <cli-path>\n";
    return 2;
  }

  run_criterion("relation-families-full", [] {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep = verify_families(4);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    require(rep.failed == 0, "some instance failed:\n" + rep.text);
    require(rep.passed == 85, "expected 85 instances, saw " + std::to_string(rep.passed));
    require(rep.skipped_families == 1, "expected exactly one vacuous family at n=4");
    for (const std::string& label : all_family_labels())
      if (label != "R1.10")
        require(!relation_instances(label, 4).empty(), label + " has no instance at n=4");
    require(ms < 60000, "verification took too long");
    return "85 instances, 0 failures, " + std::to_string(ms) + " ms";
  });

  run_criterion("relation-families-vacuous", [] {
    require(relation_instances("R1.10", 4).empty(), "expected no instance at n=4");
    VerifyReport rep = verify_families(5, "R1.10");
    require(rep.passed == 1 && rep.failed == 0, "instance at n=5 must pass:\n" + rep.text);
    return "vacuous at n=4, passes at n=5";
  });

  run_criterion("relation-families-range", [] {
    int instances = 0;
    for (int n = 2; n <= 6; ++n) {
      std::vector<std::string> labels = {"R0", "BRIDGE"};
      for (int k = 1; k <= 14; ++k) labels.push_back("P" + std::to_string(k));
      for (const std::string& label : labels)
        for (const RelationInstance& inst : relation_instances(label, n)) {
          InstanceCheck c = verify_instance(inst, n);
          require(c.pass, label + " " + inst.params + " fails at n=" + std::to_string(n) +
                              ": " + c.diagnostics);
          ++instances;
        }
    }
    return std::to_string(instances) + " instances pass for n=2..6";
  });

  run_criterion("derivation-replay", [] {
    const std::vector<std::pair<std::string, int>> files = {
        {"star", 4},  {"r1_4", 4}, {"r1_5", 4},  {"r1_6", 4},  {"r1_7", 4},
        {"r1_8", 4},  {"r1_9", 4}, {"r1_10", 5}, {"r1_11", 4}, {"r1_12", 4},
        {"r2_2", 4},  {"r3_1", 4}, {"r3_2", 4},  {"r3_3", 4}};
    int steps = 0;
    for (const auto& [name, n] : files) {
      SchemaRegistry reg;
      Derivation d =
          load_derivation_file(g_data + "/derivations/" + name + ".drv", n, reg);
      CheckOutcome out = check_derivation(d, n, reg);
      require(out.ok, name + ".drv: " + out.detail);
      steps += static_cast<int>(d.steps.size());
    }
    return "14 derivations, " + std::to_string(steps) + " steps replayed and cross-checked";
  });

  run_criterion("derivation-search", [] {
    struct Target {
      std::string family;
      int n;
    };
    const std::vector<Target> targets = {{"R1.1", 4}, {"R1.2", 4}, {"R1.3", 4}, {"R1.6", 4},
                                         {"R1.7", 4}, {"R1.8", 4}, {"R1.9", 4}, {"R1.10", 5}};
    SchemaRegistry reg;
    int searched = 0;
    size_t max_visited = 0;
    for (const Target& t : targets) {
      std::vector<RelationInstance> insts = relation_instances(t.family, t.n);
      require(!insts.empty(), t.family + " has no instance at n=" + std::to_string(t.n));
      for (const RelationInstance& inst : insts) {
        AbstractWord start = expand_over_p(inst.lhs);
        AbstractWord end = expand_over_p(inst.rhs);
        SearchOutcome out = search_derivation(start, end, t.n, reg, 6, 100000);
        require(out.status == SearchOutcome::Status::found,
                t.family + " " + inst.params + ": search did not find a derivation (visited " +
                    std::to_string(out.visited) + ")");
        CheckOutcome check = check_derivation(out.derivation, t.n, reg);
        require(check.ok, t.family + " " + inst.params +
                              ": found derivation fails re-check: " + check.detail);
        ++searched;
        max_visited = std::max(max_visited, out.visited);
      }
    }
    return std::to_string(searched) + " conjugation claims rediscovered (max visited " +
           std::to_string(max_visited) + ")";
  });

  run_criterion("property-suite", [] {
    PropertyConfig cfg;  // fixed default seed
    PropertyResult res = run_property_suite(cfg);
    require(res.iterations >= 10000, "fewer than 10000 iterations");
    require(res.violations == 0, res.first_failure);
    return std::to_string(res.iterations) + " random words, 0 violations";
  });

  run_criterion("presentation-triangle", [] {
    ActionComplex cx = parse_complex_file(g_data + "/complexes/triangle_s3.cx");
    ValidationReport rep = validate_complex(cx);
    require(rep.ok, rep.problems.empty() ? "invalid" : rep.problems.front());
    Presentation p = assemble_presentation(cx);
    require(p.generators == std::vector<std::string>{"w", "r1"}, "unexpected generators");
    std::vector<std::string> rels;
    for (const GroupWord& w : p.relators) rels.push_back(format_group_word(w));
    require(rels == std::vector<std::string>{"w w", "r1 r1", "r1 w r1 w r1 w^-1"},
            "unexpected relators: " + format_presentation(p));
    OrbitData od = orbit_data(cx);
    for (const GroupWord& w : p.relators)
      require(eval_presentation_word(cx, od, w).is_identity(),
              "relator does not evaluate to the identity: " + format_group_word(w));
    require(coset_enumerate(p, {}, 1000) == 6, "group order is not 6");
    return "order 6 with relators w w | r1 r1 | r1 w r1 w r1 w^-1";
  });

  run_criterion("presentation-rotation", [] {
    ActionComplex cx = parse_complex_file(g_data + "/complexes/triangle_c3.cx");
    require(validate_complex(cx).ok, "complex rejected");
    Presentation p = assemble_presentation(cx);
    require(coset_enumerate(p, {}, 1000) == 3, "group order is not 3");
    OrbitData od = orbit_data(cx);
    for (const GroupWord& w : p.relators)
      require(eval_presentation_word(cx, od, w).is_identity(), "relator not identity");
    return "order 3 from the free rotation action";
  });

  run_criterion("presentation-tetrahedron", [] {
    ActionComplex cx = parse_complex_file(g_data + "/complexes/tetrahedron.cx");
    ValidationReport rep = validate_complex(cx);
    require(rep.ok, rep.problems.empty() ? "invalid" : rep.problems.front());
    Presentation p = assemble_presentation(cx);
    std::vector<std::string> rels;
    for (const GroupWord& w : p.relators) rels.push_back(format_group_word(w));
    require(rels == std::vector<std::string>{"c c", "d d", "c d c d c d", "r1 d r1^-1 d^-1",
                                             "r1 r1", "r1 c r1 c r1 c^-1"},
            "unexpected relators: " + format_presentation(p));
    OrbitData od = orbit_data(cx);
    for (const GroupWord& w : p.relators)
      require(eval_presentation_word(cx, od, w).is_identity(),
              "relator does not evaluate to the identity: " + format_group_word(w));
    require(coset_enumerate(p, {}, 5000) == 24, "group order is not 24");
    require(coset_enumerate(p, {parse_group_word("c"), parse_group_word("d")}, 5000) == 4,
            "stabilizer index is not the vertex count");
    return "order 24, stabilizer index 4";
  });

  run_criterion("presentation-point", [] {
    ActionComplex cx = parse_complex_file(g_data + "/complexes/point.cx");
    require(validate_complex(cx).ok, "complex rejected");
    Presentation p = assemble_presentation(cx);
    require(p.generators == std::vector<std::string>{"w"}, "generators are not S0");
    require(p.relators.size() == 1 && format_group_word(p.relators[0]) == "w" &&
                p.relator_families[0] == "R0",
            "relators are not R0 verbatim");
    require(coset_enumerate(p, {}, 10) == 1, "group order is not 1");
    return "one-vertex complex returns the stabilizer presentation verbatim";
  });

  run_criterion("face-reduction", [] {
    using FK = FaceKind;
    require(decompose_face({FK::R, 3, 4}) ==
                std::vector<FaceClass>{{FK::T, 1, 2}, {FK::T, 1, 2}, {FK::R, 2, 4}, {FK::R, 1, 4}},
            "nested rectangle subdivision order is wrong");
    require(decompose_face({FK::R, 1, 3}) ==
                std::vector<FaceClass>{{FK::R, 1, 2}, {FK::T, 1, 2}, {FK::T, 1, 2}, {FK::S, 1, 1}},
            "edge nested rectangle subdivision order is wrong");
    require(decompose_face({FK::S, 3, 3}) ==
                std::vector<FaceClass>{{FK::T, 1, 1}, {FK::T, 1, 1}, {FK::S, 2, 3}, {FK::S, 1, 3}},
            "non-nested rectangle subdivision order is wrong");
    require(decompose_face({FK::S, 1, 3}) ==
                std::vector<FaceClass>{{FK::S, 1, 2}, {FK::T, 1, 2}, {FK::T, 1, 2}, {FK::S, 1, 1}},
            "edge non-nested rectangle subdivision order is wrong");
    int reduced = 0;
    for (FaceKind kind : {FK::T, FK::R, FK::S})
      for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) {
          FaceClass f{kind, i, j};
          if (!face_class_well_formed(f)) continue;
          ReductionTrace t = reduce_to_basis(f);
          require(!t.basis.empty(), format_face_class(f) + " reduced to nothing");
          for (const auto& [cls, count] : t.basis)
            require(is_terminal_face(cls) && count > 0,
                    format_face_class(f) + " kept non-terminal " + format_face_class(cls));
          ++reduced;
        }
    return std::to_string(reduced) + " classes reduce to the terminal basis";
  });

  run_criterion("panel-subdivisions", [] {
    struct Case {
      std::string file;
      std::map<std::string, int> values;
      bool expect_consistent;
    };
    const std::vector<Case> cases = {
        {"r_ij.txt", {{"i", 3}, {"j", 5}}, true},
        {"r_1j.txt", {{"j", 5}}, true},
        {"s_1j.txt", {{"j", 4}}, true},
        {"s_ij.txt", {{"i", 3}, {"j", 3}}, false},
    };
    for (const Case& c : cases) {
      Panel p = parse_panel_file(g_data + "/panels/" + c.file);
      PanelCheck check = check_panel(p, c.values);
      require(check.decomposition_matches,
              c.file + ": interior labels do not match the subdivision rule");
      if (c.expect_consistent) {
        require(check.all_consistent(), c.file + ": edge-length propagation found a conflict");
      } else {
        int bad = 0;
        for (const auto& v : check.verdicts)
          if (v.status == "inconsistent") {
            ++bad;
            require(v.label == "T(1,1)", c.file + ": unexpected inconsistent face " + v.label);
          }
        require(bad == 2, c.file + ": expected exactly the two triangle labels flagged");
      }
    }
    return "4 panels instantiated; labels match the reduction rule";
  });

  run_criterion("cli-word-problem", [] {
    int eq = shell_status("\"" + g_cli + "\" braid eq \"s1 s2 s1\" \"s2 s1 s2\" --strands 3 "
                          ">/dev/null 2>&1");
    require(eq == 0, "equal words: expected exit 0, got " + std::to_string(eq));
    int ne = shell_status("\"" + g_cli + "\" braid eq \"s1 s2 s1\" \"s1 s2\" --strands 4 "
                          ">/dev/null 2>&1");
    require(ne == 1, "unequal words: expected exit 1, got " + std::to_string(ne));
    int usage = shell_status("\"" + g_cli + "\" braid eq \"sX\" \"s1\" --strands 3 "
                             ">/dev/null 2>&1");
    require(usage == 2, "malformed word: expected exit 2, got " + std::to_string(usage));
    return "exit codes 0/1/2 for equal, unequal and malformed";
  });

  run_criterion("cli-derivation-check", [] {
    int good = shell_status("\"" + g_cli + "\" derive check \"" + g_data +
                            "/derivations/r1_4.drv\" --n 4 >/dev/null 2>&1");
    require(good == 0, "valid derivation: expected exit 0, got " + std::to_string(good));
    int bad = shell_status("\"" + g_cli + "\" derive check \"" + g_data +
                           "/derivations/negative/bad_result.drv\" --n 4 >/dev/null 2>&1");
    require(bad == 1, "forged derivation: expected exit 1, got " + std::to_string(bad));
    return "valid file exits 0, forged file exits 1";
  });

  run_criterion("cli-determinism", [] {
    namespace fs = std::filesystem;
    std::string a = (fs::temp_directory_path() / "verify_run_a.txt").string();
    std::string b = (fs::temp_directory_path() / "verify_run_b.txt").string();
    int rc1 = shell_status("\"" + g_cli + "\" verify --n 3 > \"" + a + "\" 2>&1");
    int rc2 = shell_status("\"" + g_cli + "\" verify --n 3 > \"" + b + "\" 2>&1");
    require(rc1 == 0 && rc2 == 0, "verify runs did not both succeed");
    std::string ta = read_file(a), tb = read_file(b);
    fs::remove(a);
    fs::remove(b);
    require(!ta.empty(), "verify produced no output");
    require(ta == tb, "verify output differs between identical runs");
    return "verify output byte-identical across runs";
  });

  std::cout << (g_failures ? "ACCEPTANCE: FAIL (" + std::to_string(g_failures) + " criteria)\n"
                           : "ACCEPTANCE: PASS\n");
  return g_failures ? 1 : 0;
}
