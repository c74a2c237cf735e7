#include "hilden/relations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hilden {

namespace {

constexpr char kind_char(GenKind k) {
  switch (k) {
    case GenKind::P: return 'p';
    case GenKind::S: return 's';
    case GenKind::T: return 't';
    case GenKind::R: return 'r';
  }
  return '?';
}

AbstractLetter L(GenKind k, int i, bool inv = false) { return {{k, i}, inv}; }

AbstractWord W(std::vector<AbstractLetter> ls) { return {std::move(ls)}; }

AbstractWord conj(const AbstractWord& outer, const AbstractWord& inner) {
  return abstract_concat(abstract_concat(outer, inner), abstract_inverse(outer));
}

const AbstractWord& r1_word() {
  static const AbstractWord w = W({L(GenKind::R, 1)});
  return w;
}
const AbstractWord& r2_word() {
  static const AbstractWord w = W({L(GenKind::R, 2)});
  return w;
}

AbstractWord gens(GenKind k, std::vector<int> idx) {
  AbstractWord w;
  for (int i : idx) w.letters.push_back(L(k, i));
  return w;
}

}  // namespace

AbstractWord parse_abstract_word(const std::string& text) {
  AbstractWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    GenKind kind;
    switch (tok[0]) {
      case 'p': kind = GenKind::P; break;
      case 's': kind = GenKind::S; break;
      case 't': kind = GenKind::T; break;
      case 'r': kind = GenKind::R; break;
      default: throw std::invalid_argument("malformed generator token: " + tok);
    }
    std::string body = tok.substr(1);
    bool inverted = false;
    if (auto pos = body.find("^-1"); pos != std::string::npos && pos + 3 == body.size()) {
      inverted = true;
      body = body.substr(0, pos);
    }
    if (body.empty() || !std::all_of(body.begin(), body.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument("malformed generator token: " + tok);
    w.letters.push_back(L(kind, std::stoi(body), inverted));
  }
  return w;
}

std::string format_letter(const AbstractLetter& l) {
  std::string s;
  s += kind_char(l.gen.kind);
  s += std::to_string(l.gen.index);
  if (l.inverted) s += "^-1";
  return s;
}

std::string format_abstract_word(const AbstractWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += format_letter(w.letters[i]);
  }
  return s;
}

AbstractWord abstract_inverse(const AbstractWord& w) {
  AbstractWord r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->gen, !it->inverted});
  return r;
}

AbstractWord abstract_concat(const AbstractWord& a, const AbstractWord& b) {
  AbstractWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

AbstractWord abstract_free_reduce(AbstractWord w) {
  std::vector<AbstractLetter> out;
  out.reserve(w.letters.size());
  for (const AbstractLetter& l : w.letters) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverted != l.inverted)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

bool generator_valid(Gen g, int n) {
  switch (g.kind) {
    case GenKind::P:
    case GenKind::S: return 1 <= g.index && g.index <= n - 1;
    case GenKind::T: return 1 <= g.index && g.index <= n;
    case GenKind::R: return (g.index == 1 && n >= 2) || (g.index == 2 && n >= 3);
  }
  return false;
}

BraidWord generator_braid_word(Gen g, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!generator_valid(g, n))
    throw std::invalid_argument(std::string("generator ") + kind_char(g.kind) +
                                std::to_string(g.index) + " does not exist at n=" +
                                std::to_string(n));
  BraidWord w;
  w.strands = 2 * n;
  int i = g.index;
  switch (g.kind) {
    case GenKind::T: w.letters = {2 * i - 1}; break;
    case GenKind::S: w.letters = {2 * i, 2 * i - 1, 2 * i + 1, 2 * i}; break;
    case GenKind::P: w.letters = {2 * i, 2 * i - 1, -(2 * i + 1), -(2 * i)}; break;
    case GenKind::R:
      if (i == 1)
        w.letters = {2, 1, -3, -2};
      else
        w.letters = {4, 3, 2, 1, -5, -4, -3, -2};
      break;
  }
  return w;
}

BraidWord expand_to_braid(const AbstractWord& w, int n) {
  BraidWord out;
  out.strands = 2 * n;
  for (const AbstractLetter& l : w.letters) {
    BraidWord g = generator_braid_word(l.gen, n);
    if (l.inverted) g = braid_inverse(g);
    out.letters.insert(out.letters.end(), g.letters.begin(), g.letters.end());
  }
  return out;
}

std::vector<std::string> all_family_labels() {
  std::vector<std::string> labels = {"R0"};
  for (int k = 1; k <= 12; ++k) labels.push_back("R1." + std::to_string(k));
  labels.push_back("R2.1");
  labels.push_back("R2.2");
  for (int k = 1; k <= 3; ++k) labels.push_back("R3." + std::to_string(k));
  for (int k = 1; k <= 14; ++k) labels.push_back("P" + std::to_string(k));
  labels.push_back("BRIDGE");
  return labels;
}

std::vector<RelationInstance> relation_instances(const std::string& family, int n) {
  if (n < 2) throw std::invalid_argument("relation families need n >= 2");
  std::vector<RelationInstance> out;
  auto add = [&](std::string params, AbstractWord lhs, AbstractWord rhs) {
    out.push_back({family, std::move(params), std::move(lhs), std::move(rhs)});
  };
  auto num = [](int a) { return std::to_string(a); };
  auto pair_params = [&](int a, int b) { return num(a) + "," + num(b); };
  const GenKind P = GenKind::P, S = GenKind::S, T = GenKind::T;

  if (family == "R0") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        add("sscomm," + pair_params(i, j), W({L(S, i), L(S, j)}), W({L(S, j), L(S, i)}));
    for (int i = 1; i <= n - 2; ++i)
      add("ssbraid," + num(i), W({L(S, i), L(S, i + 1), L(S, i)}),
          W({L(S, i + 1), L(S, i), L(S, i + 1)}));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        add("ttcomm," + pair_params(i, j), W({L(T, i), L(T, j)}), W({L(T, j), L(T, i)}));
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        add("stcomm," + pair_params(i, j), W({L(S, i), L(T, j)}), W({L(T, j), L(S, i)}));
      }
    for (int i = 1; i <= n - 1; ++i) {
      add("stswap," + pair_params(i, i), W({L(S, i), L(T, i)}), W({L(T, i + 1), L(S, i)}));
      add("stswap," + pair_params(i, i + 1), W({L(S, i), L(T, i + 1)}), W({L(T, i), L(S, i)}));
    }
    return out;
  }

  if (family == "R1.1") {
    if (n >= 2) add("-", conj(r1_word(), W({L(T, 2)})), W({L(T, 1)}));
    return out;
  }
  if (family == "R1.2") {
    for (int k = 3; k <= n; ++k) add(num(k), conj(r1_word(), W({L(T, k)})), W({L(T, k)}));
    return out;
  }
  if (family == "R1.3") {
    for (int k = 3; k <= n - 1; ++k) add(num(k), conj(r1_word(), W({L(S, k)})), W({L(S, k)}));
    return out;
  }
  if (family == "R1.4") {
    if (n >= 2)
      add("-", conj(r1_word(), gens(S, {1, 1}) + gens(T, {1, 1})),
          gens(S, {1, 1}) + gens(T, {2, 2}));
    return out;
  }
  if (family == "R1.5") {
    if (n >= 3) add("-", conj(r1_word(), gens(S, {2, 1, 1, 2})), gens(S, {2, 1, 1, 2}));
    return out;
  }
  if (family == "R1.6") {
    if (n >= 3) add("-", conj(r2_word(), W({L(T, 2)})), W({L(T, 1)}));
    return out;
  }
  if (family == "R1.7") {
    if (n >= 3) add("-", conj(r2_word(), W({L(T, 3)})), W({L(T, 2)}));
    return out;
  }
  if (family == "R1.8") {
    if (n >= 3)
      for (int k = 4; k <= n; ++k) add(num(k), conj(r2_word(), W({L(T, k)})), W({L(T, k)}));
    return out;
  }
  if (family == "R1.9") {
    if (n >= 3) add("-", conj(r2_word(), W({L(S, 2)})), W({L(S, 1)}));
    return out;
  }
  if (family == "R1.10") {
    if (n >= 3)
      for (int k = 4; k <= n - 1; ++k) add(num(k), conj(r2_word(), W({L(S, k)})), W({L(S, k)}));
    return out;
  }
  if (family == "R1.11") {
    if (n >= 3)
      add("-", conj(r2_word(), gens(S, {1, 2, 2, 1}) + gens(T, {1, 1})),
          gens(S, {2, 1, 1, 2}) + gens(T, {3, 3}));
    return out;
  }
  if (family == "R1.12") {
    if (n >= 4)
      add("-", conj(r2_word(), gens(S, {3, 2, 1, 1, 2, 3})), gens(S, {3, 2, 1, 1, 2, 3}));
    return out;
  }
  if (family == "R2.1") {
    if (n >= 2)
      add("-", r1_word() + W({L(T, 1), L(S, 1)}) + r1_word(), W({L(S, 1), L(T, 1)}));
    return out;
  }
  if (family == "R2.2") {
    if (n >= 3)
      add("-", r2_word() + W({L(S, 1), L(T, 2), L(S, 2)}) + r2_word(),
          W({L(S, 2), L(S, 1), L(T, 1)}));
    return out;
  }
  if (family == "R3.1") {
    if (n >= 4) {
      AbstractWord lhs = r1_word() + gens(S, {1, 2, 3, 1, 2}) + r1_word() +
                         gens(S, {1, 2, 3, 1, 2}) + W({L(T, 2), L(T, 4)}) + r1_word() +
                         gens(S, {2, 3, 1, 2}) + r1_word();
      AbstractWord rhs =
          gens(S, {1, 2, 3, 1, 2, 1, 2, 1, 3, 2, 2, 3, 1, 2}) + W({L(T, 1), L(T, 3)});
      add("-", std::move(lhs), std::move(rhs));
    }
    return out;
  }
  if (family == "R3.2") {
    if (n >= 3) {
      AbstractWord rr = r1_word() + r2_word();
      add("display", rr + gens(S, {1, 2, 1}) + W({L(T, 2), L(T, 3)}) + rr,
          gens(S, {2, 1, 2}) + W({L(T, 1), L(T, 2)}));
      add("table", rr + gens(S, {1, 2, 1}) + W({L(T, 3), L(T, 2)}) + rr,
          gens(S, {2, 1, 2}) + W({L(T, 2), L(T, 1)}));
    }
    return out;
  }
  if (family == "R3.3") {
    if (n >= 3)
      add("-", r2_word() + W({L(S, 1), L(T, 2)}) + r1_word() + gens(S, {2, 1}) + r1_word(),
          gens(S, {1, 2, 1}) + W({L(T, 1)}));
    return out;
  }

  if (family == "P1" || family == "P3") {
    GenKind k = family == "P1" ? P : S;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j)
        add(pair_params(i, j), W({L(k, i), L(k, j)}), W({L(k, j), L(k, i)}));
    return out;
  }
  if (family == "P2" || family == "P4") {
    GenKind k = family == "P2" ? P : S;
    for (int i = 1; i <= n - 2; ++i)
      add(num(i), W({L(k, i), L(k, i + 1), L(k, i)}), W({L(k, i + 1), L(k, i), L(k, i + 1)}));
    return out;
  }
  if (family == "P5") {
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) <= 1) continue;
        add(pair_params(i, j), W({L(P, i), L(S, j)}), W({L(S, j), L(P, i)}));
      }
    return out;
  }
  if (family == "P6") {
    for (int i = 1; i <= n - 2; ++i)
      add(num(i), W({L(P, i), L(S, i + 1), L(S, i)}), W({L(S, i + 1), L(S, i), L(P, i + 1)}));
    return out;
  }
  if (family == "P7") {
    for (int i = 1; i <= n - 2; ++i)
      add(num(i), W({L(P, i + 1), L(P, i), L(S, i + 1)}), W({L(S, i), L(P, i + 1), L(P, i)}));
    return out;
  }
  if (family == "P8") {
    for (int i = 1; i <= n - 2; ++i)
      add(num(i), W({L(P, i + 1), L(S, i), L(S, i + 1)}), W({L(S, i), L(S, i + 1), L(P, i)}));
    return out;
  }
  if (family == "P9") {
    for (int i = 1; i <= n - 1; ++i)
      add(num(i), W({L(P, i), L(T, i), L(S, i), L(P, i)}), W({L(S, i), L(T, i)}));
    return out;
  }
  if (family == "P10" || family == "P12") {
    GenKind k = family == "P10" ? P : S;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        add(pair_params(i, j), W({L(k, i), L(T, j)}), W({L(T, j), L(k, i)}));
      }
    return out;
  }
  if (family == "P11") {
    for (int i = 1; i <= n - 1; ++i)
      add(num(i), W({L(P, i), L(T, i + 1)}), W({L(T, i), L(P, i)}));
    return out;
  }
  if (family == "P13") {
    for (int i = 1; i <= n - 1; ++i) {
      add(pair_params(i, i), W({L(S, i), L(T, i)}), W({L(T, i + 1), L(S, i)}));
      add(pair_params(i, i + 1), W({L(S, i), L(T, i + 1)}), W({L(T, i), L(S, i)}));
    }
    return out;
  }
  if (family == "P14") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        add(pair_params(i, j), W({L(T, i), L(T, j)}), W({L(T, j), L(T, i)}));
    return out;
  }

  if (family == "BRIDGE") {
    add("r1=p1", r1_word(), W({L(P, 1)}));
    if (n >= 3) add("r2=p2p1", r2_word(), W({L(P, 2), L(P, 1)}));
    return out;
  }

  throw std::invalid_argument("unknown relation family: " + family);
}

int family_min_n(const std::string& family) {
  for (int n = 2; n <= 12; ++n)
    if (!relation_instances(family, n).empty()) return n;
  throw std::invalid_argument("family empty for all n up to 12: " + family);
}

InstanceCheck verify_instance(const RelationInstance& inst, int n) {
  BraidWord lhs = expand_to_braid(inst.lhs, n);
  BraidWord rhs = expand_to_braid(inst.rhs, n);
  if (braid_equal(lhs, rhs)) return {true, ""};
  std::string diag = "exponent sums " + std::to_string(exponent_sum(lhs)) + " vs " +
                     std::to_string(exponent_sum(rhs)) + "; permutations " +
                     permutation_image(lhs).to_string() + " vs " +
                     permutation_image(rhs).to_string();
  return {false, diag};
}

VerifyReport verify_families(int n, const std::string& family_filter) {
  auto matches = [&](const std::string& label) {
    if (family_filter.empty()) return true;
    return label == family_filter || label.rfind(family_filter + ".", 0) == 0;
  };
  std::vector<std::string> labels;
  for (const std::string& label : all_family_labels())
    if (matches(label)) labels.push_back(label);
  if (labels.empty())
    throw std::invalid_argument("no relation family matches filter: " + family_filter);

  VerifyReport rep;
  std::string body;
  std::string family_lines;
  for (const std::string& label : labels) {
    std::vector<RelationInstance> insts = relation_instances(label, n);
    if (insts.empty()) {
      body += label + " - SKIP\n";
      family_lines += "FAMILY " + label + " instances=0 SKIP\n";
      ++rep.skipped_families;
      continue;
    }
    int pass = 0, fail = 0;
    for (const RelationInstance& inst : insts) {
      InstanceCheck c = verify_instance(inst, n);
      body += inst.family + " " + inst.params + (c.pass ? " PASS" : " FAIL") + "\n";
      if (!c.pass) body += "  " + c.diagnostics + "\n";
      (c.pass ? pass : fail)++;
    }
    rep.passed += pass;
    rep.failed += fail;
    family_lines += "FAMILY " + label + " instances=" + std::to_string(insts.size()) +
                    " pass=" + std::to_string(pass) + " fail=" + std::to_string(fail) + "\n";
  }
  rep.text = body + family_lines + "SUMMARY instances=" + std::to_string(rep.passed + rep.failed) +
             " pass=" + std::to_string(rep.passed) + " fail=" + std::to_string(rep.failed) +
             " skipped-families=" + std::to_string(rep.skipped_families) + "\n";
  return rep;
}

std::vector<StabilizerGenerator> stabilizer_generators(int edge, int n) {
  const GenKind S = GenKind::S, T = GenKind::T;
  std::vector<StabilizerGenerator> out;
  auto add = [&](AbstractWord w, std::string fam, std::vector<std::string> params = {}) {
    out.push_back({std::move(w), std::move(fam), std::move(params)});
  };
  if (edge == 1) {
    if (n < 2) throw std::invalid_argument("edge 1 stabilizer needs n >= 2");
    add(W({L(T, 2)}), "R1.1");
    for (int k = 3; k <= n; ++k) add(W({L(T, k)}), "R1.2", {std::to_string(k)});
    for (int k = 3; k <= n - 1; ++k) add(W({L(S, k)}), "R1.3", {std::to_string(k)});
    add(gens(S, {1, 1}) + gens(T, {1, 1}), "R1.4");
    if (n >= 3) add(gens(S, {2, 1, 1, 2}), "R1.5");
    return out;
  }
  if (edge == 2) {
    if (n < 3) throw std::invalid_argument("edge 2 stabilizer needs n >= 3");
    add(W({L(T, 2)}), "R1.6");
    add(W({L(T, 3)}), "R1.7");
    for (int k = 4; k <= n; ++k) add(W({L(T, k)}), "R1.8", {std::to_string(k)});
    add(W({L(S, 2)}), "R1.9");
    for (int k = 4; k <= n - 1; ++k) add(W({L(S, k)}), "R1.10", {std::to_string(k)});
    add(gens(S, {1, 2, 2, 1}) + gens(T, {1, 1}), "R1.11");
    if (n >= 4) add(gens(S, {3, 2, 1, 1, 2, 3}), "R1.12");
    return out;
  }
  throw std::invalid_argument("edge must be 1 or 2");
}

}  // namespace hilden
