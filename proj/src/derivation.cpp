#include "hilden/derivation.hpp"

#include <algorithm>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilden {

namespace {

bool is_single_index_family(const std::string& rel) {
  static const std::set<std::string> one{"P2", "P4", "P6", "P7", "P8", "P9", "P11"};
  return one.count(rel) > 0;
}

bool is_pair_index_family(const std::string& rel) {
  static const std::set<std::string> two{"P1", "P3", "P5", "P10", "P12", "P13", "P14"};
  return two.count(rel) > 0;
}

}  // namespace

void SchemaRegistry::register_derived(const std::string& name, AbstractWord lhs,
                                      AbstractWord rhs) {
  if (is_single_index_family(name) || is_pair_index_family(name))
    throw std::invalid_argument("cannot shadow built-in schema " + name);
  derived[name] = {std::move(lhs), std::move(rhs)};
}

bool SchemaRegistry::is_known(const std::string& name) const {
  return derived.count(name) > 0 || is_single_index_family(name) || is_pair_index_family(name);
}

SchemaRegistry::Derived instantiate_schema(const std::string& rel, std::optional<int> i,
                                           std::optional<int> j, int n,
                                           const SchemaRegistry& registry) {
  if (auto it = registry.derived.find(rel); it != registry.derived.end()) {
    if (i || j)
      throw std::invalid_argument("derived schema " + rel + " takes no indices");
    return it->second;
  }
  bool single = is_single_index_family(rel);
  bool pair = is_pair_index_family(rel);
  if (!single && !pair) throw std::invalid_argument("unknown schema: " + rel);
  if (!i) throw std::invalid_argument("schema " + rel + " needs index i");
  if (single && j) throw std::invalid_argument("schema " + rel + " takes only one index");
  if (pair && !j) throw std::invalid_argument("schema " + rel + " needs indices i and j");
  std::string params = std::to_string(*i);
  if (pair) params += "," + std::to_string(*j);
  for (const RelationInstance& inst : relation_instances(rel, n))
    if (inst.params == params) return {inst.lhs, inst.rhs};
  throw std::invalid_argument("schema " + rel + " has no instance with indexes " + params +
                              " at n=" + std::to_string(n));
}

namespace {

struct Replacement {
  AbstractWord match;        // nonempty subword to find
  AbstractWord substitute;   // what replaces it
};

// All ways a relator can rewrite a word: every cyclic rotation of rho splits
// as match * substitute^-1.
std::vector<Replacement> relator_replacements(const AbstractWord& lhs, const AbstractWord& rhs,
                                              bool forward) {
  AbstractWord rho = abstract_free_reduce(abstract_concat(lhs, abstract_inverse(rhs)));
  if (!forward) rho = abstract_inverse(rho);
  std::vector<Replacement> out;
  const size_t L = rho.letters.size();
  std::set<std::pair<AbstractWord, AbstractWord>> seen;
  for (size_t rot = 0; rot < L; ++rot) {
    AbstractWord rotated;
    rotated.letters.reserve(L);
    for (size_t k = 0; k < L; ++k) rotated.letters.push_back(rho.letters[(rot + k) % L]);
    for (size_t c = 1; c <= L; ++c) {
      AbstractWord match{{rotated.letters.begin(), rotated.letters.begin() + c}};
      AbstractWord tail{{rotated.letters.begin() + c, rotated.letters.end()}};
      AbstractWord sub = abstract_inverse(tail);
      if (seen.insert({match, sub}).second) out.push_back({std::move(match), std::move(sub)});
    }
  }
  return out;
}

bool matches_at(const AbstractWord& word, const AbstractWord& pattern, size_t at) {
  if (at + pattern.letters.size() > word.letters.size()) return false;
  return std::equal(pattern.letters.begin(), pattern.letters.end(), word.letters.begin() + at);
}

AbstractWord splice(const AbstractWord& word, size_t at, size_t len, const AbstractWord& sub) {
  AbstractWord out;
  out.letters.reserve(word.letters.size() - len + sub.letters.size());
  out.letters.insert(out.letters.end(), word.letters.begin(), word.letters.begin() + at);
  out.letters.insert(out.letters.end(), sub.letters.begin(), sub.letters.end());
  out.letters.insert(out.letters.end(), word.letters.begin() + at + len, word.letters.end());
  return abstract_free_reduce(std::move(out));
}

}  // namespace

StepOutcome apply_step(const AbstractWord& word, const DerivationStep& step, int n,
                       const SchemaRegistry& registry) {
  SchemaRegistry::Derived inst;
  try {
    inst = instantiate_schema(step.rel, step.i, step.j, n, registry);
  } catch (const std::invalid_argument& e) {
    return {false, {}, e.what()};
  }
  std::vector<Replacement> reps = relator_replacements(inst.lhs, inst.rhs, step.forward);
  if (reps.empty()) return {false, {}, "schema " + step.rel + " has a trivial relator"};
  if (step.at < 0 || static_cast<size_t>(step.at) > word.letters.size())
    return {false, {}, "position " + std::to_string(step.at) + " outside word of length " +
                           std::to_string(word.letters.size())};

  bool matched_here = false;
  std::vector<std::string> produced;
  for (const Replacement& rep : reps) {
    if (!matches_at(word, rep.match, step.at)) continue;
    matched_here = true;
    AbstractWord cand = splice(word, step.at, rep.match.letters.size(), rep.substitute);
    if (cand == step.result) return {true, std::move(cand), ""};
    std::string text = format_abstract_word(cand);
    if (std::find(produced.begin(), produced.end(), text) == produced.end())
      produced.push_back(std::move(text));
  }

  std::string err;
  if (!matched_here) {
    std::vector<int> positions;
    for (size_t at = 0; at < word.letters.size(); ++at)
      for (const Replacement& rep : reps)
        if (matches_at(word, rep.match, at)) {
          positions.push_back(static_cast<int>(at));
          break;
        }
    err = "no side of schema " + step.rel + " matches at position " + std::to_string(step.at);
    if (!positions.empty()) {
      err += "; it matches at";
      for (int p : positions) err += " " + std::to_string(p);
    }
  } else {
    err = "schema " + step.rel + " matches at position " + std::to_string(step.at) +
          " but yields:";
    for (const std::string& t : produced) err += "\n    " + t;
    err += "\n  not the recorded result";
  }
  return {false, {}, err};
}

CheckOutcome check_derivation(const Derivation& d, int n, const SchemaRegistry& registry) {
  AbstractWord word = abstract_free_reduce(d.start);
  for (size_t k = 0; k < d.steps.size(); ++k) {
    StepOutcome out = apply_step(word, d.steps[k], n, registry);
    if (!out.ok)
      return {false, "step " + std::to_string(k + 1) + ": " + out.error};
    word = std::move(out.word);
  }
  if (!(word == abstract_free_reduce(d.end)))
    return {false, "final word " + format_abstract_word(word) +
                       " does not equal claimed end " + format_abstract_word(d.end)};
  try {
    BraidWord lhs = expand_to_braid(d.start, n);
    BraidWord rhs = expand_to_braid(d.end, n);
    if (!braid_equal(lhs, rhs))
      return {false, "claim fails as a braid equality at n=" + std::to_string(n)};
  } catch (const std::invalid_argument& e) {
    return {false, std::string("braid cross-check impossible: ") + e.what()};
  }
  return {true, ""};
}

namespace {

Derivation load_derivation_impl(const std::string& path, int n, SchemaRegistry& registry,
                                std::vector<std::string>& in_progress) {
  namespace fs = std::filesystem;
  std::string canonical = fs::weakly_canonical(path).string();
  if (std::find(in_progress.begin(), in_progress.end(), canonical) != in_progress.end())
    throw std::runtime_error("cyclic uses: chain at " + path);
  in_progress.push_back(canonical);

  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open derivation file: " + path);

  Derivation d;
  bool have_claim = false;
  std::string line;
  int lineno = 0;
  int next_step = 1;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (!trimmed.empty() && trimmed.back() == '\r') trimmed.pop_back();
    if (trimmed.empty() || trimmed[0] == '#') continue;

    if (trimmed.rfind("name:", 0) == 0) {
      std::istringstream ls(trimmed.substr(5));
      if (!(ls >> d.name)) fail("name: needs an identifier");
      continue;
    }
    if (trimmed.rfind("uses:", 0) == 0) {
      std::istringstream ls(trimmed.substr(5));
      std::string used;
      if (!(ls >> used)) fail("uses: needs an identifier");
      if (!registry.derived.count(used)) {
        std::string used_path = (fs::path(path).parent_path() / (used + ".drv")).string();
        Derivation ud = load_derivation_impl(used_path, n, registry, in_progress);
        CheckOutcome out = check_derivation(ud, n, registry);
        if (!out.ok)
          fail("used derivation " + used + " fails its own check: " + out.detail);
        std::string reg_name = ud.name.empty() ? used : ud.name;
        if (reg_name != used)
          fail("used derivation file declares name " + reg_name + ", expected " + used);
        registry.register_derived(reg_name, ud.start, ud.end);
      }
      continue;
    }
    if (trimmed.rfind("claim:", 0) == 0) {
      std::string body = trimmed.substr(6);
      size_t arrow = body.find("=>");
      if (arrow == std::string::npos) fail("claim: needs '=>'");
      d.start = parse_abstract_word(body.substr(0, arrow));
      d.end = parse_abstract_word(body.substr(arrow + 2));
      have_claim = true;
      continue;
    }
    if (trimmed.rfind("step", 0) == 0) {
      if (!have_claim) fail("step before claim:");
      size_t colon = trimmed.find(':');
      if (colon == std::string::npos) fail("step line needs ':'");
      std::istringstream head(trimmed.substr(4, colon - 4));
      int k = 0;
      if (!(head >> k) || k != next_step) fail("steps must be numbered sequentially from 1");
      ++next_step;
      std::string body = trimmed.substr(colon + 1);
      size_t arrow = body.find("->");
      if (arrow == std::string::npos) fail("step line needs '->'");
      DerivationStep step;
      step.result = parse_abstract_word(body.substr(arrow + 2));
      std::istringstream fields(body.substr(0, arrow));
      std::string tok;
      bool have_rel = false, have_dir = false, have_at = false;
      while (fields >> tok) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos) fail("malformed step field: " + tok);
        std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        try {
          if (key == "rel") {
            step.rel = value;
            have_rel = true;
          } else if (key == "i") {
            step.i = std::stoi(value);
          } else if (key == "j") {
            step.j = std::stoi(value);
          } else if (key == "dir") {
            if (value != "fwd" && value != "rev") fail("dir must be fwd or rev");
            step.forward = value == "fwd";
            have_dir = true;
          } else if (key == "at") {
            step.at = std::stoi(value);
            have_at = true;
          } else {
            fail("unknown step field: " + key);
          }
        } catch (const std::invalid_argument&) {
          fail("malformed step field: " + tok);
        } catch (const std::out_of_range&) {
          fail("malformed step field: " + tok);
        }
      }
      if (!have_rel || !have_dir || !have_at) fail("step needs rel=, dir= and at=");
      d.steps.push_back(std::move(step));
      continue;
    }
    fail("unrecognized line: " + trimmed);
  }
  if (!have_claim) throw std::runtime_error(path + ": missing claim:");
  in_progress.pop_back();
  return d;
}

}  // namespace

Derivation load_derivation_file(const std::string& path, int n, SchemaRegistry& registry) {
  std::vector<std::string> in_progress;
  return load_derivation_impl(path, n, registry, in_progress);
}

std::string format_derivation(const Derivation& d) {
  std::string s;
  if (!d.name.empty()) s += "name: " + d.name + "\n";
  s += "claim: " + format_abstract_word(d.start) + " => " + format_abstract_word(d.end) + "\n";
  for (size_t k = 0; k < d.steps.size(); ++k) {
    const DerivationStep& st = d.steps[k];
    s += "step " + std::to_string(k + 1) + ": rel=" + st.rel;
    if (st.i) s += " i=" + std::to_string(*st.i);
    if (st.j) s += " j=" + std::to_string(*st.j);
    s += std::string(" dir=") + (st.forward ? "fwd" : "rev") + " at=" + std::to_string(st.at);
    s += " -> " + format_abstract_word(st.result) + "\n";
  }
  return s;
}

SearchOutcome search_derivation(const AbstractWord& start, const AbstractWord& end, int n,
                                const SchemaRegistry& registry, int depth, size_t node_cap) {
  AbstractWord from = abstract_free_reduce(start);
  AbstractWord to = abstract_free_reduce(end);

  // Every schema preserves the braid image, so unequal images rule out a
  // derivation at any depth.
  BraidWord from_braid = expand_to_braid(from, n);
  BraidWord to_braid = expand_to_braid(to, n);
  if (!braid_equal(from_braid, to_braid)) return {SearchOutcome::Status::not_found, {}, 0};

  struct Rule {
    AbstractWord match, substitute;
    std::string rel;
    std::optional<int> i, j;
    bool forward;
  };
  std::vector<Rule> rules;
  auto add_rules = [&](const std::string& rel, std::optional<int> i, std::optional<int> j,
                       const AbstractWord& lhs, const AbstractWord& rhs) {
    for (bool forward : {true, false})
      for (Replacement& rep : relator_replacements(lhs, rhs, forward))
        rules.push_back({std::move(rep.match), std::move(rep.substitute), rel, i, j, forward});
  };
  for (int f = 1; f <= 14; ++f) {
    std::string rel = "P" + std::to_string(f);
    for (const RelationInstance& inst : relation_instances(rel, n)) {
      std::optional<int> i, j;
      std::istringstream ps(inst.params);
      int a = 0;
      char comma = 0;
      ps >> a;
      i = a;
      if (ps >> comma >> a) j = a;
      add_rules(rel, i, j, inst.lhs, inst.rhs);
    }
  }
  for (const auto& [name, schema] : registry.derived)
    add_rules(name, std::nullopt, std::nullopt, schema.lhs, schema.rhs);

  std::map<AbstractLetter, std::vector<size_t>> buckets;
  for (size_t r = 0; r < rules.size(); ++r)
    buckets[rules[r].match.letters.front()].push_back(r);

  struct Parent {
    AbstractWord word;
    size_t rule = 0;
    int at = 0;
    int depth = 0;
  };
  std::map<AbstractWord, Parent> visited;
  visited[from] = {from, 0, -1, 0};
  std::deque<AbstractWord> queue{from};

  auto reconstruct = [&](const AbstractWord& last) {
    Derivation d;
    d.start = from;
    d.end = to;
    std::vector<DerivationStep> steps;
    AbstractWord cur = last;
    while (!(cur == from)) {
      const Parent& p = visited.at(cur);
      const Rule& r = rules[p.rule];
      steps.push_back({r.rel, r.i, r.j, r.forward, p.at, cur});
      cur = p.word;
    }
    std::reverse(steps.begin(), steps.end());
    d.steps = std::move(steps);
    return d;
  };

  if (from == to) return {SearchOutcome::Status::found, reconstruct(to), 1};

  while (!queue.empty()) {
    AbstractWord word = std::move(queue.front());
    queue.pop_front();
    int d = visited.at(word).depth;
    if (d >= depth) continue;
    for (size_t at = 0; at < word.letters.size(); ++at) {
      auto bucket = buckets.find(word.letters[at]);
      if (bucket == buckets.end()) continue;
      for (size_t ri : bucket->second) {
        const Rule& rule = rules[ri];
        if (!matches_at(word, rule.match, at)) continue;
        AbstractWord next = splice(word, at, rule.match.letters.size(), rule.substitute);
        if (visited.count(next)) continue;
        if (visited.size() >= node_cap)
          return {SearchOutcome::Status::cap_exceeded, {}, visited.size()};
        visited[next] = {word, ri, static_cast<int>(at), d + 1};
        if (next == to)
          return {SearchOutcome::Status::found, reconstruct(next), visited.size()};
        queue.push_back(std::move(next));
      }
    }
  }
  return {SearchOutcome::Status::not_found, {}, visited.size()};
}

}  // namespace hilden
