#include "hilden/action.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilden {

GroupWord parse_group_word(const std::string& text) {
  GroupWord w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inverted = false;
    if (auto pos = tok.find("^-1"); pos != std::string::npos && pos + 3 == tok.size()) {
      inverted = true;
      tok = tok.substr(0, pos);
    }
    if (tok.empty()) throw std::invalid_argument("empty generator token");
    w.letters.push_back({tok, inverted});
  }
  return w;
}

std::string format_group_word(const GroupWord& w) {
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ' ';
    s += w.letters[i].name;
    if (w.letters[i].inverted) s += "^-1";
  }
  return s;
}

GroupWord group_inverse(const GroupWord& w) {
  GroupWord r;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->name, !it->inverted});
  return r;
}

GroupWord group_concat(const GroupWord& a, const GroupWord& b) {
  GroupWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

GroupWord group_free_reduce(GroupWord w) {
  std::vector<GroupLetter> out;
  for (const GroupLetter& l : w.letters) {
    if (!out.empty() && out.back().name == l.name && out.back().inverted != l.inverted)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

namespace {

Permutation parse_cycles(const std::string& text, const std::map<std::string, int>& vertex_ids,
                         int degree, const std::string& where) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  std::set<int> used;
  size_t pos = 0;
  bool saw_paren = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw std::runtime_error(where + ": expected '(' in cycle notation");
    saw_paren = true;
    size_t close = text.find(')', pos);
    if (close == std::string::npos) throw std::runtime_error(where + ": unclosed cycle");
    std::istringstream cyc(text.substr(pos + 1, close - pos - 1));
    std::vector<int> members;
    std::string name;
    while (cyc >> name) {
      auto it = vertex_ids.find(name);
      if (it == vertex_ids.end()) throw std::runtime_error(where + ": unknown vertex " + name);
      if (!used.insert(it->second).second)
        throw std::runtime_error(where + ": vertex " + name + " appears twice");
      members.push_back(it->second);
    }
    for (size_t k = 0; k < members.size(); ++k)
      img[members[k]] = members[(k + 1) % members.size()];
    pos = close + 1;
  }
  if (!saw_paren) throw std::runtime_error(where + ": permutation needs cycle notation, e.g. ()");
  return Permutation(std::move(img));
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t rot = 0; rot < cycle.size(); ++rot) {
      std::vector<int> cand;
      cand.reserve(cycle.size());
      for (size_t k = 0; k < cycle.size(); ++k) cand.push_back(cycle[(rot + k) % cycle.size()]);
      if (best.empty() || cand < best) best = std::move(cand);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

std::vector<int> apply_to_cycle(const Permutation& g, const std::vector<int>& cycle) {
  std::vector<int> out;
  out.reserve(cycle.size());
  for (int v : cycle) out.push_back(g(v));
  return out;
}

// Closure of a generating set, each element paired with the first
// (shortest, then generation-order-least) word over the generators and
// their inverses that reaches it.
std::map<Permutation, GroupWord> closure_with_words(
    const std::vector<std::pair<std::string, Permutation>>& gens, int degree) {
  std::map<Permutation, GroupWord> words;
  Permutation id = Permutation::identity(degree);
  words[id] = {};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation cur = queue.front();
    queue.pop_front();
    GroupWord cur_word = words.at(cur);
    for (const auto& [name, perm] : gens) {
      for (bool inverted : {false, true}) {
        Permutation next = cur.then(inverted ? perm.inverse() : perm);
        if (words.count(next)) continue;
        GroupWord w = cur_word;
        w.letters.push_back({name, inverted});
        words[next] = std::move(w);
        queue.push_back(next);
      }
    }
  }
  return words;
}

}  // namespace

ActionComplex parse_complex_text(const std::string& text, const std::string& origin) {
  ActionComplex cx;
  std::map<std::string, int> vertex_ids;
  std::set<std::pair<int, int>> edge_set;
  bool have_basepoint = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto vertex_id = [&](const std::string& name) {
    auto it = vertex_ids.find(name);
    if (it == vertex_ids.end()) fail("unknown vertex: " + name);
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;

    if (directive == "vertex") {
      std::string name;
      if (!(ls >> name)) fail("vertex needs a name");
      if (vertex_ids.count(name)) fail("duplicate vertex: " + name);
      vertex_ids[name] = static_cast<int>(cx.vertex_names.size());
      cx.vertex_names.push_back(name);
    } else if (directive == "edge") {
      std::string a, b;
      if (!(ls >> a >> b)) fail("edge needs two vertex names");
      int ia = vertex_id(a), ib = vertex_id(b);
      if (ia == ib) fail("edge endpoints must differ");
      auto e = std::minmax(ia, ib);
      if (!edge_set.insert(e).second) fail("duplicate edge " + a + " " + b);
      cx.edges.push_back(e);
    } else if (directive == "face") {
      std::vector<int> cycle;
      std::string name;
      while (ls >> name) cycle.push_back(vertex_id(name));
      if (cycle.size() < 3) fail("face needs at least three vertices");
      cx.faces.push_back(std::move(cycle));
    } else if (directive == "basepoint") {
      std::string name;
      if (!(ls >> name)) fail("basepoint needs a vertex name");
      cx.basepoint = vertex_id(name);
      have_basepoint = true;
    } else if (directive == "gen" || directive == "stabgen") {
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=") fail(directive + " needs: <name> = <cycles>");
      std::string rest;
      std::getline(ls, rest);
      Permutation p = parse_cycles(rest, vertex_ids, static_cast<int>(cx.vertex_names.size()),
                                   origin + ":" + std::to_string(lineno));
      auto& dest = directive == "gen" ? cx.group_gens : cx.stab_gens;
      for (const auto& [existing, _] : cx.group_gens)
        if (existing == name) fail("duplicate generator name: " + name);
      for (const auto& [existing, _] : cx.stab_gens)
        if (existing == name) fail("duplicate generator name: " + name);
      dest.emplace_back(name, std::move(p));
    } else if (directive == "stabrel") {
      std::string rest;
      std::getline(ls, rest);
      cx.stab_relators.push_back(parse_group_word(rest));
    } else {
      fail("unknown directive: " + directive);
    }
  }
  if (cx.vertex_names.empty()) throw std::runtime_error(origin + ": no vertices");
  if (!have_basepoint) throw std::runtime_error(origin + ": no basepoint");
  return cx;
}

ActionComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open complex file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex_text(buf.str(), path);
}

Permutation evaluate_word(const ActionComplex& cx, const GroupWord& w) {
  Permutation p = Permutation::identity(static_cast<int>(cx.vertex_names.size()));
  for (const GroupLetter& l : w.letters) {
    const Permutation* gen = nullptr;
    for (const auto& [name, perm] : cx.group_gens)
      if (name == l.name) gen = &perm;
    if (!gen)
      for (const auto& [name, perm] : cx.stab_gens)
        if (name == l.name) gen = &perm;
    if (!gen) throw std::invalid_argument("unknown generator in word: " + l.name);
    p = p.then(l.inverted ? gen->inverse() : *gen);
  }
  return p;
}

ValidationReport validate_complex(const ActionComplex& cx) {
  ValidationReport rep;
  auto problem = [&](const std::string& msg) {
    rep.ok = false;
    rep.problems.push_back(msg);
  };
  const int nv = static_cast<int>(cx.vertex_names.size());

  std::set<std::pair<int, int>> edge_set(cx.edges.begin(), cx.edges.end());
  std::set<std::vector<int>> face_set;
  for (const auto& f : cx.faces) face_set.insert(canonical_cycle(f));

  for (const auto& f : cx.faces) {
    std::set<int> distinct(f.begin(), f.end());
    if (distinct.size() != f.size()) problem("face with repeated vertex");
    for (size_t k = 0; k < f.size(); ++k) {
      auto e = std::minmax(f[k], f[(k + 1) % f.size()]);
      if (!edge_set.count(e))
        problem("face boundary uses missing edge " + cx.vertex_names[e.first] + " " +
                cx.vertex_names[e.second]);
    }
  }

  if (cx.group_gens.empty() && nv > 1) problem("no group generators but several vertices");

  for (const auto& [name, g] : cx.group_gens) {
    for (const auto& e : cx.edges) {
      std::pair<int, int> img = std::minmax(g(e.first), g(e.second));
      if (!edge_set.count(img)) problem("generator " + name + " does not preserve the edge set");
    }
    for (const auto& f : cx.faces)
      if (!face_set.count(canonical_cycle(apply_to_cycle(g, f))))
        problem("generator " + name + " does not preserve the face set");
  }

  std::map<Permutation, GroupWord> group = closure_with_words(cx.group_gens, nv);
  std::set<int> orbit;
  for (const auto& [g, _] : group) orbit.insert(g(cx.basepoint));
  if (static_cast<int>(orbit.size()) != nv) problem("action is not vertex-transitive");

  for (const auto& [name, h] : cx.stab_gens)
    if (h(cx.basepoint) != cx.basepoint)
      problem("stabilizer generator " + name + " moves the basepoint");

  std::set<Permutation> full_stab;
  for (const auto& [g, _] : group)
    if (g(cx.basepoint) == cx.basepoint) full_stab.insert(g);
  std::map<Permutation, GroupWord> stab_closure = closure_with_words(cx.stab_gens, nv);
  std::set<Permutation> generated;
  for (const auto& [h, _] : stab_closure) generated.insert(h);
  if (generated != full_stab)
    problem("declared stabilizer generators generate a subgroup of order " +
            std::to_string(generated.size()) + ", but the basepoint stabilizer has order " +
            std::to_string(full_stab.size()));

  for (size_t k = 0; k < cx.stab_relators.size(); ++k) {
    try {
      if (!evaluate_word(cx, cx.stab_relators[k]).is_identity())
        problem("stabilizer relator " + std::to_string(k + 1) +
                " does not evaluate to the identity");
    } catch (const std::invalid_argument& e) {
      problem(e.what());
    }
  }
  return rep;
}

OrbitData orbit_data(const ActionComplex& cx) {
  OrbitData od;
  const int nv = static_cast<int>(cx.vertex_names.size());
  std::map<Permutation, GroupWord> stab_words = closure_with_words(cx.stab_gens, nv);
  for (const auto& [h, _] : stab_words) od.stabilizer.push_back(h);

  std::vector<int> neighbors;
  for (const auto& e : cx.edges) {
    if (e.first == cx.basepoint) neighbors.push_back(e.second);
    if (e.second == cx.basepoint) neighbors.push_back(e.first);
  }
  std::sort(neighbors.begin(), neighbors.end());

  od.neighbor_orbit.assign(nv, -1);
  for (int u : neighbors) {
    if (od.neighbor_orbit[u] != -1) continue;
    int orbit = static_cast<int>(od.edge_orbit_reps.size());
    od.edge_orbit_reps.push_back(u);
    for (const Permutation& h : od.stabilizer) od.neighbor_orbit[h(u)] = orbit;
  }

  // Transversal: the first group element reaching each vertex from the
  // basepoint, in breadth-first word order.
  std::map<Permutation, GroupWord> group = closure_with_words(cx.group_gens, nv);
  std::vector<std::optional<std::pair<Permutation, GroupWord>>> transversal(nv);
  std::vector<std::pair<GroupWord, Permutation>> ordered;
  for (const auto& [g, w] : group) ordered.emplace_back(w, g);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto& a, const auto& b) {
              if (a.first.letters.size() != b.first.letters.size())
                return a.first.letters.size() < b.first.letters.size();
              return a.first < b.first;
            });
  for (const auto& [w, g] : ordered) {
    int v = g(cx.basepoint);
    if (!transversal[v]) transversal[v] = {g, w};
  }
  for (int u : od.edge_orbit_reps) {
    od.edge_orbit_elts.push_back(transversal[u]->first);
    od.edge_orbit_words.push_back(transversal[u]->second);
  }
  return od;
}

std::vector<int> h_product_path(const ActionComplex& cx, const OrbitData& od,
                                const std::vector<std::pair<int, GroupWord>>& factors) {
  std::vector<int> path{cx.basepoint};
  Permutation suffix = Permutation::identity(static_cast<int>(cx.vertex_names.size()));
  for (const auto& [orbit, h] : factors) {
    if (orbit < 0 || orbit >= static_cast<int>(od.edge_orbit_elts.size()))
      throw std::invalid_argument("edge orbit index out of range");
    suffix = od.edge_orbit_elts[orbit].then(evaluate_word(cx, h)).then(suffix);
    path.push_back(suffix(cx.basepoint));
  }
  return path;
}

namespace {

// Lexicographically-least breadth-first word for the stabilizer element
// mapping `from` to `to`; empty optional if none exists.
std::optional<GroupWord> stab_word_mapping(const std::map<Permutation, GroupWord>& stab_words,
                                           int from, int to) {
  std::optional<GroupWord> best;
  for (const auto& [h, w] : stab_words) {
    if (h(from) != to) continue;
    bool better = !best || w.letters.size() < best->letters.size() ||
                  (w.letters.size() == best->letters.size() && w < *best);
    if (better) best = w;
  }
  return best;
}

}  // namespace

Presentation assemble_presentation(const ActionComplex& cx) {
  const int nv = static_cast<int>(cx.vertex_names.size());
  OrbitData od = orbit_data(cx);
  std::map<Permutation, GroupWord> stab_words = closure_with_words(cx.stab_gens, nv);

  Presentation pres;
  for (const auto& [name, _] : cx.stab_gens) pres.generators.push_back(name);
  std::vector<std::string> r_names;
  for (size_t lam = 0; lam < od.edge_orbit_reps.size(); ++lam) {
    std::string rn = "r" + std::to_string(lam + 1);
    for (const std::string& existing : pres.generators)
      if (existing == rn)
        throw std::invalid_argument("stabilizer generator name collides with " + rn);
    r_names.push_back(rn);
    pres.generators.push_back(rn);
  }
  auto r_letter = [&](size_t lam, bool inv = false) {
    return GroupLetter{r_names[lam], inv};
  };
  auto word_for = [&](const Permutation& h) {
    auto it = stab_words.find(h);
    if (it == stab_words.end())
      throw std::invalid_argument("element outside the subgroup generated by the stabilizer set");
    return it->second;
  };
  auto add_relator = [&](GroupWord w, const std::string& family) {
    pres.relators.push_back(group_free_reduce(std::move(w)));
    pres.relator_families.push_back(family);
  };

  for (const GroupWord& rel : cx.stab_relators) add_relator(rel, "R0");

  // Edge relations: conjugating an edge-stabilizer generator by r_lambda
  // lands back in the vertex stabilizer.
  for (size_t lam = 0; lam < od.edge_orbit_reps.size(); ++lam) {
    int u = od.edge_orbit_reps[lam];
    std::vector<Permutation> edge_stab;
    for (const Permutation& h : od.stabilizer)
      if (h(u) == u) edge_stab.push_back(h);
    std::sort(edge_stab.begin(), edge_stab.end());
    // Greedy small generating set, in permutation order.
    std::vector<Permutation> gens;
    std::set<Permutation> closure{Permutation::identity(nv)};
    for (const Permutation& k : edge_stab) {
      if (closure.count(k)) continue;
      gens.push_back(k);
      std::deque<Permutation> queue(closure.begin(), closure.end());
      while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const Permutation& g : gens)
          for (const Permutation& next : {cur.then(g), cur.then(g.inverse())})
            if (closure.insert(next).second) queue.push_back(next);
      }
    }
    for (const Permutation& t : gens) {
      Permutation conj = od.edge_orbit_elts[lam].then(t).then(od.edge_orbit_elts[lam].inverse());
      GroupWord w;
      w.letters.push_back(r_letter(lam));
      w = group_concat(w, word_for(t));
      w.letters.push_back(r_letter(lam, true));
      w = group_concat(w, group_inverse(word_for(conj)));
      add_relator(std::move(w), "R1");
    }
  }

  // Edge-reversal relations: r_lambda' h0 r_lambda is a stabilizer element.
  for (size_t lam = 0; lam < od.edge_orbit_reps.size(); ++lam) {
    int u = od.edge_orbit_elts[lam].inverse()(cx.basepoint);
    int lam2 = od.neighbor_orbit[u];
    if (lam2 < 0) throw std::invalid_argument("edge image is not a basepoint neighbor");
    std::optional<GroupWord> h0 = stab_word_mapping(stab_words, od.edge_orbit_reps[lam2], u);
    if (!h0) throw std::invalid_argument("no stabilizer element matches an edge reversal");
    Permutation prod = od.edge_orbit_elts[lam2].then(evaluate_word(cx, *h0))
                           .then(od.edge_orbit_elts[lam]);
    GroupWord w;
    w.letters.push_back(r_letter(lam2));
    w = group_concat(w, *h0);
    w.letters.push_back(r_letter(lam));
    w = group_concat(w, group_inverse(word_for(prod)));
    add_relator(std::move(w), "R2");
  }

  // Face relations: the alternating product reading off a based boundary.
  std::map<Permutation, GroupWord> group = closure_with_words(cx.group_gens, nv);
  std::map<std::vector<int>, int> face_orbit;
  std::vector<std::vector<std::vector<int>>> orbits;
  for (const auto& f : cx.faces) {
    std::vector<int> canon = canonical_cycle(f);
    if (face_orbit.count(canon)) continue;
    int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    std::deque<std::vector<int>> queue{canon};
    face_orbit[canon] = id;
    orbits[id].push_back(canon);
    while (!queue.empty()) {
      std::vector<int> cur = queue.front();
      queue.pop_front();
      for (const auto& [_, g] : cx.group_gens) {
        for (const Permutation& p : {g, g.inverse()}) {
          std::vector<int> img = canonical_cycle(apply_to_cycle(p, cur));
          if (face_orbit.count(img)) continue;
          face_orbit[img] = id;
          orbits[id].push_back(img);
          queue.push_back(img);
        }
      }
    }
  }

  for (const auto& orbit_faces : orbits) {
    // Lex-least boundary cycle based at the basepoint.
    std::vector<int> best;
    for (const auto& face : orbit_faces) {
      for (int dir = 0; dir < 2; ++dir) {
        std::vector<int> cyc = face;
        if (dir) std::reverse(cyc.begin(), cyc.end());
        for (size_t rot = 0; rot < cyc.size(); ++rot) {
          if (cyc[rot] != cx.basepoint) continue;
          std::vector<int> cand;
          for (size_t k = 0; k < cyc.size(); ++k) cand.push_back(cyc[(rot + k) % cyc.size()]);
          if (best.empty() || cand < best) best = std::move(cand);
        }
      }
    }
    if (best.empty())
      throw std::invalid_argument("face orbit has no representative through the basepoint");

    const size_t k = best.size();
    Permutation suffix = Permutation::identity(nv);
    std::vector<std::pair<int, GroupWord>> factors;  // (orbit, h_i), i ascending
    for (size_t i = 1; i <= k; ++i) {
      int target = i < k ? best[i] : cx.basepoint;
      int u = suffix.inverse()(target);
      int lam = od.neighbor_orbit[u];
      if (lam < 0) throw std::invalid_argument("face boundary leaves the basepoint star");
      std::optional<GroupWord> h = stab_word_mapping(stab_words, od.edge_orbit_reps[lam], u);
      if (!h) throw std::invalid_argument("no stabilizer element aligns a face edge");
      factors.emplace_back(lam, *h);
      suffix = od.edge_orbit_elts[lam].then(evaluate_word(cx, *h)).then(suffix);
    }
    GroupWord w;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      w.letters.push_back(r_letter(it->first));
      w = group_concat(w, it->second);
    }
    w = group_concat(w, group_inverse(word_for(suffix)));
    add_relator(std::move(w), "R3");
  }

  return pres;
}

std::string format_presentation(const Presentation& p) {
  std::string s = "generators:";
  for (const std::string& g : p.generators) s += " " + g;
  s += "\nrelators:\n";
  for (size_t k = 0; k < p.relators.size(); ++k) {
    s += "  " + p.relator_families[k] + ": ";
    std::string w = format_group_word(p.relators[k]);
    s += w.empty() ? "(empty)" : w;
    s += "\n";
  }
  return s;
}

}  // namespace hilden
