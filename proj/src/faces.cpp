#include "hilden/faces.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hilden {

namespace {

char kind_letter(FaceKind k) {
  switch (k) {
    case FaceKind::T: return 'T';
    case FaceKind::R: return 'R';
    case FaceKind::S: return 'S';
  }
  return '?';
}

FaceKind kind_from_letter(char c) {
  switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'T': return FaceKind::T;
    case 'R': return FaceKind::R;
    case 'S': return FaceKind::S;
  }
  throw std::invalid_argument(std::string("unknown face kind: ") + c);
}

}  // namespace

std::string format_face_class(const FaceClass& f) {
  return std::string(1, kind_letter(f.kind)) + "(" + std::to_string(f.i) + "," +
         std::to_string(f.j) + ")";
}

FaceClass parse_face_class(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty face class");
  FaceClass f;
  f.kind = kind_from_letter(text[0]);
  std::string body = text.substr(1);
  if (body.rfind("_{", 0) == 0 && body.back() == '}') body = body.substr(2, body.size() - 3);
  if (!body.empty() && body.front() == '(' && body.back() == ')') {
    std::string inner = body.substr(1, body.size() - 2);
    size_t comma = inner.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("face class needs two indices: " + text);
    try {
      f.i = std::stoi(inner.substr(0, comma));
      f.j = std::stoi(inner.substr(comma + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed face class: " + text);
    }
    return f;
  }
  if (body.size() == 2 && std::isdigit(static_cast<unsigned char>(body[0])) &&
      std::isdigit(static_cast<unsigned char>(body[1]))) {
    f.i = body[0] - '0';
    f.j = body[1] - '0';
    return f;
  }
  throw std::invalid_argument("malformed face class: " + text);
}

bool face_class_well_formed(const FaceClass& f) {
  switch (f.kind) {
    case FaceKind::T: return 1 <= f.i && f.i <= f.j;
    case FaceKind::R: return 1 <= f.i && f.i < f.j;
    case FaceKind::S: return 1 <= f.i && f.i <= f.j;
  }
  return false;
}

bool classify_face(const FaceClass& f, int n) {
  if (n < 2 || !face_class_well_formed(f)) return false;
  switch (f.kind) {
    case FaceKind::T: return true;
    case FaceKind::R: return f.i <= n - 2 && f.j <= n - 1;
    case FaceKind::S: return f.i + f.j <= n - 2;
  }
  return false;
}

bool is_terminal_face(const FaceClass& f) {
  if (f.kind == FaceKind::T) return true;
  if (f.kind == FaceKind::R) return f.i == 1 && f.j == 2;
  return f.i == 1 && f.j == 1;
}

std::vector<FaceClass> decompose_face(const FaceClass& f) {
  if (is_terminal_face(f))
    throw std::invalid_argument(format_face_class(f) + " is terminal");
  if (!face_class_well_formed(f))
    throw std::invalid_argument("malformed face class " + format_face_class(f));
  const FaceKind T = FaceKind::T, R = FaceKind::R, S = FaceKind::S;
  if (f.kind == R) {
    if (f.i > 1)
      return {{T, 1, f.i - 1}, {T, 1, f.i - 1}, {R, f.i - 1, f.j}, {R, 1, f.j}};
    return {{R, 1, f.j - 1}, {T, 1, f.j - 1}, {T, 1, f.j - 1}, {S, 1, 1}};
  }
  if (f.i > 1)
    return {{T, 1, f.i - 2}, {T, 1, f.i - 2}, {S, f.i - 1, f.j}, {S, 1, f.j}};
  return {{S, 1, f.j - 1}, {T, 1, f.j - 1}, {T, 1, f.j - 1}, {S, 1, 1}};
}

ReductionTrace reduce_to_basis(const FaceClass& f) {
  ReductionTrace trace;
  std::deque<FaceClass> work{f};
  while (!work.empty()) {
    FaceClass cur = work.front();
    work.pop_front();
    if (is_terminal_face(cur)) {
      ++trace.basis[cur];
      continue;
    }
    std::vector<FaceClass> children = decompose_face(cur);
    trace.steps.push_back({cur, children});
    for (const FaceClass& c : children) work.push_back(c);
  }
  return trace;
}

std::string format_reduction_trace(const ReductionTrace& t) {
  std::string s;
  for (const ReductionStep& step : t.steps) {
    s += format_face_class(step.parent) + " ->";
    for (const FaceClass& c : step.children) s += " " + format_face_class(c);
    s += "\n";
  }
  s += "basis:";
  if (t.basis.empty()) s += " (already terminal)";
  for (const auto& [cls, count] : t.basis)
    s += " " + format_face_class(cls) + "x" + std::to_string(count);
  s += "\n";
  return s;
}

SchemaVertex parse_schema_vertex(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("malformed vertex label: " + text);
  SchemaVertex v;
  char fam = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  if (fam != 'x' && fam != 'y' && fam != 'z')
    throw std::invalid_argument("unknown vertex family: " + text);
  v.family = fam;
  std::string body = text.substr(1);
  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
  };
  if (body.front() == '(' && body.back() == ')') {
    std::string inner = body.substr(1, body.size() - 2);
    size_t comma = inner.find(',');
    if (fam == 'x') {
      if (comma != std::string::npos || !all_digits(inner))
        throw std::invalid_argument("x vertices take one index: " + text);
      v.i = std::stoi(inner);
      return v;
    }
    if (comma == std::string::npos)
      throw std::invalid_argument("vertex needs two indices: " + text);
    std::string a = inner.substr(0, comma), b = inner.substr(comma + 1);
    if (!all_digits(a) || !all_digits(b))
      throw std::invalid_argument("malformed vertex label: " + text);
    v.i = std::stoi(a);
    v.j = std::stoi(b);
    return v;
  }
  if (fam == 'x') {
    if (!all_digits(body)) throw std::invalid_argument("malformed vertex label: " + text);
    v.i = std::stoi(body);
    return v;
  }
  if (body.size() == 2 && all_digits(body)) {
    v.i = body[0] - '0';
    v.j = body[1] - '0';
    return v;
  }
  throw std::invalid_argument("malformed vertex label: " + text);
}

std::string format_schema_vertex(const SchemaVertex& v) {
  if (v.family == 'x') return "x" + std::to_string(v.i);
  return std::string(1, v.family) + "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

bool schema_vertex_valid(const SchemaVertex& v, int n) {
  if (n < 1) return false;
  switch (v.family) {
    case 'x': return 0 <= v.i && v.i <= n - 1;
    case 'y': return 0 <= v.i && v.i <= n - 2 && (v.j == 0 || (v.i < v.j && v.j <= n - 1));
    case 'z': return 0 <= v.i && 0 <= v.j && v.i + v.j <= n - 2;
  }
  return false;
}

int vertex_length(const SchemaVertex& v) {
  if (v.family == 'x') return v.i;
  if (v.i == 0) return v.j;
  if (v.j == 0) return v.i;
  throw std::invalid_argument("edge length from the basepoint is undefined for " +
                              format_schema_vertex(v));
}

int vertex_length(const std::string& label) { return vertex_length(parse_schema_vertex(label)); }

// --- Symbolic panels -------------------------------------------------------

AffineExpr parse_affine_expr(const std::string& text) {
  AffineExpr e;
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw std::invalid_argument("empty index expression");
  size_t pos = 0;
  int sign = 1;
  while (pos < compact.size()) {
    if (compact[pos] == '+') {
      sign = 1;
      ++pos;
      continue;
    }
    if (compact[pos] == '-') {
      sign = -1;
      ++pos;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(compact[pos]))) {
      size_t end = pos;
      while (end < compact.size() && std::isdigit(static_cast<unsigned char>(compact[end])))
        ++end;
      e.constant += sign * std::stoi(compact.substr(pos, end - pos));
      pos = end;
    } else if (std::isalpha(static_cast<unsigned char>(compact[pos]))) {
      size_t end = pos;
      while (end < compact.size() && std::isalnum(static_cast<unsigned char>(compact[end])))
        ++end;
      e.coeffs[compact.substr(pos, end - pos)] += sign;
      pos = end;
    } else {
      throw std::invalid_argument("malformed index expression: " + text);
    }
    sign = 1;
  }
  return e;
}

long long eval_affine(const AffineExpr& e, const std::map<std::string, int>& values) {
  long long v = e.constant;
  for (const auto& [name, coeff] : e.coeffs) {
    auto it = values.find(name);
    if (it == values.end())
      throw std::invalid_argument("index expression uses unbound parameter " + name);
    v += static_cast<long long>(coeff) * it->second;
  }
  return v;
}

namespace {

// Splits "y(i-1,0)" into family letter and two index expressions; "x0" form
// allowed for single constants.
VertexExpr parse_vertex_expr(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("malformed vertex expression: " + text);
  VertexExpr v;
  v.family = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  if (v.family != 'x' && v.family != 'y' && v.family != 'z')
    throw std::invalid_argument("unknown vertex family: " + text);
  std::string body = text.substr(1);
  if (body.front() == '(' && body.back() == ')') {
    std::string inner = body.substr(1, body.size() - 2);
    size_t comma = inner.find(',');
    if (v.family == 'x') {
      if (comma != std::string::npos)
        throw std::invalid_argument("x vertices take one index: " + text);
      v.i = parse_affine_expr(inner);
      return v;
    }
    if (comma == std::string::npos)
      throw std::invalid_argument("vertex needs two indices: " + text);
    v.i = parse_affine_expr(inner.substr(0, comma));
    v.j = parse_affine_expr(inner.substr(comma + 1));
    return v;
  }
  if (v.family != 'x') throw std::invalid_argument("two-index vertex needs parentheses: " + text);
  v.i = parse_affine_expr(body);
  return v;
}

FaceClassExpr parse_face_class_expr(const std::string& text) {
  if (text.size() < 4 || text[1] != '(' || text.back() != ')')
    throw std::invalid_argument("malformed face class expression: " + text);
  FaceClassExpr f;
  f.kind = kind_from_letter(text[0]);
  std::string inner = text.substr(2, text.size() - 3);
  size_t comma = inner.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("face class needs two indices: " + text);
  f.i = parse_affine_expr(inner.substr(0, comma));
  f.j = parse_affine_expr(inner.substr(comma + 1));
  return f;
}

}  // namespace

Panel parse_panel_text(const std::string& text, const std::string& origin) {
  Panel panel;
  bool have_panel = false;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive) || directive[0] == '#') continue;
    if (directive == "panel") {
      std::string cls;
      if (!(ls >> cls)) fail("panel needs a class expression");
      panel.self = parse_face_class_expr(cls);
      have_panel = true;
    } else if (directive == "param") {
      std::string name;
      while (ls >> name) panel.params.push_back(name);
    } else if (directive == "side") {
      std::string lhs, gt, rhs;
      if (!(ls >> lhs >> gt >> rhs) || gt != ">") fail("side needs: <expr> > <expr>");
      panel.side_conditions.emplace_back(parse_affine_expr(lhs), parse_affine_expr(rhs));
    } else if (directive == "outer" || directive == "inner") {
      std::string tok;
      auto& dest = directive == "outer" ? panel.outer : panel.inner;
      while (ls >> tok) dest.push_back(parse_vertex_expr(tok));
    } else if (directive == "face") {
      std::string cls, colon;
      if (!(ls >> cls >> colon) || colon != ":") fail("face needs: <class> : <vertices>");
      PanelFace face;
      face.label = parse_face_class_expr(cls);
      std::string tok;
      while (ls >> tok) face.cycle.push_back(parse_vertex_expr(tok));
      if (face.cycle.size() < 3) fail("face needs at least three vertices");
      panel.faces.push_back(std::move(face));
    } else {
      fail("unknown directive: " + directive);
    }
  }
  if (!have_panel) throw std::runtime_error(origin + ": missing panel directive");
  if (panel.outer.size() != 4) throw std::runtime_error(origin + ": outer must list 4 vertices");
  if (panel.faces.empty()) throw std::runtime_error(origin + ": no interior faces");
  return panel;
}

Panel parse_panel_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open panel file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_panel_text(buf.str(), path);
}

namespace {

struct ConcreteVertex {
  char family;
  long long i, j;
  friend auto operator<=>(const ConcreteVertex&, const ConcreteVertex&) = default;
  bool is_basepoint() const { return i == 0 && j == 0; }
};

ConcreteVertex instantiate_vertex(const VertexExpr& v, const std::map<std::string, int>& vals) {
  if (v.family == 'x') return {v.family, eval_affine(v.i, vals), 0};
  return {v.family, eval_affine(v.i, vals), eval_affine(v.j, vals)};
}

using Edge = std::pair<ConcreteVertex, ConcreteVertex>;

Edge make_edge(const ConcreteVertex& a, const ConcreteVertex& b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::optional<long long> basepoint_length(const Edge& e) {
  const ConcreteVertex *base = nullptr, *other = nullptr;
  if (e.first.is_basepoint()) {
    base = &e.first;
    other = &e.second;
  } else if (e.second.is_basepoint()) {
    base = &e.second;
    other = &e.first;
  }
  if (!base) return std::nullopt;
  if (other->i == 0) return other->j;
  if (other->j == 0) return other->i;
  return std::nullopt;
}

}  // namespace

PanelCheck check_panel(const Panel& panel, const std::map<std::string, int>& values) {
  for (const auto& [lhs, rhs] : panel.side_conditions)
    if (!(eval_affine(lhs, values) > eval_affine(rhs, values)))
      throw std::invalid_argument("panel side condition violated by the given parameters");

  struct ConcreteFace {
    FaceKind kind;
    long long a, b;
    std::vector<ConcreteVertex> cycle;
    bool is_outer;
    std::string label;
  };
  std::vector<ConcreteFace> faces;
  auto add_face = [&](const FaceClassExpr& label, const std::vector<VertexExpr>& cycle,
                      bool outer) {
    ConcreteFace f;
    f.kind = label.kind;
    f.a = eval_affine(label.i, values);
    f.b = eval_affine(label.j, values);
    for (const VertexExpr& v : cycle) f.cycle.push_back(instantiate_vertex(v, values));
    f.is_outer = outer;
    f.label = std::string(1, kind_letter(f.kind)) + "(" + std::to_string(f.a) + "," +
              std::to_string(f.b) + ")";
    faces.push_back(std::move(f));
  };
  add_face(panel.self, panel.outer, true);
  for (const PanelFace& f : panel.faces) add_face(f.label, f.cycle, false);

  // Seed edge lengths from basepoint incidences, then propagate the face
  // constraints to a fixed point.
  std::map<Edge, long long> lengths;
  for (const ConcreteFace& f : faces)
    for (size_t k = 0; k < f.cycle.size(); ++k) {
      Edge e = make_edge(f.cycle[k], f.cycle[(k + 1) % f.cycle.size()]);
      if (auto len = basepoint_length(e)) lengths[e] = *len;
    }

  auto known = [&](const Edge& e) -> std::optional<long long> {
    auto it = lengths.find(e);
    if (it == lengths.end()) return std::nullopt;
    return it->second;
  };
  std::vector<bool> contradiction(faces.size(), false);

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
      const ConcreteFace& f = faces[fi];
      if (contradiction[fi]) continue;
      std::vector<Edge> edges;
      for (size_t k = 0; k < f.cycle.size(); ++k)
        edges.push_back(make_edge(f.cycle[k], f.cycle[(k + 1) % f.cycle.size()]));
      auto set_len = [&](const Edge& e, long long v) {
        auto cur = known(e);
        if (!cur) {
          lengths[e] = v;
          changed = true;
        } else if (*cur != v) {
          contradiction[fi] = true;
        }
      };
      if (f.kind == FaceKind::T) {
        if (edges.size() != 3) {
          contradiction[fi] = true;
          continue;
        }
        std::multiset<long long> required{f.a, f.b, f.a + f.b};
        std::vector<size_t> unknown;
        std::multiset<long long> seen;
        for (size_t k = 0; k < 3; ++k) {
          if (auto v = known(edges[k]))
            seen.insert(*v);
          else
            unknown.push_back(k);
        }
        // Known edges must embed in the required multiset.
        std::multiset<long long> rest = required;
        bool fits = true;
        for (long long v : seen) {
          auto it = rest.find(v);
          if (it == rest.end()) {
            fits = false;
            break;
          }
          rest.erase(it);
        }
        if (!fits) {
          contradiction[fi] = true;
          continue;
        }
        if (unknown.size() == 1) set_len(edges[unknown[0]], *rest.begin());
      } else {
        if (edges.size() != 4) {
          contradiction[fi] = true;
          continue;
        }
        // Opposite sides equal.
        for (int k = 0; k < 2; ++k) {
          auto v0 = known(edges[k]), v2 = known(edges[k + 2]);
          if (v0 && !v2) set_len(edges[k + 2], *v0);
          if (!v0 && v2) set_len(edges[k], *v2);
          if (v0 && v2 && *v0 != *v2) contradiction[fi] = true;
        }
        if (contradiction[fi]) continue;
        // Adjacent sides carry {a, b}.
        auto e0 = known(edges[0]), e1 = known(edges[1]);
        if (e0 && !e1) {
          if (*e0 == f.a)
            set_len(edges[1], f.b);
          else if (*e0 == f.b)
            set_len(edges[1], f.a);
          else
            contradiction[fi] = true;
        } else if (e1 && !e0) {
          if (*e1 == f.a)
            set_len(edges[0], f.b);
          else if (*e1 == f.b)
            set_len(edges[0], f.a);
          else
            contradiction[fi] = true;
        } else if (e0 && e1) {
          if (!((*e0 == f.a && *e1 == f.b) || (*e0 == f.b && *e1 == f.a)))
            contradiction[fi] = true;
        }
      }
    }
  }

  PanelCheck result;
  for (size_t fi = 0; fi < faces.size(); ++fi) {
    if (faces[fi].is_outer) continue;
    const ConcreteFace& f = faces[fi];
    PanelCheck::FaceVerdict verdict;
    verdict.label = f.label;
    if (contradiction[fi]) {
      verdict.status = "inconsistent";
      verdict.detail = "edge lengths contradict the label";
    } else {
      bool complete = true;
      std::string lens = "lengths";
      for (size_t k = 0; k < f.cycle.size(); ++k) {
        auto v = known(make_edge(f.cycle[k], f.cycle[(k + 1) % f.cycle.size()]));
        if (!v) {
          complete = false;
          break;
        }
        lens += " " + std::to_string(*v);
      }
      verdict.status = complete ? "consistent" : "undetermined";
      verdict.detail = complete ? lens : "some edge lengths were not determined";
    }
    result.verdicts.push_back(std::move(verdict));
  }

  // Cross-check the panel against the subdivision rule.
  FaceClass self{panel.self.kind, static_cast<int>(eval_affine(panel.self.i, values)),
                 static_cast<int>(eval_affine(panel.self.j, values))};
  std::multiset<std::string> expected, listed;
  for (const FaceClass& c : decompose_face(self)) expected.insert(format_face_class(c));
  for (const ConcreteFace& f : faces)
    if (!f.is_outer)
      listed.insert(std::string(1, kind_letter(f.kind)) + "(" + std::to_string(f.a) + "," +
                    std::to_string(f.b) + ")");
  result.decomposition_matches = expected == listed;
  return result;
}

}  // namespace hilden
