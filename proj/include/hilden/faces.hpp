#pragma once

#include <map>
#include <string>
#include <vector>

namespace hilden {

// Face classes of the cut-system complex: T (triangles), R (nested
// rectangles, i < j), S (non-nested rectangles, i <= j).
enum class FaceKind { T, R, S };

struct FaceClass {
  FaceKind kind;
  int i = 0;
  int j = 0;
  friend bool operator==(const FaceClass&, const FaceClass&) = default;
  friend auto operator<=>(const FaceClass&, const FaceClass&) = default;
};

// "R(1,2)". parse accepts "R12", "R(1,2)" and "R_{12}", case-insensitive
// kind letter; single-digit indices only in the undelimited forms.
std::string format_face_class(const FaceClass& f);
FaceClass parse_face_class(const std::string& text);

// Index sanity independent of n: T needs 1<=i<=j, R needs 1<=i<j, S needs
// 1<=i<=j.
bool face_class_well_formed(const FaceClass& f);

// Whether the class has an actual face in the complex at ambient n.
bool classify_face(const FaceClass& f, int n);

// Terminal classes of the reduction: every T class plus the two basis
// rectangles R(1,2) and S(1,1).
bool is_terminal_face(const FaceClass& f);

// One subdivision step, child order as in the reduction figure. Throws
// std::invalid_argument on terminal or malformed classes.
std::vector<FaceClass> decompose_face(const FaceClass& f);

struct ReductionStep {
  FaceClass parent;
  std::vector<FaceClass> children;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::map<FaceClass, int> basis;  // terminal class -> multiplicity
};

// Repeated subdivision until only terminal classes remain (breadth-first,
// deterministic order).
ReductionTrace reduce_to_basis(const FaceClass& f);

std::string format_reduction_trace(const ReductionTrace& t);

// Vertices of the cut-system complex: x_i, y_{ij}, z_{ij}.
struct SchemaVertex {
  char family = 'x';  // 'x', 'y' or 'z'
  int i = 0;
  int j = 0;  // unused for 'x'
  friend bool operator==(const SchemaVertex&, const SchemaVertex&) = default;
  friend auto operator<=>(const SchemaVertex&, const SchemaVertex&) = default;
};

// "x3", "x(3)", "y(2,0)", "z(0,5)"; two-index families require the
// parenthesized form unless both indices are single digits ("y20").
SchemaVertex parse_schema_vertex(const std::string& text);
std::string format_schema_vertex(const SchemaVertex& v);

// Existence of the vertex at ambient n (basepoint identifications make
// x_0, y_00 and z_00 the same vertex).
bool schema_vertex_valid(const SchemaVertex& v, int n);

// Length of the edge joining the basepoint to this vertex: defined for
// x_i, y_{i0}, y_{0j}, z_{i0}, z_{0j}; throws std::invalid_argument for
// vertices not adjacent to the basepoint (both indices positive).
int vertex_length(const SchemaVertex& v);
int vertex_length(const std::string& label);

// --- Symbolic subdivision panels -----------------------------------------
//
// A panel describes one figure of the reduction: the outer face, interior
// vertices, and the interior faces with their class labels, all with affine
// index expressions in the panel parameters.

struct AffineExpr {
  int constant = 0;
  std::map<std::string, int> coeffs;  // parameter name -> coefficient
};

AffineExpr parse_affine_expr(const std::string& text);
long long eval_affine(const AffineExpr& e, const std::map<std::string, int>& values);

struct VertexExpr {
  char family;
  AffineExpr i, j;
};

struct FaceClassExpr {
  FaceKind kind;
  AffineExpr i, j;
};

struct PanelFace {
  FaceClassExpr label;
  std::vector<VertexExpr> cycle;
};

struct Panel {
  FaceClassExpr self;
  std::vector<std::string> params;
  std::vector<std::pair<AffineExpr, AffineExpr>> side_conditions;  // lhs > rhs
  std::vector<VertexExpr> outer;
  std::vector<VertexExpr> inner;
  std::vector<PanelFace> faces;
};

// File format, one directive per line ('#' comments allowed):
//   panel <T|R|S>(<expr>,<expr>)
//   param <name> [<name> ...]
//   side <expr> > <expr>
//   outer <vertex> <vertex> <vertex> <vertex>
//   inner <vertex> [<vertex> ...]
//   face <class>(<expr>,<expr>) : <vertex> <vertex> <vertex> [...]
Panel parse_panel_file(const std::string& path);
Panel parse_panel_text(const std::string& text, const std::string& origin);

// Instantiates the panel at the given parameter values and checks it by
// edge-length propagation: basepoint-incident edges seed the lengths, each
// face constrains its boundary (a triangle labeled T(a,b) has edge lengths
// {a, b, a+b}; a rectangle labeled R/S(a,b) alternates (a,b,a,b)), and the
// verdict records which faces are consistent with their printed labels.
// Also reports whether decompose_face of the panel's own class matches the
// interior face labels as a multiset.
struct PanelCheck {
  struct FaceVerdict {
    std::string label;
    std::string status;  // "consistent" | "inconsistent" | "undetermined"
    std::string detail;
  };
  bool decomposition_matches = false;
  std::vector<FaceVerdict> verdicts;
  bool all_consistent() const {
    for (const auto& v : verdicts)
      if (v.status != "consistent") return false;
    return true;
  }
};

PanelCheck check_panel(const Panel& panel, const std::map<std::string, int>& values);

}  // namespace hilden
