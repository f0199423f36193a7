#pragma once

#include "tensorforge/cohomology.hpp"
#include "tensorforge/induced_lie.hpp"

#include <map>
#include <string>
#include <string_view>

namespace tensorforge {

enum class BracketKind { ternary_alternating, ternary, binary_alternating, binary };

std::string to_string(BracketKind k);

struct BracketDecl {
  BracketKind kind = BracketKind::ternary_alternating;
  std::string space;
  /// Name of another bracket this one stands for; its tables are unused.
  std::optional<std::string> alias;
  TrilinearTable ternary;
  BilinearTable binary;

  bool is_ternary() const { return kind == BracketKind::ternary_alternating || kind == BracketKind::ternary; }
};

enum class ActionKind { pair, adjoint, lie, leibniz_rep };

std::string to_string(ActionKind k);

/// pair:        algebra = ternary bracket, carrier = space, `pair` holds rho(e_i,e_j), i<j.
/// adjoint:     algebra = ternary-alternating bracket; the carrier is its space.
/// lie:         algebra, carrier = binary-alternating brackets, `operators` holds rho(e_i).
/// leibniz-rep: algebra = ternary bracket, carrier = space, `left`/`middle`/`right`
///              hold the operators per ordered basis pair (a*dim+b).
struct ActionDecl {
  ActionKind kind = ActionKind::pair;
  std::string algebra;
  std::string carrier;
  PairAction pair;
  std::vector<Matrix> operators;
  std::vector<Matrix> left, middle, right;
};

struct TensorDecl {
  std::string source;
  std::string target;
  Matrix matrix;
};

struct TraceDecl {
  std::string space;
  Vector coeffs;
};

/// A validated problem file with parameters substituted.
struct ProblemFile {
  std::string name;
  std::map<std::string, Space> spaces;
  std::map<std::string, BracketDecl> brackets;
  std::map<std::string, ActionDecl> actions;
  std::map<std::string, TensorDecl> tensors;
  std::map<std::string, TraceDecl> traces;

  bool has_bracket(const std::string& n) const { return brackets.count(n) != 0; }
  bool has_action(const std::string& n) const { return actions.count(n) != 0; }
  bool has_tensor(const std::string& n) const { return tensors.count(n) != 0; }
  bool has_trace(const std::string& n) const { return traces.count(n) != 0; }

  /// Follows aliases. Throws InputError on a missing name.
  const BracketDecl& bracket(const std::string& n) const;
  const Space& space_of_bracket(const std::string& n) const;

  // Typed views; each throws InputError when the name is missing or has the
  // wrong kind.
  ThreeLieAlgebra three_lie(const std::string& n) const;
  ThreeLeibnizAlgebra three_leibniz(const std::string& n) const;
  LieAlgebra lie(const std::string& n) const;
  LeibnizLieAlgebra leibniz_lie(const std::string& lie_name, const std::string& triangle_name) const;
  ThreeLeibnizLieAlgebra three_ll(const std::string& lie3_name, const std::string& braces_name) const;
  RepresentationData representation(const std::string& action) const;
  CoherentActionData coherent_action(const std::string& action, const std::string& target_bracket) const;
  EmbeddingTensorProblem net(const std::string& action, const std::string& target_bracket,
                             const std::string& tensor) const;
  LieCoherentAction lie_action(const std::string& action) const;
  ThreeLeibnizRep leibniz_rep(const std::string& action) const;
  LinearMap tensor(const std::string& n) const;
  TraceMap trace(const std::string& n) const;
};

/// Parses and validates. `overrides` replace declared parameter values and
/// must name declared parameters. `source` prefixes error messages. Throws
/// InputError with line:column for syntax errors and with line:column plus
/// a JSON path for semantic errors.
ProblemFile parse_problem(std::string_view text, const std::map<std::string, Scalar>& overrides = {},
                          const std::string& source = "<input>");
ProblemFile load_problem(const std::string& path, const std::map<std::string, Scalar>& overrides = {});

/// Canonical JSON: sorted keys, sparse tables, numeric values as strings,
/// no parameters. emit(parse(emit(p))) == emit(p).
std::string emit(const ProblemFile& p);

/// Evaluates an arithmetic expression over rationals and named parameters.
Scalar evaluate_expression(std::string_view text, const std::map<std::string, Scalar>& params);

// Helpers for building files from derived structures.
BracketDecl ternary_decl(const std::string& space, const TrilinearTable& t, bool alternating);
BracketDecl binary_decl(const std::string& space, const BilinearTable& t, bool alternating);
TensorDecl tensor_decl(const LinearMap& m);

}  // namespace tensorforge
