#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bimod/engine.hpp"

namespace bimod {

/// Reference to an object inside a diagram: a symbol, dualized `duals` times.
struct ObjectRef {
  std::string name;
  int duals = 0;
};
using WordRef = std::vector<ObjectRef>;

struct DiagramExpr {
  enum class Kind { Id, Compose, Tensor, Braid, BraidInv, Cup, Cap, CupTilde, CapTilde, Named };
  Kind kind;
  /// Compose(lhs, rhs) means "lhs, then rhs".
  std::shared_ptr<const DiagramExpr> lhs, rhs;
  WordRef w1, w2;
  std::string name;
  int line = 1, col = 1;
};
using ExprPtr = std::shared_ptr<const DiagramExpr>;

/// Grammar (see docs/diagram-dsl.md):
///   expr   := tensor (';' tensor)*
///   tensor := atom ('*' atom)*
///   atom   := '(' expr ')' | prim '(' words [',' words] ')' | NAME
///   prim   := id | c | cinv | b | d | bt | dt
///   words  := { NAME '^'* }
/// `f ; g` is g o f. Whitespace separates object names; `#` starts a comment.
ExprPtr parse_diagram(const std::string& src);

/// Symbols visible to a diagram. Object names resolve first to `objects`,
/// then to the category's labels.
struct DiagramEnv {
  std::map<std::string, Word> objects;
  std::map<std::string, Morphism> morphisms;
};

Word resolve(const MtcData& C, const DiagramEnv& env, const WordRef& w);
/// Source and target of the expression; throws TypeMismatch or UnboundSymbol.
std::pair<Word, Word> typecheck(const MtcData& C, const DiagramEnv& env, const DiagramExpr& e);
Morphism evaluate(const Engine& E, const DiagramEnv& env, const DiagramExpr& e);
Morphism evaluate(const Engine& E, const DiagramEnv& env, const std::string& src);

std::string to_string(const DiagramExpr& e);

}  // namespace bimod
