#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "csdlab/errors.hpp"
#include "csdlab/finite_group.hpp"
#include "csdlab/limits.hpp"

namespace csdlab {

// Half-open byte range [begin, end) in the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("parse error at position " + std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A constructor precondition failed while evaluating an expression.
class ExprError : public InvalidArgument {
 public:
  ExprError(SourceSpan span, const std::string& message)
      : InvalidArgument("at " + std::to_string(span.begin) + ".." + std::to_string(span.end) + ": " +
                        message),
        span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct FamilyNode {
  std::string name;
  std::vector<std::int64_t> params;
};

struct ProductNode {
  GroupExprPtr left;
  GroupExprPtr right;
};

struct PermNode {
  std::int64_t degree = 0;
  std::vector<std::string> generators;  // cycle notation, one per generator
};

struct GroupExpr {
  std::variant<FamilyNode, ProductNode, PermNode> node;
  SourceSpan span;
};

// Structural equality; spans are ignored.
bool structurally_equal(const GroupExpr& a, const GroupExpr& b);

// expr := term ('x' term)*
// term := FAMILY '(' int (',' int)* ')' | 'Perm' '(' int ';' gens ')' | '(' expr ')'
// gens := cycles (',' cycles)*   where cycles is e.g. "(0 1)(2 3)" or "()"
// Families: Z, Ea, D, Q, SD, M, P, ZM, E, A, S. Whitespace is insignificant.
GroupExprPtr parse_group_expr(std::string_view text);

// Canonical text; parse_group_expr(print(e)) is structurally equal to e.
std::string print(const GroupExpr& e);

// Builds the group. D(k), Q(k), SD(k), M(k) and E(k) take the group order;
// Z(n), Ea(p,k), P(n,p,q), ZM(m,n,r), A(n), S(n) take construction
// parameters. Precondition failures throw ExprError; size limits throw
// GuardrailError.
FiniteGroup evaluate(const GroupExpr& e, const Limits& limits = {});

// parse + evaluate; the group is labelled with the source text.
FiniteGroup group_from_expr(std::string_view text, const Limits& limits = {});

}  // namespace csdlab
