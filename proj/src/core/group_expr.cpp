#include "csdlab/group_expr.hpp"

#include <array>
#include <cctype>
#include <climits>

#include "csdlab/groups.hpp"
#include "csdlab/number_theory.hpp"
#include "csdlab/permutation.hpp"

namespace csdlab {
namespace {

constexpr std::array<std::string_view, 11> kFamilies = {"Z", "Ea", "D", "Q", "SD", "M",
                                                        "P", "ZM", "E", "A", "S"};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExprPtr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GroupExprPtr expr() {
    skip_ws();
    const std::size_t start = pos_;
    GroupExprPtr left = term();
    while (peek('x')) {
      ++pos_;
      GroupExprPtr right = term();
      left = std::make_shared<const GroupExpr>(
          GroupExpr{ProductNode{std::move(left), std::move(right)}, {start, pos_}});
    }
    return left;
  }

  std::int64_t integer() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer");
    }
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (INT64_MAX - digit) / 10) fail("integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  GroupExprPtr term() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek('(')) {
      ++pos_;
      auto inner = expr();
      expect(')');
      return inner;
    }
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      name += text_[pos_++];
    }
    if (name.empty()) fail("expected a group family name or '('");
    if (name == "Perm") return perm(start);
    bool known = false;
    for (auto f : kFamilies) known = known || f == name;
    if (!known) {
      pos_ = start;
      fail("unknown family \"" + name + "\"");
    }
    expect('(');
    std::vector<std::int64_t> params{integer()};
    while (peek(',')) {
      ++pos_;
      params.push_back(integer());
    }
    expect(')');
    return std::make_shared<const GroupExpr>(GroupExpr{FamilyNode{name, std::move(params)}, {start, pos_}});
  }

  GroupExprPtr perm(std::size_t start) {
    expect('(');
    PermNode node;
    node.degree = integer();
    expect(';');
    node.generators.push_back(cycles());
    while (peek(',')) {
      ++pos_;
      node.generators.push_back(cycles());
    }
    expect(')');
    return std::make_shared<const GroupExpr>(GroupExpr{std::move(node), {start, pos_}});
  }

  // One generator: a run of parenthesized cycles, normalized to single spaces.
  std::string cycles() {
    std::string out;
    if (!peek('(')) fail("expected a cycle");
    while (peek('(')) {
      ++pos_;
      out += '(';
      bool first = true;
      for (;;) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        if (pos_ < text_.size() && text_[pos_] == ',' && !first) {
          ++pos_;
          continue;
        }
        const std::int64_t point = integer();
        if (!first) out += ' ';
        out += std::to_string(point);
        first = false;
      }
      out += ')';
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const GroupExpr& e, std::string& out) {
  if (const auto* f = std::get_if<FamilyNode>(&e.node)) {
    out += f->name + "(";
    for (std::size_t i = 0; i < f->params.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(f->params[i]);
    }
    out += ')';
  } else if (const auto* p = std::get_if<ProductNode>(&e.node)) {
    print_into(*p->left, out);
    out += 'x';
    const bool wrap = std::holds_alternative<ProductNode>(p->right->node);
    if (wrap) out += '(';
    print_into(*p->right, out);
    if (wrap) out += ')';
  } else {
    const auto& perm = std::get<PermNode>(e.node);
    out += "Perm(" + std::to_string(perm.degree) + ";";
    for (std::size_t i = 0; i < perm.generators.size(); ++i) {
      out += (i == 0 ? " " : ", ") + perm.generators[i];
    }
    out += ')';
  }
}

int as_int(std::int64_t v, SourceSpan span) {
  if (v > INT_MAX) throw ExprError(span, "parameter " + std::to_string(v) + " too large");
  return static_cast<int>(v);
}

FiniteGroup evaluate_family(const FamilyNode& f, SourceSpan span, const Limits& limits) {
  const auto& ps = f.params;
  auto arity = [&](std::size_t n) {
    if (ps.size() != n) {
      throw ExprError(span, f.name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
    }
  };
  auto power_of_two_exponent = [&](std::int64_t order, const std::string& what) {
    const auto pp = nt::as_prime_power(order);
    if (!pp || pp->prime != 2) throw ExprError(span, what + " order must be a power of 2");
    return pp->exponent;
  };

  if (f.name == "Z") {
    arity(1);
    return cyclic(as_int(ps[0], span), limits);
  }
  if (f.name == "Ea") {
    arity(2);
    return elementary_abelian(as_int(ps[0], span), as_int(ps[1], span), limits);
  }
  if (f.name == "D") {
    arity(1);
    if (ps[0] < 4 || ps[0] % 2 != 0) throw ExprError(span, "dihedral order must be even >= 4");
    return dihedral(as_int(ps[0] / 2, span), limits);
  }
  if (f.name == "Q") {
    arity(1);
    return generalized_quaternion(power_of_two_exponent(ps[0], "quaternion"), limits);
  }
  if (f.name == "SD") {
    arity(1);
    return quasidihedral(power_of_two_exponent(ps[0], "quasi-dihedral"), limits);
  }
  if (f.name == "M") {
    arity(1);
    const auto pp = nt::as_prime_power(ps[0]);
    if (!pp) throw ExprError(span, "modular group order must be a prime power");
    return modular_group_M(static_cast<int>(pp->prime), pp->exponent, limits);
  }
  if (f.name == "P") {
    arity(3);
    return p_group_P(as_int(ps[0], span), as_int(ps[1], span), as_int(ps[2], span), limits);
  }
  if (f.name == "ZM") {
    arity(3);
    return zm_group(as_int(ps[0], span), as_int(ps[1], span), as_int(ps[2], span), limits);
  }
  if (f.name == "E") {
    arity(1);
    const auto pp = nt::as_prime_power(ps[0]);
    if (!pp || pp->exponent != 3 || pp->prime == 2) {
      throw ExprError(span, "E(k) needs k = p^3 for an odd prime p");
    }
    return heisenberg_E(static_cast<int>(pp->prime), limits);
  }
  if (f.name == "A") {
    arity(1);
    return alternating_group(as_int(ps[0], span), limits);
  }
  if (f.name == "S") {
    arity(1);
    return symmetric_group(as_int(ps[0], span), limits);
  }
  throw ExprError(span, "unknown family \"" + f.name + "\"");
}

}  // namespace

bool structurally_equal(const GroupExpr& a, const GroupExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* fa = std::get_if<FamilyNode>(&a.node)) {
    const auto& fb = std::get<FamilyNode>(b.node);
    return fa->name == fb.name && fa->params == fb.params;
  }
  if (const auto* pa = std::get_if<ProductNode>(&a.node)) {
    const auto& pb = std::get<ProductNode>(b.node);
    return structurally_equal(*pa->left, *pb.left) && structurally_equal(*pa->right, *pb.right);
  }
  const auto& ma = std::get<PermNode>(a.node);
  const auto& mb = std::get<PermNode>(b.node);
  return ma.degree == mb.degree && ma.generators == mb.generators;
}

GroupExprPtr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string print(const GroupExpr& e) {
  std::string out;
  print_into(e, out);
  return out;
}

FiniteGroup evaluate(const GroupExpr& e, const Limits& limits) {
  try {
    if (const auto* f = std::get_if<FamilyNode>(&e.node)) return evaluate_family(*f, e.span, limits);
    if (const auto* p = std::get_if<ProductNode>(&e.node)) {
      const FiniteGroup left = evaluate(*p->left, limits);
      const FiniteGroup right = evaluate(*p->right, limits);
      return direct_product(left, right, limits);
    }
    const auto& perm = std::get<PermNode>(e.node);
    if (perm.degree < 1 || perm.degree > 64) throw ExprError(e.span, "permutation degree must be in 1..64");
    std::vector<Permutation> gens;
    for (const auto& g : perm.generators) {
      gens.push_back(Permutation::parse(static_cast<std::size_t>(perm.degree), g));
    }
    return from_generators(static_cast<std::size_t>(perm.degree), gens, limits);
  } catch (const ExprError&) {
    throw;
  } catch (const InvalidArgument& err) {
    throw ExprError(e.span, err.what());
  }
}

FiniteGroup group_from_expr(std::string_view text, const Limits& limits) {
  const auto e = parse_group_expr(text);
  return evaluate(*e, limits).with_label(std::string(text));
}

}  // namespace csdlab
