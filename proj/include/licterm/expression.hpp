#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace licterm {

struct LicenseRef {
  std::string id;
  bool or_later = false;  // trailing '+'
  std::optional<std::string> exception;

  friend bool operator==(const LicenseRef&, const LicenseRef&) = default;
};

enum class ExprOp { And, Or };

/// Immutable SPDX expression tree. Binary nodes share their children, so
/// copies are cheap.
class LicenseExpression {
 public:
  explicit LicenseExpression(LicenseRef ref) : node_(std::move(ref)) {}
  LicenseExpression(ExprOp op, LicenseExpression lhs, LicenseExpression rhs);

  bool is_ref() const noexcept { return std::holds_alternative<LicenseRef>(node_); }
  const LicenseRef& ref() const { return std::get<LicenseRef>(node_); }

  ExprOp op() const { return std::get<Binary>(node_).op; }
  const LicenseExpression& lhs() const { return *std::get<Binary>(node_).lhs; }
  const LicenseExpression& rhs() const { return *std::get<Binary>(node_).rhs; }

  /// Leaves, left to right.
  std::vector<LicenseRef> refs() const;

  friend bool operator==(const LicenseExpression& a, const LicenseExpression& b);

 private:
  struct Binary {
    ExprOp op;
    std::shared_ptr<const LicenseExpression> lhs;
    std::shared_ptr<const LicenseExpression> rhs;
  };
  std::variant<LicenseRef, Binary> node_;
};

inline LicenseExpression make_and(LicenseExpression a, LicenseExpression b) {
  return {ExprOp::And, std::move(a), std::move(b)};
}
inline LicenseExpression make_or(LicenseExpression a, LicenseExpression b) {
  return {ExprOp::Or, std::move(a), std::move(b)};
}

/// SPDX expression grammar. OR binds looser than AND, WITH binds tighter than
/// AND, operators are upper case, chains fold to the left. Throws SyntaxError.
LicenseExpression parse_expression(std::string_view raw);

/// Canonical text: single spaces, parentheses only where needed so that
/// parse_expression(render(e)) == e.
std::string render(const LicenseExpression& e);
std::string render(const LicenseRef& r);

/// Disjunctive normal form: each alternative is the set of licenses that
/// apply together when one OR branch is chosen at every OR node.
std::vector<std::vector<LicenseRef>> alternatives(const LicenseExpression& e);

}  // namespace licterm
