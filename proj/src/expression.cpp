#include "licterm/expression.hpp"

#include <algorithm>
#include <cctype>

#include "licterm/errors.hpp"

namespace licterm {

LicenseExpression::LicenseExpression(ExprOp op, LicenseExpression lhs, LicenseExpression rhs)
    : node_(Binary{op, std::make_shared<const LicenseExpression>(std::move(lhs)),
                   std::make_shared<const LicenseExpression>(std::move(rhs))}) {}

bool operator==(const LicenseExpression& a, const LicenseExpression& b) {
  if (a.is_ref() != b.is_ref()) return false;
  if (a.is_ref()) return a.ref() == b.ref();
  return a.op() == b.op() && a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

std::vector<LicenseRef> LicenseExpression::refs() const {
  std::vector<LicenseRef> out;
  std::vector<const LicenseExpression*> stack{this};
  while (!stack.empty()) {
    const auto* e = stack.back();
    stack.pop_back();
    if (e->is_ref()) {
      out.push_back(e->ref());
    } else {
      stack.push_back(&e->rhs());
      stack.push_back(&e->lhs());
    }
  }
  return out;
}

namespace {

enum class TokKind { Word, LParen, RParen, And, Or, With, End };

struct Token {
  TokKind kind;
  std::size_t offset;
  std::string_view text;  // Word only (without '+')
  bool plus = false;
};

bool is_id_char(char c) noexcept {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == ':';
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  LicenseExpression parse() {
    if (tok_.kind == TokKind::End) fail({"license-id", "("});
    auto e = parse_or();
    if (tok_.kind != TokKind::End) fail({"AND", "OR", "WITH", "end of input"});
    return e;
  }

 private:
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(tok_.offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    throw SyntaxError(tok_.offset, std::move(expected), msg);
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == src_.size()) {
      tok_ = {TokKind::End, pos_, {}};
      return;
    }
    const std::size_t start = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      tok_ = {TokKind::LParen, start, {}};
      return;
    }
    if (c == ')') {
      ++pos_;
      tok_ = {TokKind::RParen, start, {}};
      return;
    }
    if (!is_id_char(c)) {
      tok_ = {TokKind::End, start, {}};
      throw SyntaxError(start, {"license-id", "(", ")", "AND", "OR", "WITH"},
                        "unexpected character '" + std::string(1, c) + "' at offset " +
                            std::to_string(start));
    }
    while (pos_ < src_.size() && is_id_char(src_[pos_])) ++pos_;
    const auto word = src_.substr(start, pos_ - start);
    bool plus = false;
    if (pos_ < src_.size() && src_[pos_] == '+') {
      plus = true;
      ++pos_;
    }
    TokKind kind = TokKind::Word;
    if (!plus) {
      if (word == "AND") kind = TokKind::And;
      else if (word == "OR") kind = TokKind::Or;
      else if (word == "WITH") kind = TokKind::With;
    }
    tok_ = {kind, start, word, plus};
  }

  LicenseExpression parse_or() {
    auto lhs = parse_and();
    while (tok_.kind == TokKind::Or) {
      advance();
      lhs = make_or(std::move(lhs), parse_and());
    }
    return lhs;
  }

  LicenseExpression parse_and() {
    auto lhs = parse_with();
    while (tok_.kind == TokKind::And) {
      advance();
      lhs = make_and(std::move(lhs), parse_with());
    }
    return lhs;
  }

  LicenseExpression parse_with() {
    if (tok_.kind == TokKind::LParen) {
      advance();
      auto inner = parse_or();
      if (tok_.kind != TokKind::RParen) fail({")", "AND", "OR"});
      advance();
      return inner;
    }
    if (tok_.kind != TokKind::Word) fail({"license-id", "("});
    LicenseRef ref{std::string(tok_.text), tok_.plus, std::nullopt};
    advance();
    if (tok_.kind == TokKind::With) {
      advance();
      if (tok_.kind != TokKind::Word || tok_.plus) fail({"exception-id"});
      ref.exception = std::string(tok_.text);
      advance();
    }
    return LicenseExpression(std::move(ref));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{TokKind::End, 0, {}};
};

int precedence(ExprOp op) noexcept { return op == ExprOp::Or ? 1 : 2; }

void render_into(const LicenseExpression& e, int parent_prec, bool right_child, std::string& out) {
  if (e.is_ref()) {
    out += render(e.ref());
    return;
  }
  const int p = precedence(e.op());
  const bool parens = p < parent_prec || (p == parent_prec && right_child);
  if (parens) out.push_back('(');
  render_into(e.lhs(), p, false, out);
  out += e.op() == ExprOp::And ? " AND " : " OR ";
  render_into(e.rhs(), p, true, out);
  if (parens) out.push_back(')');
}

}  // namespace

LicenseExpression parse_expression(std::string_view raw) { return Parser(raw).parse(); }

std::string render(const LicenseRef& r) {
  std::string out = r.id;
  if (r.or_later) out.push_back('+');
  if (r.exception) out.append(" WITH ").append(*r.exception);
  return out;
}

std::string render(const LicenseExpression& e) {
  std::string out;
  render_into(e, 0, false, out);
  return out;
}

std::vector<std::vector<LicenseRef>> alternatives(const LicenseExpression& e) {
  if (e.is_ref()) return {{e.ref()}};
  auto left = alternatives(e.lhs());
  auto right = alternatives(e.rhs());
  if (e.op() == ExprOp::Or) {
    left.insert(left.end(), std::make_move_iterator(right.begin()),
                std::make_move_iterator(right.end()));
    return left;
  }
  std::vector<std::vector<LicenseRef>> out;
  out.reserve(left.size() * right.size());
  for (const auto& l : left) {
    for (const auto& r : right) {
      auto combined = l;
      for (const auto& ref : r) {
        if (std::find(combined.begin(), combined.end(), ref) == combined.end()) {
          combined.push_back(ref);
        }
      }
      out.push_back(std::move(combined));
    }
  }
  return out;
}

}  // namespace licterm
