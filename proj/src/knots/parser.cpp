#include <cctype>

#include "concord/errors.hpp"
#include "concord/knots.hpp"

namespace concord::knots {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  KnotExpression parse() {
    KnotExpression k = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return k;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ValidationError("cannot parse knot expression '" + std::string(text_) + "': " + what + " at offset " +
                          std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    std::size_t end = pos_ + word.size();
    if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    if (pos_ - digits > 9) fail("integer out of range");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  KnotExpression sum() {
    std::vector<KnotExpression> terms{unary()};
    while (accept('#')) terms.push_back(unary());
    return KnotExpression::sum(terms);
  }

  KnotExpression unary() {
    if (accept('-')) return KnotExpression::mirror(unary());
    return primary();
  }

  KnotExpression primary() {
    if (accept('(')) {
      KnotExpression k = sum();
      expect(')');
      return k;
    }
    if (accept_word("U")) return KnotExpression::unknot();
    if (accept_word("Wh")) {
      expect('(');
      KnotExpression k = sum();
      expect(')');
      return KnotExpression::whitehead_double(k);
    }
    if (accept_word("Cable")) {
      expect('(');
      KnotExpression k = sum();
      expect(';');
      int p = integer();
      expect(',');
      int q = integer();
      expect(')');
      return KnotExpression::cable(k, p, q);
    }
    if (accept_word("T")) {
      expect('(');
      int p = integer();
      expect(',');
      int q = integer();
      expect(')');
      return KnotExpression::torus(p, q);
    }
    fail("expected U, T(p,q), Wh(E), Cable(E;p,q), -E or (E)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpression KnotExpression::parse(std::string_view text) { return ExpressionParser(text).parse(); }

}  // namespace concord::knots
