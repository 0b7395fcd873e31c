#include "heyting/expr.hpp"

#include <algorithm>
#include <cctype>

#include "heyting/ladder.hpp"

namespace heyting {
namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  HeytingAlgebra run() {
    HeytingAlgebra a = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    return a;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  std::string name() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  HeytingAlgebra parse_sum() {
    HeytingAlgebra acc = parse_product();
    while (accept("+")) acc = concat(acc, parse_product());
    return acc;
  }

  HeytingAlgebra parse_product() {
    HeytingAlgebra acc = parse_postfix();
    // 'x' is an operator only between operands.
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        ++pos_;
        acc = product(acc, parse_postfix());
      } else {
        return acc;
      }
    }
  }

  HeytingAlgebra parse_postfix() {
    HeytingAlgebra acc = parse_atom();
    while (accept("/")) {
      expect("nabla");
      expect("(");
      const std::size_t at = pos_;
      const std::size_t e = number();
      if (e >= acc.size()) {
        pos_ = at;
        fail("element index out of range");
      }
      expect(")");
      acc = quotient(acc, principal_filter(acc, static_cast<Elem>(e))).algebra;
    }
    return acc;
  }

  HeytingAlgebra parse_atom() {
    skip_ws();
    if (accept("(")) {
      HeytingAlgebra inner = parse_sum();
      expect(")");
      return inner;
    }
    if (accept("trunc")) {
      expect("(");
      const std::size_t at = pos_;
      const std::string n = name();
      if (!is_truncation_name(n)) {
        pos_ = at;
        fail("unknown truncation '" + n + "'");
      }
      expect(",");
      const std::size_t k = number();
      expect(")");
      if (k == 0) fail("truncation size must be positive");
      max_index_ = std::max(max_index_, k);
      return truncation(n, k);
    }
    if (pos_ < text_.size() && (text_[pos_] == 'Z' || text_[pos_] == 'C' || text_[pos_] == 'B')) {
      const char kind = text_[pos_++];
      expect("(");
      const std::size_t at = pos_;
      const std::size_t n = number();
      expect(")");
      if (n > limits().max_elements) throw Error(ErrorKind::SizeLimit, "constructor too large");
      switch (kind) {
        case 'Z':
          if (n == 0) {
            pos_ = at;
            fail("Z(0) is undefined");
          }
          max_index_ = std::max(max_index_, n);
          return rn_algebra(n).algebra;
        case 'C':
          if (n == 0) {
            pos_ = at;
            fail("C(0) is undefined");
          }
          return chain(n);
        default:
          if (n > 9) throw Error(ErrorKind::SizeLimit, "B(n) limited to 9 atoms");
          return boolean_algebra(n);
      }
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + text_[pos_] + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

}  // namespace

HeytingAlgebra eval_algebra(std::string_view text) { return ExprParser(text).run(); }

std::size_t max_ladder_index(std::string_view text) {
  ExprParser p(text);
  p.run();
  return p.max_index();
}

}  // namespace heyting
