#include "ramsey/set_algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace ramsey {

namespace {

// Recursive-descent parser over the description grammar. Ring elements only
// ever appear between '(' and ')' or ';', so they are lexed as raw spans and
// handed to the ring's element parser.
template <class T>
class SetParser {
 public:
  explicit SetParser(std::string_view text) : text_(text) {}

  SetDescription<T> parse() {
    auto expr = parse_union();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return expr;
  }

 private:
  SetDescription<T> parse_union() {
    auto lhs = parse_intersect();
    while (peek() == '|') {
      ++pos_;
      lhs = lhs.union_with(parse_intersect());
    }
    return lhs;
  }

  SetDescription<T> parse_intersect() {
    auto lhs = parse_unary();
    while (peek() == '&') {
      ++pos_;
      lhs = lhs.intersect(parse_unary());
    }
    return lhs;
  }

  SetDescription<T> parse_unary() {
    skip_ws();
    if (peek() == '!') {
      ++pos_;
      return parse_unary().complement();
    }
    if (peek() == '(') {
      ++pos_;
      auto inner = parse_union();
      expect(')');
      return inner;
    }
    const std::string word = ident();
    if (word == "ideal") {
      expect('(');
      T z = element(')');
      expect(')');
      return SetDescription<T>::ideal(std::move(z));
    }
    if (word == "residue") {
      expect('(');
      T z = element(';');
      expect(';');
      T r = element(')');
      expect(')');
      return SetDescription<T>::residue(std::move(z), std::move(r));
    }
    if (word == "shift" || word == "dilate" || word == "lpre" || word == "rpre") {
      expect('(');
      T e = element(')');
      expect(')');
      auto inner = parse_unary();
      if (word == "shift") return translate(inner, std::move(e));
      if (word == "dilate") return dilate(inner, std::move(e));
      if (word == "lpre") return left_preimage(inner, std::move(e));
      return right_preimage(inner, std::move(e));
    }
    fail("unknown construct '" + word + "'");
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return std::string(text_.substr(start, pos_ - start));
  }

  T element(char stop) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop && text_[pos_] != ')') ++pos_;
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    if (end == start) fail("expected ring element");
    return RingIO<T>::parse(text_.substr(start, end - start));
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("set description parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SetDescription<GaussianInt> parse_gaussian_set(std::string_view text) {
  return SetParser<GaussianInt>(text).parse();
}

SetDescription<LipschitzQuat> parse_quaternion_set(std::string_view text) {
  return SetParser<LipschitzQuat>(text).parse();
}

}  // namespace ramsey
