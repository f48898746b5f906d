#include "cmdegen/expr.hpp"

#include <cctype>
#include <climits>

#include "cmdegen/errors.hpp"

namespace cmdegen {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  StableModule parse() {
    skip();
    if (at_end()) throw ParseError("empty module expression", pos_);
    StableModule m;
    if (peek() == '0') {
      std::size_t start = pos_;
      ++pos_;
      skip();
      if (at_end()) return m;
      // "0" alone is the zero module; a leading 0 is otherwise a bad count.
      throw ParseError("unexpected input after '0'", start + 1);
    }
    for (;;) {
      term(m);
      skip();
      if (at_end()) return m;
      if (peek() != '+') throw ParseError(std::string("expected '+' but found '") + peek() + "'", pos_);
      ++pos_;
      skip();
    }
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  int uint() {
    std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > INT_MAX) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return static_cast<int>(v);
  }

  void term(StableModule& m) {
    int count = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      count = uint();
      skip();
      if (at_end() || peek() != '*') throw ParseError("expected '*' after multiplicity", pos_);
      ++pos_;
      skip();
      if (count == 0) throw ParseError("multiplicity must be positive", start);
    }
    if (at_end()) throw ParseError("expected an indecomposable", pos_);
    std::size_t start = pos_;
    char c = peek();
    ++pos_;
    IndecId id;
    if (c == 'I' || c == 'M') {
      skip();
      int i = uint();
      id = c == 'I' ? IndecId::ideal(i) : IndecId::jordan(i);
    } else if (c == 'N') {
      skip();
      if (at_end() || (peek() != '+' && peek() != '-')) throw ParseError("expected '+' or '-' after N", pos_);
      id = peek() == '+' ? IndecId::plus() : IndecId::minus();
      ++pos_;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    m.add(id, count);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

StableModule parse_module_expr(const SingularitySpec& spec, const std::string& text) {
  auto m = Parser(text).parse();
  auto r = knoerrer_reduce(spec);
  for (const auto& [id, c] : m.multiplicities()) {
    if (!belongs(r, id)) {
      throw DomainError("'" + to_string(id) + "' is not an indecomposable of " + to_string(r));
    }
  }
  return m;
}

}  // namespace cmdegen
