#include "mmalign/dsl.hpp"

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "mmalign/errors.hpp"

namespace mmalign {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  StepSet step_set(std::optional<std::size_t> dimension) {
    skip_ws();
    if (peek() == '{') return explicit_set(dimension);
    const auto start = pos_;
    const std::string word = identifier();
    if (word == "unit") {
      expect('(');
      const auto n = integer();
      expect(')');
      return StepSet::unit_cube(n);
    }
    if (word == "box") {
      expect('(');
      const auto lo = integer();
      expect('.');
      expect('.');
      const auto hi = integer();
      expect(',');
      const auto n = integer();
      expect(')');
      return StepSet::box(lo, hi, n);
    }
    if (word == "natpos") {
      expect('(');
      const auto n = integer();
      expect(')');
      return StepSet::all_positive(n);
    }
    if (word == "halfopen2") return StepSet::half_open();
    if (word == "prod") {
      expect('(');
      std::vector<BaseSet> bases{base()};
      while (accept(',')) bases.push_back(base());
      expect(')');
      return StepSet::product(std::move(bases));
    }
    throw ParseError("unknown step-set expression", start, word.empty() ? token_at(start) : word);
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_, token_at(pos_));
  }

  std::vector<unsigned> integer_list() {
    std::vector<unsigned> out{integer()};
    while (accept(',')) out.push_back(integer());
    return out;
  }

 private:
  StepSet explicit_set(std::optional<std::size_t> dimension) {
    expect('{');
    std::vector<StepVector> steps;
    if (!accept('}')) {
      do {
        expect('(');
        steps.push_back(integer_list());
        expect(')');
      } while (accept(','));
      expect('}');
    }
    if (steps.empty()) {
      if (!dimension) throw ParseError("empty step set needs a dimension", pos_, "{}");
      return StepSet::explicit_steps(*dimension, {});
    }
    const auto n = steps.front().size();
    return StepSet::explicit_steps(n, std::move(steps));
  }

  BaseSet base() {
    skip_ws();
    if (accept('[')) {
      std::vector<unsigned> values;
      if (!accept(']')) {
        values = integer_list();
        expect(']');
      }
      return BaseSet::finite(std::move(values));
    }
    const auto start = pos_;
    const std::string word = identifier();
    if (word == "nat") return BaseSet::nat();
    if (word == "natpos") return BaseSet::natpos();
    if (word == "odd") return BaseSet::odd();
    if (word == "ge") {
      expect('(');
      const auto m = integer();
      expect(')');
      return BaseSet::at_least(m);
    }
    throw ParseError("unknown base set", start, word.empty() ? token_at(start) : word);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_, token_at(pos_));
  }

  std::string identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned integer() {
    skip_ws();
    const auto start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > std::numeric_limits<unsigned>::max()) throw ParseError("integer too large", start, token_at(start));
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a non-negative integer", start, token_at(start));
    return static_cast<unsigned>(value);
  }

  std::string token_at(std::size_t p) const {
    if (p >= text_.size()) return "<end>";
    auto end = p + 1;
    if (std::isalnum(static_cast<unsigned char>(text_[p]))) {
      while (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) ++end;
    }
    return std::string(text_.substr(p, end - p));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

StepSet parse_step_set(std::string_view text, std::optional<std::size_t> dimension) {
  Parser parser(text);
  auto s = parser.step_set(dimension);
  parser.finish();
  if (dimension && s.dimension() != *dimension) {
    throw DimensionMismatch("step set " + s.to_string() + " has dimension " + std::to_string(s.dimension()) +
                            ", expected " + std::to_string(*dimension));
  }
  return s;
}

LengthTuple parse_lengths(std::string_view text) {
  Parser parser(text);
  auto values = parser.integer_list();
  parser.finish();
  return LengthTuple(std::move(values));
}

}  // namespace mmalign
