#include "ffl/serialize.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ffl {

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos) {}

namespace {

class PolyParser {
public:
  PolyParser(std::string_view text, const PolyRing& ring) : s_(text), ring_(ring) {}

  Poly parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    term(negative);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
      negative = peek() == '-';
      ++pos_;
      skip_ws();
      term(negative);
    }
    std::vector<std::int64_t> coeffs;
    for (const auto& [e, c] : terms_) {
      if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
      coeffs[e] = c;
    }
    return ring_.make(coeffs);
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // digits, reduced mod q as they are read
  std::int64_t number() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected a number", pos_);
    std::int64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + (peek() - '0')) % ring_.q();
      ++pos_;
    }
    return v;
  }

  unsigned exponent() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an exponent", pos_);
    const std::size_t start = pos_;
    unsigned v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<unsigned>(peek() - '0');
      if (v > 4096) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return v;
  }

  void term(bool negative) {
    if (at_end()) throw ParseError("expected a term", pos_);
    std::int64_t c = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      has_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
      }
    }
    unsigned e = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      e = 1;
      const std::size_t save = pos_;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = exponent();
      } else {
        pos_ = save;
      }
    } else if (!has_coeff) {
      throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
    }
    auto& slot = terms_[e];
    slot = (slot + (negative ? ring_.q() - c : c)) % ring_.q();
  }

  std::string_view s_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
  std::map<unsigned, std::int64_t> terms_;
};

}  // namespace

Poly parse_poly(std::string_view text, const PolyRing& ring) { return PolyParser(text, ring).parse(); }

std::string format_decimal(const HighPrec& v, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace ffl
