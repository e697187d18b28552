#include "gaspin/mv_text.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "gaspin/error.hpp"

namespace gaspin {
namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig)
      : text_(text), sig_(sig), result_(sig) {}

  Multivector run() {
    skip_space();
    if (at_end()) fail("empty expression");
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1.0 : 1.0;
      skip_space();
    }
    term(sign);
    skip_space();
    while (!at_end()) {
      const char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      take();
      skip_space();
      term(op == '-' ? -1.0 : 1.0);
      skip_space();
    }
    return result_;
  }

 private:
  void term(double sign) {
    const std::size_t start = pos_;
    double coeff = 1.0;
    bool has_number = false;
    if (!at_end() && (is_digit(peek()) || peek() == '.')) {
      coeff = number();
      has_number = true;
      skip_space();
    }
    BladeMask mask = 0;
    if (!at_end() && peek() == 'e') {
      mask = blade();
    } else if (!has_number) {
      pos_ = start;
      fail("expected a number or a blade");
    }
    result_[mask] += sign * coeff;
  }

  double number() {
    const std::size_t start = pos_;
    bool digits = false;
    while (!at_end() && is_digit(peek())) { take(); digits = true; }
    if (!at_end() && peek() == '.') {
      take();
      while (!at_end() && is_digit(peek())) { take(); digits = true; }
    }
    if (!digits) fail("malformed number", start);
    // 'e' followed by a sign, or 'E', starts an exponent; a bare "e12" after
    // a number is a blade.
    if (pos_ + 1 < text_.size()) {
      const char c = text_[pos_];
      const char next = text_[pos_ + 1];
      const bool lower_exp = c == 'e' && (next == '+' || next == '-');
      const bool upper_exp = c == 'E';
      if (lower_exp || upper_exp) {
        take();
        if (peek() == '+' || peek() == '-') take();
        if (at_end() || !is_digit(peek())) fail("malformed exponent");
        while (!at_end() && is_digit(peek())) take();
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("malformed number", start);
    return value;
  }

  BladeMask blade() {
    take();  // 'e'
    if (at_end() || !is_digit(peek())) fail("expected blade indices after 'e'");
    BladeMask mask = 0;
    int last_index = 0;
    while (!at_end() && is_digit(peek())) {
      const std::size_t at = pos_;
      const int index = take() - '0';
      if (index < 1 || index > sig_.n()) {
        fail("index " + std::to_string(index) + " out of range for " +
                 sig_.to_string(),
             at);
      }
      if (index == last_index) fail("repeated index in blade", at);
      if (index < last_index) fail("blade indices must ascend", at);
      mask |= BladeMask{1} << (index - 1);
      last_index = index;
    }
    return mask;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(at, what);
  }

  std::string_view text_;
  Signature sig_;
  Multivector result_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, const Signature& sig) {
  return Parser(text, sig).run();
}

std::string format_number(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string blade_name(BladeMask mask) {
  if (mask == 0) return {};
  std::string name = "e";
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1u) name += static_cast<char>('1' + i);
  }
  return name;
}

std::string serialize(const Multivector& u) {
  std::string out;
  for (BladeMask m = 0; m < u.size(); ++m) {
    const double c = u[m];
    if (c == 0.0) continue;
    if (out.empty()) {
      if (std::signbit(c)) out += '-';
    } else {
      out += std::signbit(c) ? " - " : " + ";
    }
    out += format_number(std::abs(c));
    if (m != 0) {
      out += ' ';
      out += blade_name(m);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace gaspin
