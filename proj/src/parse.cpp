#include <cctype>

#include "gpi/error.hpp"
#include "gpi/freealg.hpp"

namespace gpi {
namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Group& group, CoeffRing ring)
      : text_(text), group_(group), ring_(ring) {}

  GPolynomial parse() {
    GPolynomial f(ring_);
    skip_space();
    if (at_end()) fail("empty expression");
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (at_end()) return f;
      pos_ = save;
    }
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    parse_term(f, negative);
    for (;;) {
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
      parse_term(f, negative);
    }
    return f;
  }

  GMonomial parse_single_monomial() {
    skip_space();
    std::vector<GVar> letters = parse_factors();
    skip_space();
    if (!at_end()) fail("unexpected character in monomial");
    return GMonomial(std::move(letters));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    return out;
  }

  void parse_term(GPolynomial& f, bool negative) {
    skip_space();
    if (at_end()) fail("expected a term");
    mpq_class coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits());
      mpz_class den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        const std::string d = digits();
        if (d.empty()) fail("expected a denominator");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      coeff = mpq_class(num, den);
      coeff.canonicalize();
      skip_space();
    }
    if (negative) coeff = -coeff;
    std::vector<GVar> letters = parse_factors();
    f.add_term(GMonomial(std::move(letters)), Scalar(ring_, coeff));
  }

  std::vector<GVar> parse_factors() {
    std::vector<GVar> letters;
    while (!at_end() && peek() == 'x') {
      letters.push_back(parse_factor());
      skip_space();
    }
    if (letters.empty()) fail("expected a variable x<index>:<element>");
    if (!at_end() && peek() != '+' && peek() != '-') fail("unexpected character");
    return letters;
  }

  GVar parse_factor() {
    ++pos_;  // 'x'
    const std::string idx = digits();
    if (idx.empty()) fail("expected a variable index after 'x'");
    if (idx.size() > 6) fail("variable index too large");
    const int index = std::stoi(idx);
    if (index < 1) fail("variable indices start at 1");
    if (at_end() || peek() != ':') fail("expected ':' after the variable index");
    ++pos_;
    const std::size_t name_start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (pos_ == name_start) fail("expected a group element name");
    const std::string_view name = text_.substr(name_start, pos_ - name_start);
    const auto g = group_.find(name);
    if (!g) {
      throw ParseError("unknown group element '" + std::string(name) + "'", name_start + 1);
    }
    bool star = false;
    if (!at_end() && peek() == '*') {
      star = true;
      ++pos_;
    }
    return GVar{index, *g, star};
  }

  std::string_view text_;
  const Group& group_;
  CoeffRing ring_;
  std::size_t pos_ = 0;
};

std::string format_var(const GVar& v, const Group& group) {
  return "x" + std::to_string(v.index) + ":" + group.name(v.element) + (v.star ? "*" : "");
}

}  // namespace

GPolynomial parse_poly(std::string_view text, const Group& group, CoeffRing ring) {
  return PolyParser(text, group, ring).parse();
}

GMonomial parse_monomial(std::string_view text, const Group& group) {
  return PolyParser(text, group, CoeffRing::rationals()).parse_single_monomial();
}

std::string format_monomial(const GMonomial& m, const Group& group) {
  std::string out;
  for (const auto& v : m.letters()) {
    if (!out.empty()) out += " ";
    out += format_var(v, group);
  }
  return out;
}

std::string format_poly(const GPolynomial& f, const Group& group) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c.is_negative();
    const Scalar mag = negative ? -c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (!mag.is_one()) out += mag.to_string() + " ";
    out += format_monomial(m, group);
  }
  return out;
}

std::string format_word(std::span<const SignedElement> word, const Group& group) {
  std::string out = "(";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ", ";
    out += group.name(word[i].element);
    if (word[i].star) out += "*";
  }
  return out + ")";
}

}  // namespace gpi
