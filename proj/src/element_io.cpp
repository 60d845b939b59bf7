// Text form of ring elements.
//
//   element := term ("+" term)*  |  "0"
//   term    := rational "*" "[" letter ("|" letter)* "]" ["w^(" int ("," int)* ")"] ["t^(" int ("," int)* ")"]
//   letter  := "one" | "a"k | "b"k | "pt"

#include <cctype>
#include <sstream>

#include "quotcoh/curve_algebra.hpp"

namespace quotcoh {

namespace {

std::string letter_text(Letter l) {
  switch (l.kind) {
    case Letter::Kind::Unit: return "one";
    case Letter::Kind::Alpha: return "a" + std::to_string(l.index);
    case Letter::Kind::Beta: return "b" + std::to_string(l.index);
    case Letter::Kind::Point: return "pt";
  }
  return "?";
}

template <typename V>
void write_vector(std::ostringstream& os, const V& v, std::size_t len) {
  os << '(';
  for (std::size_t i = 0; i < len; ++i) {
    if (i) os << ',';
    os << (i < v.size() ? v[i] : 0);
  }
  os << ')';
}

class Parser {
 public:
  Parser(const ContextPtr& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

  RingElement run() {
    skip_ws();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) return RingElement(ctx_);
      pos_ = save;
    }
    std::vector<RingElement::Term> terms;
    terms.push_back(term());
    skip_ws();
    while (!at_end()) {
      expect('+');
      terms.push_back(term());
      skip_ws();
    }
    try {
      return RingElement::from_terms(ctx_, std::move(terms));
    } catch (const AlgebraError& e) {
      throw AlgebraError(std::string("parse error: ") + e.what());
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    std::string d = digits();
    if (d.size() > 9) fail("integer too large");
    return std::stol(d);
  }

  Rational rational() {
    skip_ws();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    mpz_class num(digits());
    mpz_class den = 1;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      den = mpz_class(digits());
      if (den == 0) fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }

  Letter letter() {
    skip_ws();
    if (accept("one")) return Letter::unit();
    if (accept("pt")) return Letter::point();
    if (peek() == 'a' || peek() == 'b') {
      const bool is_alpha = peek() == 'a';
      ++pos_;
      long k = integer();
      if (k < 1 || k > ctx_->genus)
        fail("curve class index " + std::to_string(k) + " out of range for genus " + std::to_string(ctx_->genus));
      return is_alpha ? Letter::alpha(static_cast<int>(k)) : Letter::beta(static_cast<int>(k));
    }
    fail("expected a letter (one, aK, bK, pt)");
  }

  template <typename V>
  void int_vector(V& out) {
    expect('(');
    out.clear();
    out.push_back(static_cast<Exponent>(integer()));
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      out.push_back(static_cast<Exponent>(integer()));
      skip_ws();
    }
    expect(')');
  }

  RingElement::Term term() {
    Rational c = rational();
    expect('*');
    expect('[');
    Monomial m;
    m.letters.push_back(letter());
    skip_ws();
    while (peek() == '|') {
      ++pos_;
      m.letters.push_back(letter());
      skip_ws();
    }
    expect(']');
    if (static_cast<int>(m.letters.size()) != ctx_->factors)
      fail("expected " + std::to_string(ctx_->factors) + " letters, got " + std::to_string(m.letters.size()));
    m.omega.assign(ctx_->factors, 0);
    if (accept("w^")) {
      int_vector(m.omega);
      if (static_cast<int>(m.omega.size()) != ctx_->factors)
        fail("omega vector must have " + std::to_string(ctx_->factors) + " entries");
    }
    if (accept("t^")) {
      int_vector(m.t);
      if (!ctx_->equivariant()) fail("t-variables used in a non-equivariant context");
      m.trim_t();
      if (!ctx_->unbounded() && static_cast<int>(m.t.size()) > ctx_->rank) fail("t vector longer than rank");
    }
    return {std::move(m), std::move(c)};
  }

  const ContextPtr& ctx_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const RingElement& x) {
  if (x.is_zero()) return "0";
  const RingContext& ctx = x.ctx();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << " * [";
    for (std::size_t i = 0; i < m.letters.size(); ++i) {
      if (i) os << '|';
      os << letter_text(m.letters[i]);
    }
    os << ']';
    if (m.omega_degree() > 0) {
      os << " w^";
      write_vector(os, m.omega, m.omega.size());
    }
    if (!m.t.empty()) {
      os << " t^";
      write_vector(os, m.t, ctx.unbounded() ? m.t.size() : static_cast<std::size_t>(ctx.rank));
    }
  }
  return os.str();
}

RingElement parse(const ContextPtr& ctx, std::string_view text) { return Parser(ctx, text).run(); }

}  // namespace quotcoh
