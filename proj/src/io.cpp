#include "rri/io.hpp"

#include <cctype>
#include <cstddef>
#include <utility>

#include "json.hpp"

namespace rri {

namespace {

// Caps keeping hostile exponents from exhausting memory before arithmetic
// even starts: degree of any constructed polynomial, bit size of any
// constant power.
constexpr unsigned long kMaxDegree = 1ul << 20;
constexpr unsigned long kMaxConstantBits = 1ul << 26;

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

BigInt bigint_from_decimal(const std::string& digits) {
  return BigInt(digits, 10);  // explicit base: never auto-detect octal/hex
}

/* expr   := term (('+'|'-') term)*
 * term   := unary ('*' unary)*
 * unary  := '-' unary | power
 * power  := atom ('^' exponent)?
 * exponent := NAT ('^' exponent)?          (right-associative tower)
 * atom   := NAT | 'x' | '(' expr ')'
 */
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  IntPoly parse() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("empty input", pos_);
    IntPoly p = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) fail_unexpected();
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail_unexpected() const {
    if (pos_ >= text_.size())
      throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (is_alpha(c) || c == '_')
      throw parse_error("unknown symbol (only variable x is allowed)", pos_);
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  IntPoly parse_expr() {
    IntPoly acc = parse_term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = add(acc, parse_term());
      } else if (peek() == '-') {
        ++pos_;
        acc = sub(acc, parse_term());
      } else {
        return acc;
      }
    }
  }

  IntPoly parse_term() {
    IntPoly acc = parse_unary();
    for (;;) {
      skip_ws();
      if (peek() != '*') return acc;
      ++pos_;
      acc = mul(acc, parse_unary());
    }
  }

  IntPoly parse_unary() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return negate(parse_unary());
    }
    return parse_power();
  }

  IntPoly parse_power() {
    IntPoly base = parse_atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    std::size_t at = pos_;
    unsigned long e = parse_exponent();
    return apply_power(std::move(base), e, at);
  }

  unsigned long parse_exponent() {
    skip_ws();
    std::size_t at = pos_;
    if (!is_digit(peek()))
      throw parse_error("expected a nonnegative integer exponent", pos_);
    BigInt v = parse_nat();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      unsigned long sub = parse_exponent();
      if (sign_of(v) == 0) {
        v = (sub == 0) ? 1 : 0;
      } else if (v != 1) {
        std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
        if (sub != 0 && bits > 63 / sub)
          throw parse_error("exponent too large", at);
        mpz_pow_ui(v.get_mpz_t(), v.get_mpz_t(), sub);
      }
    }
    if (mpz_sizeinbase(v.get_mpz_t(), 2) > 62)
      throw parse_error("exponent too large", at);
    return v.get_ui();
  }

  IntPoly apply_power(IntPoly base, unsigned long e, std::size_t at) const {
    if (e == 0) return IntPoly({1});
    if (base.degree() <= 0) {
      if (base.is_zero()) return IntPoly();
      const BigInt& c = base.coeff(0);
      if (c == 1) return base;
      if (c == -1) return e % 2 == 0 ? IntPoly({1}) : base;
      std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
      if (bits > kMaxConstantBits / e)
        throw parse_error("exponent too large", at);
      BigInt r;
      mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), e);
      return IntPoly::constant(r);
    }
    if (e > kMaxDegree / static_cast<unsigned long>(base.degree()))
      throw parse_error("exponent too large", at);
    return poly_pow(base, e);
  }

  IntPoly parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = parse_expr();
      skip_ws();
      if (peek() != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      return IntPoly({0, 1});
    }
    if (is_digit(c)) return IntPoly::constant(parse_nat());
    fail_unexpected();
  }

  BigInt parse_nat() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return bigint_from_decimal(std::string(text_.substr(start, pos_ - start)));
  }
};

}  // namespace

IntPoly parse_expression(std::string_view text) {
  return ExprParser(text).parse();
}

IntPoly parse_coeffs(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos]) || text[pos] == ',') {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    std::size_t p = pos;
    if (text[p] == '+' || text[p] == '-') ++p;
    std::size_t digits = p;
    while (p < text.size() && is_digit(text[p])) ++p;
    if (p == digits) throw parse_error("expected an integer", start);
    if (p < text.size() && !is_space(text[p]) && text[p] != ',')
      throw parse_error(std::string("unexpected character '") + text[p] + "'",
                        p);
    std::string tok(text.substr(start, p - start));
    if (tok[0] == '+') tok.erase(0, 1);
    coeffs.push_back(bigint_from_decimal(tok));
    pos = p;
  }
  if (coeffs.empty()) throw parse_error("empty input", 0);
  return IntPoly(std::move(coeffs));
}

IntPoly parse_sparse(std::string_view text) {
  std::vector<BigInt> coeffs;
  std::vector<bool> seen;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    std::size_t p = pos;
    while (p < text.size() && is_digit(text[p])) ++p;
    if (p == start) throw parse_error("expected an exponent", start);
    if (p >= text.size() || text[p] != ':')
      throw parse_error("expected ':' after the exponent", p);
    BigInt eb = bigint_from_decimal(std::string(text.substr(start, p - start)));
    if (mpz_sizeinbase(eb.get_mpz_t(), 2) > 62 || eb.get_ui() > kMaxDegree)
      throw parse_error("exponent too large", start);
    unsigned long e = eb.get_ui();
    ++p;
    std::size_t cstart = p;
    if (p < text.size() && (text[p] == '+' || text[p] == '-')) ++p;
    std::size_t digits = p;
    while (p < text.size() && is_digit(text[p])) ++p;
    if (p == digits) throw parse_error("expected a coefficient", cstart);
    if (p < text.size() && !is_space(text[p]))
      throw parse_error(std::string("unexpected character '") + text[p] + "'",
                        p);
    std::string tok(text.substr(cstart, p - cstart));
    if (tok[0] == '+') tok.erase(0, 1);
    if (e >= coeffs.size()) {
      coeffs.resize(e + 1);
      seen.resize(e + 1);
    }
    if (seen[e])
      throw parse_error("duplicate exponent " + std::to_string(e), start);
    seen[e] = true;
    coeffs[e] = bigint_from_decimal(tok);
    pos = p;
  }
  return IntPoly(std::move(coeffs));  // empty input is the zero polynomial
}

IntPoly parse_poly(const PolySource& src) {
  switch (src.format) {
    case PolyFormat::expr: return parse_expression(src.payload);
    case PolyFormat::coeffs: return parse_coeffs(src.payload);
    case PolyFormat::sparse: return parse_sparse(src.payload);
  }
  throw internal_error("parse_poly: unknown format");
}

std::string format_expression(const IntPoly& p) { return to_string(p); }

std::string format_coeffs(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i > 0) out += ' ';
    out += p.coeffs()[i].get_str();
  }
  return out;
}

std::string format_sparse(const IntPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (sign_of(p.coeffs()[i]) == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i);
    out += ':';
    out += p.coeffs()[i].get_str();
  }
  return out;  // zero polynomial renders empty
}

std::string format_poly(const IntPoly& p, PolyFormat format) {
  switch (format) {
    case PolyFormat::expr: return format_expression(p);
    case PolyFormat::coeffs: return format_coeffs(p);
    case PolyFormat::sparse: return format_sparse(p);
  }
  throw internal_error("format_poly: unknown format");
}

std::string format_rational(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_results(const std::vector<RootInterval>& results,
                           OutputMode mode) {
  if (mode == OutputMode::human) {
    std::string out;
    for (const auto& iv : results) {
      const bool exact = iv.kind == IntervalKind::exact;
      out += exact ? '[' : '(';
      out += format_rational(iv.lo);
      out += ", ";
      out += format_rational(iv.hi);
      out += exact ? ']' : ')';
      out += '\n';
    }
    return out;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& iv : results) {
    nlohmann::ordered_json row;
    row["kind"] = iv.kind == IntervalKind::exact ? "exact" : "open";
    row["lo"] = {{"num", iv.lo.get_num().get_str()},
                 {"den", iv.lo.get_den().get_str()}};
    row["hi"] = {{"num", iv.hi.get_num().get_str()},
                 {"den", iv.hi.get_den().get_str()}};
    arr.push_back(std::move(row));
  }
  return arr.dump(2);
}

std::vector<RootInterval> parse_results_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!doc.is_array()) throw parse_error("expected a JSON array", 0);
  std::vector<RootInterval> out;
  try {
    for (const auto& row : doc) {
      auto read_rational = [](const nlohmann::json& node) {
        return make_rational(
            bigint_from_decimal(node.at("num").get<std::string>()),
            bigint_from_decimal(node.at("den").get<std::string>()));
      };
      std::string kind = row.at("kind").get<std::string>();
      Rational lo = read_rational(row.at("lo"));
      Rational hi = read_rational(row.at("hi"));
      if (kind == "exact") {
        if (lo != hi)
          throw parse_error("exact interval with unequal endpoints", 0);
        out.push_back(RootInterval::exact_point(std::move(lo)));
      } else if (kind == "open") {
        if (lo >= hi)
          throw parse_error("open interval with lo >= hi", 0);
        out.push_back(RootInterval::open(std::move(lo), std::move(hi)));
      } else {
        throw parse_error("unknown interval kind '" + kind + "'", 0);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("malformed results JSON: ") + e.what(), 0);
  } catch (const domain_error& e) {
    throw parse_error(std::string("malformed results JSON: ") + e.what(), 0);
  } catch (const std::invalid_argument&) {
    throw parse_error("malformed results JSON: invalid integer", 0);
  }
  return out;
}

}  // namespace rri
