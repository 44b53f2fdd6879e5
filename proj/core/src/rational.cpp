#include "hbsum/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>

namespace hbsum {

namespace mp = boost::multiprecision;

Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) {
    throw DomainError("make_rational: zero denominator");
  }
  // the backend rejects negative denominators outright
  if (den < 0) {
    return Rational(Int(-num), Int(-den));
  }
  return Rational(num, den);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Int(num), Int(den));
}

Int gcd_int(const Int& a, const Int& b) {
  Int g = mp::gcd(a, b);
  return g < 0 ? Int(-g) : g;
}

Int gcd(const IntPair& p) { return gcd_int(p.a, p.b); }

std::pair<Int, Rational> floor_frac(const Rational& q) {
  const Int num = numerator(q);
  const Int den = denominator(q);
  Int fl = num / den;  // truncates toward zero
  if (fl * den != num && num < 0) {
    --fl;
  }
  return {fl, q - Rational(fl)};
}

int sgn(const Rational& q) {
  if (q > 0) return 1;
  if (q < 0) return -1;
  return 0;
}

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

int delta_int(const Rational& q) { return is_integer(q) ? 1 : 0; }

int neg_one_pow(const Rational& q) {
  if (!is_integer(q)) {
    throw DomainError("neg_one_pow: non-integer exponent " + to_string(q) +
                      " (missing delta guard)");
  }
  return numerator(q) % 2 != 0 ? -1 : 1;
}

Rational pow_nonneg(const Rational& base, std::int64_t e) {
  if (e < 0) {
    throw DomainError("pow_nonneg: negative exponent");
  }
  return Rational(pow_nonneg(numerator(base), e), pow_nonneg(denominator(base), e));
}

Int pow_nonneg(const Int& base, std::int64_t e) {
  if (e < 0) {
    throw DomainError("pow_nonneg: negative exponent");
  }
  return mp::pow(base, static_cast<unsigned>(e));
}

Int factorial(std::int64_t n) {
  if (n < 0) {
    throw DomainError("factorial: negative argument");
  }
  Int r = 1;
  for (std::int64_t k = 2; k <= n; ++k) {
    r *= k;
  }
  return r;
}

Int binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

namespace {

Int parse_int(std::string_view text, bool allow_sign) {
  if (text.empty()) {
    throw ParseError("empty integer");
  }
  std::size_t i = 0;
  if (allow_sign && (text[0] == '+' || text[0] == '-')) {
    i = 1;
  }
  if (i == text.size()) {
    throw ParseError("sign without digits");
  }
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) {
      throw ParseError("invalid character in integer: '" + std::string(text) + "'");
    }
  }
  if (text[0] == '+') text.remove_prefix(1);  // Int rejects a leading '+'
  return Int(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, true));
  }
  const Int num = parse_int(text.substr(0, slash), true);
  // the sign lives on the numerator, so the denominator is bare digits
  const Int den = parse_int(text.substr(slash + 1), false);
  return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

PartialFractionSplit partial_fraction_split(std::int64_t m, std::int64_t n,
                                            const Rational& x,
                                            const Rational& y) {
  if (m < 1 || n < 1) {
    throw DomainError("partial_fraction_split: orders must be positive");
  }
  if (x == y) {
    throw DomainError("partial_fraction_split: coincident poles x = y");
  }
  PartialFractionSplit out;
  out.pole_x.reserve(static_cast<std::size_t>(m));
  out.pole_y.reserve(static_cast<std::size_t>(n));
  const Rational xy = x - y;
  for (std::int64_t j = 1; j <= m; ++j) {
    Int c = binomial(m + n - j - 1, n - 1);
    if ((m - j) % 2 != 0) c = -c;
    out.pole_x.push_back(Rational(c) / pow_nonneg(xy, m + n - j));
  }
  const Rational yx = y - x;
  for (std::int64_t j = 1; j <= n; ++j) {
    Int c = binomial(m + n - j - 1, m - 1);
    if ((n - j) % 2 != 0) c = -c;
    out.pole_y.push_back(Rational(c) / pow_nonneg(yx, m + n - j));
  }
  return out;
}

}  // namespace hbsum
