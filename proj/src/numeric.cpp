#include "lgm/numeric.hpp"

#include <boost/multiprecision/gmp.hpp>

#include "lgm/errors.hpp"

namespace lgm {

Rat make_rat(Int num, Int den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rat q;
  mpq_set_num(q.backend().data(), num.backend().data());
  mpq_set_den(q.backend().data(), den.backend().data());
  mpq_canonicalize(q.backend().data());
  return q;
}

Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }

Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const Rat& q) { return rat_den(q) == 1; }

Int rat_floor(const Rat& q) {
  Int n = rat_num(q), d = rat_den(q);
  Int quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) --quot;
  return quot;
}

Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

Int factorial(long long n) {
  if (n < 0) throw InvalidInput("factorial of a negative number");
  Int out;
  mpz_fac_ui(out.backend().data(), static_cast<unsigned long>(n));
  return out;
}

std::string to_string(const Int& z) { return z.str(); }

std::string to_string(const Rat& q) {
  if (is_integer(q)) return rat_num(q).str();
  return rat_num(q).str() + "/" + rat_den(q).str();
}

namespace {

bool valid_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  for (size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!valid_int_token(num) || !valid_int_token(den))
    throw InvalidInput("malformed rational: '" + text + "'");
  return make_rat(Int(num), Int(den));
}

long long parse_ll(const std::string& text) {
  if (!valid_int_token(text))
    throw InvalidInput("malformed integer: '" + text + "'");
  try {
    return std::stoll(text);
  } catch (const std::exception&) {
    throw InvalidInput("integer out of range: '" + text + "'");
  }
}

}  // namespace lgm
