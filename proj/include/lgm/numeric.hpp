#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lgm {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Every rational in this codebase is built through make_rat. The mpq_rational
// string constructor does not canonicalize ("3/6" stays 3/6 when printed) and
// the built-in-int pair constructor mishandles negative values, so both are
// banned outside this function.
Rat make_rat(Int num, Int den);

inline Rat rat_int(const Int& z) { return Rat(z); }
inline Rat rat_ll(long long v) { return Rat(Int(v)); }

Int rat_num(const Rat& q);
Int rat_den(const Rat& q);

bool is_integer(const Rat& q);

// Exact floor(q) and ceil(q).
Int rat_floor(const Rat& q);
Int rat_ceil(const Rat& q);

Int factorial(long long n);

std::string to_string(const Int& z);
std::string to_string(const Rat& q);  // "p/q", or "p" when q == 1

// Parses "p" or "p/q", optional leading '-'. Throws InvalidInput on anything else.
Rat parse_rat(const std::string& text);
long long parse_ll(const std::string& text);

}  // namespace lgm
