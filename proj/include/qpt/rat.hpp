#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace qpt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Integer square root; empty if n is not a perfect square.
std::optional<Int> exact_sqrt(const Int& n);

inline bool is_square(const Int& n) { return exact_sqrt(n).has_value(); }
bool is_square(const Rat& r);

// Squarefree part of a nonzero integer (sign preserved).
Int squarefree_part(Int n);

Int int_pow(Int base, unsigned exp);
long long p_valuation(Int& n, const Int& p);  // divides n by p in place

// (a/p) for odd prime p, a coprime to p: +1 or -1.
int legendre(Int a, const Int& p);

std::string to_string(const Rat& r);

}  // namespace qpt
