/*
   Copyright 2026 the liecoh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LIECOH_RATIONAL_HPP
#define LIECOH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace liecoh {

/* Exact scalars. Rat is always stored in lowest terms with a positive
 * denominator (cpp_rational keeps that canonical form), so equality is
 * plain equality and there is no rounding anywhere in the library. */
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

Int ipow(Int base, unsigned exp);

/* p-adic valuation of a nonzero integer; throws on zero. */
int valuation(const Int& n, const Int& p);

/* v_p extended to nonzero rationals: v(num) - v(den). */
int valuation(const Rat& q, const Int& p);

Int mod_reduce(const Int& a, const Int& m);   // representative in [0, m)
Int mod_inverse(const Int& a, const Int& m);  // throws if gcd(a, m) != 1

/* Serialization: "num/den", the "/den" omitted when den == 1. */
std::string rat_str(const Rat& q);
Rat rat_parse(const std::string& s);

}  // namespace liecoh

#endif
