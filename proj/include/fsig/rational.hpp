/*
   Copyright 2026 The fsig authors

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

#ifndef FSIG_RATIONAL_HPP
#define FSIG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fsig {

// Every signature value is an exact rational; decimal renderings are
// display-only.  boost cpp_int/cpp_rational keep the arithmetic exact
// without external dependencies.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(BigInt base, unsigned exp) {
    BigInt r = 1;
    while (exp > 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline BigInt big_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline BigInt rational_num(const BigRational& q) {
    return boost::multiprecision::numerator(q);
}

inline BigInt rational_den(const BigRational& q) {
    return boost::multiprecision::denominator(q);
}

inline BigRational rational_abs(const BigRational& q) { return q < 0 ? BigRational(-q) : q; }

std::string rational_to_string(const BigRational& q);

/// Decimal rendering with a fixed number of fractional digits, for the
/// CSV mirror and the table printer.  Exact values stay in num/den form.
std::string rational_to_decimal(const BigRational& q, unsigned digits = 9);

}  // namespace fsig

#endif
