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

#include "fsig/rational.hpp"

namespace fsig {

std::string rational_to_string(const BigRational& q) {
    BigInt n = rational_num(q);
    BigInt d = rational_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string rational_to_decimal(const BigRational& q, unsigned digits) {
    BigInt n = rational_num(q);
    BigInt d = rational_den(q);
    bool negative = n < 0;
    if (negative) n = -n;
    BigInt integral = n / d;
    BigInt rem = n % d;
    std::string out = (negative ? "-" : "") + integral.str();
    if (rem == 0) return out;
    out += ".";
    for (unsigned i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        out += BigInt(rem / d).str();
        rem %= d;
    }
    return out;
}

}  // namespace fsig
