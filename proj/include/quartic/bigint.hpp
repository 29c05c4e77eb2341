/*
   Copyright 2026 The quartic-lab Authors

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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quartic {

/// Signed arbitrary-precision integer on 32-bit limbs (little endian).
/// Sized for this project's needs: coefficients a few thousand bits at most,
/// so schoolbook multiplication and shift-subtract division are plenty.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);
    static BigInt from_string(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division (C semantics): quotient rounds toward zero,
    /// remainder has the sign of the dividend.
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }
    static int cmp(const BigInt& a, const BigInt& b);

    BigInt shifted_left(size_t bits) const;
    BigInt shifted_right(size_t bits) const;
    size_t bit_length() const;
    bool bit(size_t i) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);
    static BigInt pow(const BigInt& base, uint64_t exp);

    bool fits_int64() const;
    int64_t to_int64() const;   // valid only when fits_int64()
    double to_double() const;
    std::string to_string() const;

private:
    // No trailing zero limbs; canonical zero is the empty vector with
    // negative_ == false.
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static BigInt add_mag(const BigInt& a, const BigInt& b);
    static BigInt sub_mag(const BigInt& a, const BigInt& b);  // requires |a| >= |b|
    static void divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
};

}  // namespace quartic
