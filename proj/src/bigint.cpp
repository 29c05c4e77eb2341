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

#include "quartic/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quartic {

BigInt::BigInt(int64_t v) {
    negative_ = v < 0;
    // Avoid overflow on INT64_MIN.
    uint64_t mag = negative_ ? ~static_cast<uint64_t>(v) + 1u : static_cast<uint64_t>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(std::string_view s) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
        r = r * BigInt(10) + BigInt(c - '0');
    }
    r.negative_ = neg && !r.is_zero();
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.negative_ != b.negative_) return a.negative_ ? -1 : 1;
    int m = cmp_mag(a, b);
    return a.negative_ ? -m : m;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.negative_ == b.negative_ && a.limbs_ == b.limbs_;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    const auto& x = a.limbs_;
    const auto& y = b.limbs_;
    size_t n = std::max(x.size(), y.size());
    r.limbs_.resize(n, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
        uint64_t s = carry;
        if (i < x.size()) s += x[i];
        if (i < y.size()) s += y[i];
        r.limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) r.limbs_.push_back(static_cast<uint32_t>(carry));
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(a.limbs_[i]) - borrow -
                    (i < b.limbs_.size() ? static_cast<int64_t>(b.limbs_[i]) : 0);
        if (d < 0) {
            d += (int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(d);
    }
    r.trim();
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.negative_ == b.negative_) {
        r = BigInt::add_mag(a, b);
        r.negative_ = a.negative_ && !r.is_zero();
        return r;
    }
    int m = BigInt::cmp_mag(a, b);
    if (m == 0) return BigInt();
    if (m > 0) {
        r = BigInt::sub_mag(a, b);
        r.negative_ = a.negative_ && !r.is_zero();
    } else {
        r = BigInt::sub_mag(b, a);
        r.negative_ = b.negative_ && !r.is_zero();
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a.limbs_[i];
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + ai * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

size_t BigInt::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

bool BigInt::bit(size_t i) const {
    size_t limb = i / 32;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 32)) & 1u;
}

BigInt BigInt::shifted_left(size_t bits) const {
    if (is_zero() || bits == 0) return *this;
    BigInt r;
    size_t limb_shift = bits / 32, bit_shift = bits % 32;
    r.limbs_.assign(limbs_.size() + limb_shift + 1, 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t v = static_cast<uint64_t>(limbs_[i]) << bit_shift;
        r.limbs_[i + limb_shift] |= static_cast<uint32_t>(v & 0xffffffffu);
        r.limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
    }
    r.negative_ = negative_;
    r.trim();
    return r;
}

BigInt BigInt::shifted_right(size_t bits) const {
    size_t limb_shift = bits / 32, bit_shift = bits % 32;
    if (limb_shift >= limbs_.size()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() - limb_shift, 0);
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size())
            v |= static_cast<uint64_t>(limbs_[i + limb_shift + 1]) << (32 - bit_shift);
        r.limbs_[i] = static_cast<uint32_t>(v);
    }
    r.negative_ = negative_;
    r.trim();
    return r;
}

// Magnitude division. Fast path divides by a single limb; the general
// path is plain shift-subtract long division, adequate for the sizes
// this project produces.
void BigInt::divmod_mag(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q = BigInt();
        r = a;
        r.negative_ = false;
        return;
    }
    if (b.limbs_.size() == 1) {
        uint64_t d = b.limbs_[0];
        BigInt quo;
        quo.limbs_.assign(a.limbs_.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.limbs_.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a.limbs_[i];
            quo.limbs_[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        quo.trim();
        q = quo;
        r = BigInt(static_cast<int64_t>(rem));
        return;
    }
    size_t shift = a.bit_length() - b.bit_length();
    BigInt rem = a.abs();
    BigInt div = b.abs().shifted_left(shift);
    BigInt quo;
    quo.limbs_.assign((shift + 32) / 32, 0);
    for (size_t i = shift + 1; i-- > 0;) {
        if (cmp_mag(rem, div) >= 0) {
            rem = sub_mag(rem, div);
            quo.limbs_[i / 32] |= (1u << (i % 32));
        }
        div = div.shifted_right(1);
    }
    quo.trim();
    q = quo;
    r = rem;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    divmod_mag(a, b, q, r);
    q.negative_ = (a.negative_ != b.negative_) && !q.is_zero();
    r.negative_ = a.negative_ && !r.is_zero();
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    if (x.fits_int64() && y.fits_int64()) {
        uint64_t u = static_cast<uint64_t>(x.is_zero() ? 0 : x.to_int64());
        uint64_t v = static_cast<uint64_t>(y.is_zero() ? 0 : y.to_int64());
        while (v) {
            uint64_t t = u % v;
            u = v;
            v = t;
        }
        return BigInt(static_cast<int64_t>(u));
    }
    while (!y.is_zero()) {
        BigInt t = x % y;
        x = y;
        y = t;
    }
    return x;
}

BigInt BigInt::pow(const BigInt& base, uint64_t exp) {
    BigInt r(1), b = base;
    while (exp) {
        if (exp & 1) r *= b;
        exp >>= 1;
        if (exp) b *= b;
    }
    return r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() < 2) return true;
    if (limbs_.size() > 2) return false;
    uint64_t mag = (static_cast<uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (uint64_t(1) << 63) : mag < (uint64_t(1) << 63);
}

int64_t BigInt::to_int64() const {
    uint64_t mag = 0;
    if (limbs_.size() > 0) mag |= limbs_[0];
    if (limbs_.size() > 1) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<int64_t>(mag) : static_cast<int64_t>(mag);
}

double BigInt::to_double() const {
    if (is_zero()) return 0.0;
    size_t bl = bit_length();
    // Top 64 bits plus a sticky bit are enough for correct double rounding
    // to well under an ulp.
    if (bl <= 64) {
        uint64_t mag = 0;
        if (limbs_.size() > 0) mag |= limbs_[0];
        if (limbs_.size() > 1) mag |= static_cast<uint64_t>(limbs_[1]) << 32;
        double d = static_cast<double>(mag);
        return negative_ ? -d : d;
    }
    BigInt top = shifted_right(bl - 64);
    uint64_t mag = (static_cast<uint64_t>(top.limbs_[1]) << 32) | top.limbs_[0];
    double d = std::ldexp(static_cast<double>(mag), static_cast<int>(bl) - 64);
    return negative_ ? -d : d;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigInt t = abs();
    const BigInt chunk(1000000000);
    std::vector<uint32_t> groups;
    while (!t.is_zero()) {
        BigInt q, r;
        divmod(t, chunk, q, r);
        groups.push_back(r.is_zero() ? 0u : static_cast<uint32_t>(r.to_int64()));
        t = q;
    }
    out = std::to_string(groups.back());
    for (size_t i = groups.size() - 1; i-- > 0;) {
        std::string part = std::to_string(groups[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    if (negative_) out.insert(out.begin(), '-');
    return out;
}

}  // namespace quartic
