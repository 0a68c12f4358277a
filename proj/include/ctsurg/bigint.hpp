#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "ctsurg/errors.hpp"

namespace ctsurg {

// Arbitrary-precision signed integer, sign-magnitude with base 2^32 limbs.
// Linking matrices are tiny, but Smith normal form intermediates can outgrow
// machine words, so every exact-arithmetic path runs on this type.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // avoid UB on LLONG_MIN
        unsigned long long m = v < 0 ? ~static_cast<unsigned long long>(v) + 1ULL
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }

    BigInt(int v) : BigInt(static_cast<long long>(v)) {}

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    bool is_unit() const { return mag_.size() == 1 && mag_[0] == 1; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.sign_ = a.sign_;
            r.mag_ = add_mag(a.mag_, b.mag_);
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.sign_ = a.sign_;
                r.mag_ = sub_mag(a.mag_, b.mag_);
            } else {
                r.sign_ = b.sign_;
                r.mag_ = sub_mag(b.mag_, a.mag_);
            }
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend, |r| < |b|.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw Error("BigInt: division by zero");
        if (a.sign_ == 0) {
            q = BigInt();
            r = BigInt();
            return;
        }
        std::vector<std::uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = BigInt();
        r = BigInt();
        if (!qm.empty()) {
            q.sign_ = a.sign_ * b.sign_;
            q.mag_ = std::move(qm);
        }
        if (!rm.empty()) {
            r.sign_ = a.sign_;
            r.mag_ = std::move(rm);
        }
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }

    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }

    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
        int c = cmp_mag(a.mag_, b.mag_) * a.sign_;
        return c <=> 0;
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            // divide magnitude by 10^9, collecting 9 decimal digits at a time
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        if (sign_ < 0) digits.insert(0, 1, '-');
        return digits;
    }

    // Throws when the value does not fit; all CLI-facing numbers are small.
    long long to_long_long() const {
        if (mag_.size() > 2) throw Error("BigInt: value out of long long range");
        unsigned long long m = 0;
        for (std::size_t i = mag_.size(); i-- > 0;) m = (m << 32) | mag_[i];
        if (sign_ >= 0) {
            if (m > 0x7fffffffffffffffULL) throw Error("BigInt: value out of long long range");
            return static_cast<long long>(m);
        }
        if (m > 0x8000000000000000ULL) throw Error("BigInt: value out of long long range");
        return -static_cast<long long>(m - 1) - 1;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_; // little endian, no leading zero limbs

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r(big.size());
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < big.size(); ++i) {
            std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires a >= b
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size());
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (s < 0) {
                s += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            std::size_t k = i + b.size();
            while (carry) {
                std::uint64_t cur = r[k] + carry;
                r[k] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // shift-subtract long division on magnitudes; desk-scale operands
    static void divmod_mag(const std::vector<std::uint32_t>& a,
                           const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q,
                           std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t bit = a.size() * 32; bit-- > 0;) {
            // r = 2r + bit(a, i)
            std::uint32_t carry = 0;
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::uint32_t next = r[i] >> 31;
                r[i] = (r[i] << 1) | carry;
                carry = next;
            }
            if (carry) r.push_back(1);
            if ((a[bit / 32] >> (bit % 32)) & 1u) {
                if (r.empty())
                    r.push_back(1);
                else
                    r[0] |= 1u;
            }
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[bit / 32] |= 1u << (bit % 32);
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline std::string to_string(const BigInt& v) { return v.to_string(); }

} // namespace ctsurg
