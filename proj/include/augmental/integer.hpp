#ifndef AUGMENTAL_INTEGER_HPP
#define AUGMENTAL_INTEGER_HPP

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace augmental {

/**
 * Exact signed integer of unbounded size.
 *
 * Values that fit in a signed 64-bit word are kept inline; anything larger
 * spills into a little-endian base-2^32 magnitude vector.  All arithmetic is
 * exact; overflow of the inline path promotes silently.
 */
class Integer {
public:
    Integer() = default;
    Integer(long long v) : small_(v) {}
    Integer(int v) : small_(v) {}

    bool is_small() const { return mag_.empty(); }
    bool is_zero() const { return is_small() ? small_ == 0 : false; }
    bool is_negative() const { return is_small() ? small_ < 0 : sign_ < 0; }
    bool is_one() const { return is_small() && small_ == 1; }

    // Only valid when the value fits; callers check fits_longlong() first.
    bool fits_longlong() const { return is_small(); }
    long long to_longlong() const {
        if (!is_small()) throw std::overflow_error("Integer: value exceeds long long");
        return small_;
    }

    friend Integer operator-(const Integer& a) {
        if (a.is_small()) {
            if (a.small_ == std::numeric_limits<long long>::min()) {
                Integer r = a.to_big();
                r.sign_ = -r.sign_;
                return r;
            }
            return Integer(-a.small_);
        }
        Integer r = a;
        r.sign_ = -r.sign_;
        return r;
    }

    friend Integer operator+(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
        }
        return add_big(a.to_big(), b.to_big());
    }
    friend Integer operator-(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
        }
        Integer nb = -b;
        return add_big(a.to_big(), nb.to_big());
    }
    friend Integer operator*(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small()) {
            long long r;
            if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
        }
        return mul_big(a.to_big(), b.to_big());
    }

    Integer& operator+=(const Integer& o) { *this = *this + o; return *this; }
    Integer& operator-=(const Integer& o) { *this = *this - o; return *this; }
    Integer& operator*=(const Integer& o) { *this = *this * o; return *this; }

    // Truncated division: quotient rounds toward zero, remainder has the
    // sign of the dividend (C semantics).
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
        if (b.is_zero()) throw std::domain_error("Integer: division by zero");
        if (a.is_small() && b.is_small()) {
            if (!(a.small_ == std::numeric_limits<long long>::min() && b.small_ == -1)) {
                q = Integer(a.small_ / b.small_);
                r = Integer(a.small_ % b.small_);
                return;
            }
        }
        divmod_big(a.to_big(), b.to_big(), q, r);
    }

    friend Integer operator/(const Integer& a, const Integer& b) {
        Integer q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend Integer operator%(const Integer& a, const Integer& b) {
        Integer q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const Integer& a, const Integer& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Integer& a, const Integer& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Integer& a, const Integer& b)  { return cmp(a, b) < 0; }
    friend bool operator>(const Integer& a, const Integer& b)  { return cmp(a, b) > 0; }
    friend bool operator<=(const Integer& a, const Integer& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const Integer& a, const Integer& b) { return cmp(a, b) >= 0; }

    friend Integer abs(const Integer& a) { return a.is_negative() ? -a : a; }

    friend Integer gcd(Integer a, Integer b) {
        if (a.is_small() && b.is_small() &&
            a.small_ != std::numeric_limits<long long>::min() &&
            b.small_ != std::numeric_limits<long long>::min()) {
            return Integer((long long)std::gcd(a.small_ < 0 ? -a.small_ : a.small_,
                                               b.small_ < 0 ? -b.small_ : b.small_));
        }
        a = abs(a);
        b = abs(b);
        while (!b.is_zero()) {
            Integer q, r;
            divmod(a, b, q, r);
            a = b;
            b = r;
        }
        return a;
    }

    friend Integer lcm(const Integer& a, const Integer& b) {
        if (a.is_zero() || b.is_zero()) return Integer(0);
        Integer g = gcd(a, b);
        return abs(a / g * b);
    }

    // -1, 0, +1 by value
    int signum() const {
        if (is_small()) return small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
        return sign_;
    }

    // compare by absolute value
    static int cmp_abs(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small()) {
            unsigned long long ua = a.small_ < 0 ? 0ULL - (unsigned long long)a.small_
                                                 : (unsigned long long)a.small_;
            unsigned long long ub = b.small_ < 0 ? 0ULL - (unsigned long long)b.small_
                                                 : (unsigned long long)b.small_;
            return ua < ub ? -1 : (ua > ub ? 1 : 0);
        }
        return cmp_mag(a.to_big().mag_, b.to_big().mag_);
    }

    std::string to_string() const {
        if (is_small()) return std::to_string(small_);
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = (std::uint32_t)(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk = std::string(9 - chunk.size(), '0') + chunk;
            digits = chunk + digits;
        }
        if (digits.empty()) digits = "0";
        return (sign_ < 0 ? "-" : "") + digits;
    }

private:
    // Small form: mag_ empty, value in small_.  Big form: sign_ in {-1,+1},
    // magnitude in mag_ (little-endian, no leading zero limbs).
    long long small_ = 0;
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    Integer to_big() const {
        if (!is_small()) return *this;
        Integer r;
        unsigned long long u = small_ < 0 ? 0ULL - (unsigned long long)small_
                                          : (unsigned long long)small_;
        r.sign_ = small_ < 0 ? -1 : (small_ > 0 ? 1 : 0);
        if (u) r.mag_.push_back((std::uint32_t)(u & 0xffffffffULL));
        if (u >> 32) r.mag_.push_back((std::uint32_t)(u >> 32));
        r.small_ = 0;
        if (r.mag_.empty()) return Integer(0);
        return r;
    }

    // collapse back to the inline form when the value fits
    void normalize() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) {
            small_ = 0;
            sign_ = 0;
            return;
        }
        if (mag_.size() <= 2) {
            unsigned long long u = mag_[0];
            if (mag_.size() == 2) u |= (unsigned long long)mag_[1] << 32;
            if (sign_ > 0 && u <= (unsigned long long)std::numeric_limits<long long>::max()) {
                small_ = (long long)u;
                mag_.clear();
                sign_ = 0;
            } else if (sign_ < 0 &&
                       u <= (unsigned long long)std::numeric_limits<long long>::max() + 1ULL) {
                small_ = (long long)(0ULL - u);
                mag_.clear();
                sign_ = 0;
            }
        }
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r[i] = (std::uint32_t)(s & 0xffffffffULL);
            carry = s >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = (std::int64_t)r[i] - borrow - (i < b.size() ? (std::int64_t)b[i] : 0);
            if (cur < 0) {
                cur += 1LL << 32;
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = (std::uint32_t)cur;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static Integer add_big(const Integer& a, const Integer& b) {
        if (a.sign_ == 0) return from_parts(b.sign_, b.mag_);
        if (b.sign_ == 0) return from_parts(a.sign_, a.mag_);
        Integer r;
        if (a.sign_ == b.sign_) {
            r.sign_ = a.sign_;
            r.mag_ = add_mag(a.mag_, b.mag_);
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return Integer(0);
            if (c > 0) {
                r.sign_ = a.sign_;
                r.mag_ = sub_mag(a.mag_, b.mag_);
            } else {
                r.sign_ = b.sign_;
                r.mag_ = sub_mag(b.mag_, a.mag_);
            }
        }
        r.normalize();
        return r;
    }

    static Integer mul_big(const Integer& a, const Integer& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return Integer(0);
        Integer r;
        r.sign_ = a.sign_ * b.sign_;
        r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
        for (std::size_t i = 0; i < a.mag_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.mag_.size(); ++j) {
                std::uint64_t cur = (std::uint64_t)a.mag_[i] * b.mag_[j] + r.mag_[i + j] + carry;
                r.mag_[i + j] = (std::uint32_t)(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            std::size_t k = i + b.mag_.size();
            while (carry) {
                std::uint64_t cur = r.mag_[k] + carry;
                r.mag_[k] = (std::uint32_t)(cur & 0xffffffffULL);
                carry = cur >> 32;
                ++k;
            }
        }
        r.normalize();
        return r;
    }

    // binary long division on magnitudes
    static void divmod_big(const Integer& a, const Integer& b, Integer& q, Integer& r) {
        if (b.sign_ == 0) throw std::domain_error("Integer: division by zero");
        if (a.sign_ == 0) {
            q = Integer(0);
            r = Integer(0);
            return;
        }
        if (cmp_mag(a.mag_, b.mag_) < 0) {
            q = Integer(0);
            r = from_parts(a.sign_, a.mag_);
            return;
        }
        std::size_t abits = (a.mag_.size() - 1) * 32 + bit_width32(a.mag_.back());
        std::vector<std::uint32_t> qm((a.mag_.size()), 0), rm;
        for (std::size_t i = abits; i-- > 0;) {
            // rm = rm*2 + bit i of |a|
            std::uint32_t carry = (a.mag_[i / 32] >> (i % 32)) & 1u;
            for (std::size_t k = 0; k < rm.size(); ++k) {
                std::uint32_t hi = rm[k] >> 31;
                rm[k] = (rm[k] << 1) | carry;
                carry = hi;
            }
            if (carry) rm.push_back(carry);
            if (cmp_mag(rm, b.mag_) >= 0) {
                rm = sub_mag(rm, b.mag_);
                qm[i / 32] |= 1u << (i % 32);
            }
        }
        q = from_parts(a.sign_ * b.sign_, qm);
        r = from_parts(a.sign_, rm);
    }

    static std::size_t bit_width32(std::uint32_t v) {
        std::size_t w = 0;
        while (v) {
            ++w;
            v >>= 1;
        }
        return w;
    }

    static Integer from_parts(int sign, std::vector<std::uint32_t> mag) {
        Integer r;
        r.mag_ = std::move(mag);
        while (!r.mag_.empty() && r.mag_.back() == 0) r.mag_.pop_back();
        r.sign_ = r.mag_.empty() ? 0 : sign;
        r.normalize();
        return r;
    }

    static int cmp(const Integer& a, const Integer& b) {
        if (a.is_small() && b.is_small())
            return a.small_ < b.small_ ? -1 : (a.small_ > b.small_ ? 1 : 0);
        Integer A = a.to_big(), B = b.to_big();
        if (A.sign_ != B.sign_) return A.sign_ < B.sign_ ? -1 : 1;
        int c = cmp_mag(A.mag_, B.mag_);
        return A.sign_ >= 0 ? c : -c;
    }
};

}  // namespace augmental

#endif
