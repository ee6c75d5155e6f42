#include "m22/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace m22 {

namespace {

using Limbs = std::vector<uint32_t>;

void strip(Limbs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int compare_magnitude(const Limbs& a, const Limbs& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Limbs add_magnitude(const Limbs& a, const Limbs& b) {
    Limbs out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<uint32_t>(sum));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

// requires |a| >= |b|
Limbs sub_magnitude(const Limbs& a, const Limbs& b) {
    Limbs out;
    out.reserve(a.size());
    uint64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t sub = borrow + (i < b.size() ? b[i] : 0);
        uint64_t ai = a[i];
        if (ai < sub) {
            out.push_back(static_cast<uint32_t>(ai + (1ull << 32) - sub));
            borrow = 1;
        } else {
            out.push_back(static_cast<uint32_t>(ai - sub));
            borrow = 0;
        }
    }
    strip(out);
    return out;
}

Limbs mul_magnitude(const Limbs& a, const Limbs& b) {
    if (a.empty() || b.empty()) return {};
    Limbs out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        out[i + b.size()] = static_cast<uint32_t>(carry);
    }
    strip(out);
    return out;
}

// Knuth algorithm D, base 2^32.
void divmod_magnitude(const Limbs& a, const Limbs& b, Limbs& quot, Limbs& rem) {
    quot.clear();
    rem.clear();
    if (compare_magnitude(a, b) < 0) {
        rem = a;
        return;
    }
    if (b.size() == 1) {
        uint64_t d = b[0], r = 0;
        quot.assign(a.size(), 0);
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (r << 32) | a[i];
            quot[i] = static_cast<uint32_t>(cur / d);
            r = cur % d;
        }
        strip(quot);
        if (r) rem.push_back(static_cast<uint32_t>(r));
        return;
    }
    const int shift = __builtin_clz(b.back());
    const size_t n = b.size();
    Limbs vn(n), un(a.size() + 1, 0);
    for (size_t i = n; i-- > 0;)
        vn[i] = (b[i] << shift) |
                (shift && i > 0 ? static_cast<uint32_t>(b[i - 1] >> (32 - shift)) : 0);
    for (size_t i = a.size(); i-- > 0;)
        un[i] = (a[i] << shift) |
                (shift && i > 0 ? static_cast<uint32_t>(a[i - 1] >> (32 - shift)) : 0);
    if (shift) un[a.size()] = static_cast<uint32_t>(a.back() >> (32 - shift));
    const size_t m = a.size() - n;
    quot.assign(m + 1, 0);
    for (size_t j = m + 1; j-- > 0;) {
        uint64_t top = (static_cast<uint64_t>(un[j + n]) << 32) | un[j + n - 1];
        uint64_t qhat = top / vn[n - 1];
        uint64_t rhat = top % vn[n - 1];
        while (qhat >= (1ull << 32) ||
               qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
            --qhat;
            rhat += vn[n - 1];
            if (rhat >= (1ull << 32)) break;
        }
        // multiply and subtract
        uint64_t borrow = 0, carry = 0;
        for (size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * vn[i] + carry;
            carry = p >> 32;
            uint64_t sub = (p & 0xffffffffull) + borrow;
            uint64_t ui = un[i + j];
            if (ui < sub) {
                un[i + j] = static_cast<uint32_t>(ui + (1ull << 32) - sub);
                borrow = 1;
            } else {
                un[i + j] = static_cast<uint32_t>(ui - sub);
                borrow = 0;
            }
        }
        uint64_t sub = carry + borrow;
        bool negative = un[j + n] < sub;
        un[j + n] = static_cast<uint32_t>(negative ? un[j + n] + (1ull << 32) - sub
                                                   : un[j + n] - sub);
        if (negative) {
            // estimate was one too large; add the divisor back
            --qhat;
            uint64_t c = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(un[i + j]) + vn[i] + c;
                un[i + j] = static_cast<uint32_t>(s);
                c = s >> 32;
            }
            un[j + n] = static_cast<uint32_t>(un[j + n] + c);
        }
        quot[j] = static_cast<uint32_t>(qhat);
    }
    strip(quot);
    rem.assign(n, 0);
    for (size_t i = 0; i < n; ++i)
        rem[i] = (un[i] >> shift) |
                 (shift && i + 1 < n + 1 ? static_cast<uint64_t>(un[i + 1]) << (32 - shift)
                                         : 0);
    strip(rem);
}

}  // namespace

BigInt::BigInt(long long value) {
    negative_ = value < 0;
    unsigned long long mag =
        value < 0 ? ~static_cast<unsigned long long>(value) + 1ull : value;
    while (mag) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffull));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& decimal) {
    BigInt out;
    size_t i = 0;
    bool neg = false;
    if (i < decimal.size() && (decimal[i] == '-' || decimal[i] == '+')) {
        neg = decimal[i] == '-';
        ++i;
    }
    if (i == decimal.size()) throw std::invalid_argument("empty integer literal");
    for (; i < decimal.size(); ++i) {
        if (decimal[i] < '0' || decimal[i] > '9')
            throw std::invalid_argument("bad digit in integer literal");
        out = out * BigInt(10) + BigInt(decimal[i] - '0');
    }
    out.negative_ = neg && !out.is_zero();
    return out;
}

void BigInt::trim() {
    strip(limbs_);
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt out;
    if (negative_ == o.negative_) {
        out.limbs_ = add_magnitude(limbs_, o.limbs_);
        out.negative_ = negative_;
    } else if (compare_magnitude(limbs_, o.limbs_) >= 0) {
        out.limbs_ = sub_magnitude(limbs_, o.limbs_);
        out.negative_ = negative_;
    } else {
        out.limbs_ = sub_magnitude(o.limbs_, limbs_);
        out.negative_ = o.negative_;
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt out;
    out.limbs_ = mul_magnitude(limbs_, o.limbs_);
    out.negative_ = !out.limbs_.empty() && negative_ != o.negative_;
    return out;
}

BigInt BigInt::operator/(const BigInt& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Limbs q, r;
    divmod_magnitude(limbs_, o.limbs_, q, r);
    BigInt out;
    out.limbs_ = std::move(q);
    out.negative_ = !out.limbs_.empty() && negative_ != o.negative_;
    return out;
}

BigInt BigInt::operator%(const BigInt& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    Limbs q, r;
    divmod_magnitude(limbs_, o.limbs_, q, r);
    BigInt out;
    out.limbs_ = std::move(r);
    out.negative_ = !out.limbs_.empty() && negative_;
    return out;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = compare_magnitude(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    Limbs mag = limbs_;
    std::string digits;
    const Limbs billion{1000000000u};
    while (!mag.empty()) {
        Limbs q, r;
        divmod_magnitude(mag, billion, q, r);
        uint32_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        mag = std::move(q);
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt(0);
    return (a * b).abs() / gcd(a, b);
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (!g.is_zero() && g != BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (num_.is_zero()) den_ = BigInt(1);
}

Rational Rational::operator-() const { return Rational(-num_, den_); }

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace m22
