#ifndef M22_BIGINT_HPP
#define M22_BIGINT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace m22 {

// Arbitrary-precision signed integer, sign + little-endian base 2^32
// magnitude. Covers what fraction-free elimination needs: ring ops, exact
// division, comparison, gcd.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT: implicit by design

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Exact or truncating division (quotient rounds toward zero).
    BigInt operator/(const BigInt& o) const;
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    BigInt abs() const;
    size_t limb_count() const { return limbs_.size(); }
    std::string to_string() const;

    friend BigInt gcd(BigInt a, BigInt b);

private:
    void trim();

    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // empty means zero
};

BigInt gcd(BigInt a, BigInt b);
BigInt lcm(const BigInt& a, const BigInt& b);

// Reduced fraction with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    BigInt num_, den_;
};

}  // namespace m22

#endif
