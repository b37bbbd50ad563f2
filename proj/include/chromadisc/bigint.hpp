#ifndef CHROMADISC_BIGINT_HPP
#define CHROMADISC_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace chromadisc {

// Signed arbitrary-precision integer, sign-magnitude with base 2^32 limbs.
// Supports exactly what exact chromatic-polynomial arithmetic needs:
// add, subtract, multiply, negate, compare, decimal conversion.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t value);  // NOLINT(google-explicit-constructor)
    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
    BigInt abs() const;
    BigInt operator-() const;

    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt& operator+=(const BigInt& rhs) { return *this = *this + rhs; }
    BigInt& operator-=(const BigInt& rhs) { return *this = *this - rhs; }
    BigInt& operator*=(const BigInt& rhs) { return *this = *this * rhs; }

    bool operator==(const BigInt& rhs) const;
    bool operator!=(const BigInt& rhs) const { return !(*this == rhs); }
    bool operator<(const BigInt& rhs) const;
    bool operator>(const BigInt& rhs) const { return rhs < *this; }
    bool operator<=(const BigInt& rhs) const { return !(rhs < *this); }
    bool operator>=(const BigInt& rhs) const { return !(*this < rhs); }

    std::string to_string() const;

    // Value as int64 if it fits, used by callers that know their range.
    bool fits_int64() const;
    std::int64_t to_int64() const;

private:
    // limbs_[0] is least significant; no trailing zero limbs; zero = empty.
    std::vector<std::uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace chromadisc

#endif
