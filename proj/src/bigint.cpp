#include "chromadisc/bigint.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace chromadisc {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t value) {
    negative_ = value < 0;
    // Avoid overflow on INT64_MIN.
    std::uint64_t mag = negative_ ? ~static_cast<std::uint64_t>(value) + 1
                                  : static_cast<std::uint64_t>(value);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
        mag >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

BigInt BigInt::from_string(const std::string& decimal) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < decimal.size() && (decimal[pos] == '-' || decimal[pos] == '+')) {
        neg = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size()) throw std::invalid_argument("empty integer literal");
    BigInt result;
    const BigInt ten(10);
    for (; pos < decimal.size(); ++pos) {
        char c = decimal[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("bad digit in integer literal");
        result = result * ten + BigInt(c - '0');
    }
    if (neg) result = -result;
    return result;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < a.size() || i < b.size() || carry; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    return out;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.limbs_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    BigInt r;
    if (negative_ == rhs.negative_) {
        r.limbs_ = add_magnitude(limbs_, rhs.limbs_);
        r.negative_ = negative_;
    } else {
        int cmp = compare_magnitude(*this, rhs);
        if (cmp == 0) return BigInt();
        const BigInt& big = cmp > 0 ? *this : rhs;
        const BigInt& small = cmp > 0 ? rhs : *this;
        r.limbs_ = sub_magnitude(big.limbs_, small.limbs_);
        r.negative_ = big.negative_;
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + rhs.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = negative_ != rhs.negative_;
    r.trim();
    return r;
}

bool BigInt::operator==(const BigInt& rhs) const {
    return negative_ == rhs.negative_ && limbs_ == rhs.limbs_;
}

bool BigInt::operator<(const BigInt& rhs) const {
    if (negative_ != rhs.negative_) return negative_;
    int cmp = compare_magnitude(*this, rhs);
    return negative_ ? cmp > 0 : cmp < 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    // Repeated division of the magnitude by 10^9.
    std::vector<std::uint32_t> mag = limbs_;
    std::vector<std::uint32_t> chunks;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        chunks.push_back(static_cast<std::uint32_t>(rem));
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
    }
    std::string out = negative_ ? "-" : "";
    out += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    return negative_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt does not fit in int64: " + to_string());
    std::uint64_t mag = 0;
    if (limbs_.size() > 1) mag = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) mag |= limbs_[0];
    if (negative_ && mag == (1ull << 63)) return std::numeric_limits<std::int64_t>::min();
    return negative_ ? -static_cast<std::int64_t>(mag) : static_cast<std::int64_t>(mag);
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace chromadisc
