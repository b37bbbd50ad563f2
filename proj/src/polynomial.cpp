#include "chromadisc/polynomial.hpp"

namespace chromadisc {

Polynomial::Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(BigInt c) { return monomial(0, std::move(c)); }

Polynomial Polynomial::monomial(int k, BigInt c) {
    Polynomial p;
    if (!c.is_zero()) {
        p.coeffs_.assign(k + 1, BigInt(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

BigInt Polynomial::coefficient(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return BigInt(0);
    return coeffs_[i];
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial out;
    out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) out.coeffs_[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) out.coeffs_[i] += rhs.coeffs_[i];
    }
    out.trim();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial out;
    out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
        if (i < coeffs_.size()) out.coeffs_[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) out.coeffs_[i] -= rhs.coeffs_[i];
    }
    out.trim();
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (is_zero() || rhs.is_zero()) return Polynomial();
    Polynomial out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    out.trim();
    return out;
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

std::string Polynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const BigInt& c = coeffs_[i];
        if (c.is_zero()) continue;
        BigInt mag = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag == BigInt(1);
        if (i == 0) {
            out += mag.to_string();
        } else {
            if (!unit) out += mag.to_string() + "*";
            out += i == 1 ? "q" : "q^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace chromadisc
