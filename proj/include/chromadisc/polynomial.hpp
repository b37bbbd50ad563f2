#ifndef CHROMADISC_POLYNOMIAL_HPP
#define CHROMADISC_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "chromadisc/bigint.hpp"

namespace chromadisc {

// Univariate polynomial in q with BigInt coefficients, stored dense and
// low-degree first.
class Polynomial {
public:
    Polynomial() = default;  // zero polynomial
    explicit Polynomial(std::vector<BigInt> coeffs);

    static Polynomial constant(BigInt c);
    // c * q^k
    static Polynomial monomial(int k, BigInt c = BigInt(1));

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    // Coefficient of q^i; zero beyond the degree.
    BigInt coefficient(int i) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    BigInt evaluate(const BigInt& x) const;

    // Human-readable form, e.g. "q^3 - 3*q^2 + 2*q".
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
    void trim();
};

}  // namespace chromadisc

#endif
