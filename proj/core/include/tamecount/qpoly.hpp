#ifndef TAMECOUNT_QPOLY_HPP
#define TAMECOUNT_QPOLY_HPP

#include <map>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tamecount {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse polynomial in the formal symbol q with big-integer coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(BigInt constant);  // NOLINT: implicit by design
    /// coeff * q^exponent
    static QPolynomial monomial(long long exponent, BigInt coeff = 1);
    /// Accepts the str() format, e.g. "2*q^62 - q^61 + 3".
    static QPolynomial parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    long long degree() const;  // degree of 0 is -1
    BigInt coeff(long long exponent) const;
    const std::map<long long, BigInt>& terms() const { return terms_; }

    BigInt eval(const BigInt& q) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    /// Descending exponents: "2*q^62 - q^61"; "0" for the zero polynomial.
    std::string str() const;
    /// JSON array of [exponent, coefficient-as-decimal-string] pairs,
    /// descending exponents.
    std::string json_str() const;

private:
    void strip();
    std::map<long long, BigInt> terms_;  // exponent -> nonzero coefficient
};

}  // namespace tamecount

#endif
