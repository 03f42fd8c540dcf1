#ifndef TAMECOUNT_FQPOLY_HPP
#define TAMECOUNT_FQPOLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tamecount/errors.hpp"

namespace tamecount {

/// F_p for a prime modulus p; elements are residues 0..p-1.
class PrimeField {
public:
    explicit PrimeField(long long p);

    long long p() const { return p_; }
    long long reduce(long long a) const { return (a % p_ + p_) % p_; }
    long long add(long long a, long long b) const { return (a + b) % p_; }
    long long sub(long long a, long long b) const { return (a - b + p_) % p_; }
    long long neg(long long a) const { return (p_ - a) % p_; }
    long long mul(long long a, long long b) const { return a * b % p_; }
    long long pow(long long a, long long e) const;
    long long inv(long long a) const;  // throws BadArguments on 0

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    long long p_;
};

/// Dense polynomial over F_p, ascending coefficients, no trailing zeros.
class FqPoly {
public:
    explicit FqPoly(PrimeField field) : field_(field) {}  // zero polynomial
    FqPoly(PrimeField field, std::vector<long long> coeffs);

    static FqPoly x(PrimeField field) { return {field, {0, 1}}; }
    static FqPoly constant(PrimeField field, long long c) { return {field, {c}}; }
    static FqPoly monomial(PrimeField field, long long degree, long long coeff = 1);

    const PrimeField& field() const { return field_; }
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i; zero outside the stored range.
    long long operator[](long long i) const {
        return i >= 0 && i < static_cast<long long>(coeffs_.size()) ? coeffs_[i] : 0;
    }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    bool is_monic_original() const {
        return is_monic() && degree() >= 1 && coeffs_[0] == 0;
    }

    long long eval(long long a) const;

    FqPoly& operator+=(const FqPoly& rhs);
    FqPoly& operator-=(const FqPoly& rhs);
    friend FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
    friend FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
    friend FqPoly operator*(const FqPoly& a, const FqPoly& b);
    FqPoly& operator*=(const FqPoly& rhs) { return *this = *this * rhs; }
    FqPoly pow(long long e) const;
    friend bool operator==(const FqPoly&, const FqPoly&) = default;

    /// Quotient and remainder; divisor must have an invertible leading
    /// coefficient (always true over a field for nonzero divisors).
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& divisor) const;

    /// "x^4+2*x^2+x" with coefficients reduced mod p; "0" for zero.
    std::string str() const;

private:
    void strip();
    PrimeField field_;
    std::vector<long long> coeffs_;
};

/// g(h): degrees multiply for nonconstant inputs.
FqPoly compose(const FqPoly& g, const FqPoly& h);

/// f^{[a]} = (x - f(a)) o f o (x + a); monic original in, monic original out.
FqPoly original_shift(const FqPoly& f, long long a);

/// Originalized Dickson polynomial T_d(x, z) = T*_d(x, z) - T*_d(0, z),
/// via the recurrence T*_d = x T*_{d-1} - z T*_{d-2}, T*_0 = 2, T*_1 = x.
FqPoly dickson(long long d, long long z, PrimeField field);

/// Non-originalized T*_d(x, z).
FqPoly dickson_star(long long d, long long z, PrimeField field);

/// x^k w^e where d = se + k with 1 <= k < e and deg w = s (for e >= 2);
/// for e = 1 returns w itself, which must be monic original of degree d.
FqPoly exp_component(long long d, long long e, const FqPoly& w);

}  // namespace tamecount

#endif
