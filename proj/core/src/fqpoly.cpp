#include "tamecount/fqpoly.hpp"

#include <numeric>
#include <sstream>

namespace tamecount {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(long long p) : p_(p) {
    if (!is_prime(p)) throw BadArguments("PrimeField: modulus must be prime");
}

long long PrimeField::pow(long long a, long long e) const {
    a = reduce(a);
    long long r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

long long PrimeField::inv(long long a) const {
    a = reduce(a);
    if (a == 0) throw BadArguments("PrimeField: division by zero");
    return pow(a, p_ - 2);
}

FqPoly::FqPoly(PrimeField field, std::vector<long long> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (long long& c : coeffs_) c = field_.reduce(c);
    strip();
}

FqPoly FqPoly::monomial(PrimeField field, long long degree, long long coeff) {
    if (degree < 0) throw BadArguments("FqPoly: negative degree");
    std::vector<long long> c(degree + 1, 0);
    c.back() = coeff;
    return {field, std::move(c)};
}

void FqPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long long FqPoly::eval(long long a) const {
    a = field_.reduce(a);
    long long r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        r = field_.add(field_.mul(r, a), *it);
    return r;
}

FqPoly& FqPoly::operator+=(const FqPoly& rhs) {
    if (field_ != rhs.field_) throw BadArguments("FqPoly: field mismatch");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
    strip();
    return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& rhs) {
    if (field_ != rhs.field_) throw BadArguments("FqPoly: field mismatch");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
    strip();
    return *this;
}

FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    if (a.field_ != b.field_) throw BadArguments("FqPoly: field mismatch");
    if (a.is_zero() || b.is_zero()) return FqPoly(a.field_);
    const long long p = a.field_.p();
    std::vector<long long> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    // delayed reduction: deg * p^2 stays far below 2^63 for the p in use
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    for (long long& c : prod) c %= p;
    return {a.field_, std::move(prod)};
}

FqPoly FqPoly::pow(long long e) const {
    FqPoly base = *this, r = FqPoly::constant(field_, 1);
    while (e > 0) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& divisor) const {
    if (field_ != divisor.field_) throw BadArguments("FqPoly: field mismatch");
    if (divisor.is_zero()) throw BadArguments("FqPoly: division by zero");
    FqPoly rem = *this;
    const long long dd = divisor.degree();
    const long long lead_inv = field_.inv(divisor.coeffs_.back());
    std::vector<long long> quot(
        std::max<long long>(0, degree() - dd + 1), 0);
    while (rem.degree() >= dd) {
        long long shift = rem.degree() - dd;
        long long c = field_.mul(rem.coeffs_.back(), lead_inv);
        quot[shift] = c;
        for (long long i = 0; i <= dd; ++i)
            rem.coeffs_[shift + i] =
                field_.sub(rem.coeffs_[shift + i], field_.mul(c, divisor.coeffs_[i]));
        rem.strip();
    }
    return {FqPoly(field_, std::move(quot)), std::move(rem)};
}

std::string FqPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long long i = degree(); i >= 0; --i) {
        long long c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << '+';
        first = false;
        if (c != 1 || i == 0) {
            out << c;
            if (i != 0) out << '*';
        }
        if (i != 0) {
            out << 'x';
            if (i != 1) out << '^' << i;
        }
    }
    return out.str();
}

FqPoly compose(const FqPoly& g, const FqPoly& h) {
    FqPoly r(g.field());
    for (auto it = g.coeffs().rbegin(); it != g.coeffs().rend(); ++it)
        r = r * h + FqPoly::constant(g.field(), *it);
    return r;
}

FqPoly original_shift(const FqPoly& f, long long a) {
    if (!f.is_monic_original()) throw NotMonicOriginal("original_shift: f must be monic original");
    const PrimeField& F = f.field();
    a = F.reduce(a);
    FqPoly xa(F, {a, 1});
    FqPoly shifted = compose(f, xa);
    return shifted - FqPoly::constant(F, f.eval(a));
}

FqPoly dickson_star(long long d, long long z, PrimeField field) {
    if (d < 0) throw BadArguments("dickson: degree must be >= 0");
    FqPoly prev = FqPoly::constant(field, 2);  // T*_0
    if (d == 0) return prev;
    FqPoly cur = FqPoly::x(field);  // T*_1
    FqPoly zc = FqPoly::constant(field, z);
    for (long long i = 2; i <= d; ++i) {
        FqPoly next = FqPoly::x(field) * cur - zc * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FqPoly dickson(long long d, long long z, PrimeField field) {
    if (d < 1) throw BadArguments("dickson: degree must be >= 1");
    FqPoly star = dickson_star(d, z, field);
    return star - FqPoly::constant(field, star.eval(0));
}

FqPoly exp_component(long long d, long long e, const FqPoly& w) {
    if (d < 2 || e < 1 || std::gcd(d, e) != 1)
        throw BadArguments("exp_component: need coprime d >= 2, e >= 1");
    if (e == 1) {
        if (!w.is_monic_original() || w.degree() != d)
            throw BadDegree("exp_component: e = 1 requires w monic original of degree d");
        return w;
    }
    const long long s = d / e, k = d - s * e;  // 1 <= k < e since gcd(d, e) = 1
    if (w.degree() != s || !w.is_monic())
        throw BadDegree("exp_component: w must be monic of degree floor(d/e)");
    return FqPoly::monomial(w.field(), k) * w.pow(e);
}

}  // namespace tamecount
