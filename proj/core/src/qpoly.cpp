#include "tamecount/qpoly.hpp"

#include <cctype>
#include <sstream>

#include "tamecount/errors.hpp"

namespace tamecount {

QPolynomial::QPolynomial(BigInt constant) {
    if (constant != 0) terms_[0] = std::move(constant);
}

QPolynomial QPolynomial::monomial(long long exponent, BigInt coeff) {
    if (exponent < 0) throw BadArguments("QPolynomial: negative exponent");
    QPolynomial p;
    if (coeff != 0) p.terms_[exponent] = std::move(coeff);
    return p;
}

long long QPolynomial::degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

BigInt QPolynomial::coeff(long long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt QPolynomial::eval(const BigInt& q) const {
    // Horner over the sparse exponent gaps
    BigInt acc = 0;
    long long prev = -1;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (prev >= 0)
            for (long long k = it->first; k < prev; ++k) acc *= q;
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0)
        for (long long k = 0; k < prev; ++k) acc *= q;
    return acc;
}

void QPolynomial::strip() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) terms_[e] += c;
    strip();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    for (const auto& [e, c] : rhs.terms_) terms_[e] -= c;
    strip();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    std::map<long long, BigInt> product;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) product[ea + eb] += ca * cb;
    terms_ = std::move(product);
    strip();
    return *this;
}

std::string QPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1 || e == 0) {
            out << mag;
            if (e != 0) out << '*';
        }
        if (e != 0) {
            out << 'q';
            if (e != 1) out << '^' << e;
        }
    }
    return out.str();
}

std::string QPolynomial::json_str() const {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << ',';
        first = false;
        out << '[' << it->first << ",\"" << it->second << "\"]";
    }
    out << ']';
    return out.str();
}

QPolynomial QPolynomial::parse(std::string_view text) {
    QPolynomial result;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto read_int = [&]() -> BigInt {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("QPolynomial: expected digits in '" +
                                         std::string(text) + "'");
        return BigInt(std::string(text.substr(start, i - start)));
    };
    skip_ws();
    if (i == text.size()) throw ParseError("QPolynomial: empty input");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (!first || text[i] == '+' || text[i] == '-') {
            if (i == text.size() || (text[i] != '+' && text[i] != '-'))
                throw ParseError("QPolynomial: expected '+' or '-' in '" +
                                 std::string(text) + "'");
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        first = false;
        BigInt coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = read_int();
            saw_coeff = true;
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        long long exponent = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                BigInt e = read_int();
                exponent = static_cast<long long>(e);
            }
        } else if (!saw_coeff) {
            throw ParseError("QPolynomial: expected term in '" + std::string(text) + "'");
        }
        result += monomial(exponent, sign * coeff);
        skip_ws();
    }
    return result;
}

}  // namespace tamecount
