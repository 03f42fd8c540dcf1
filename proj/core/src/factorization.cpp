#include "tamecount/factorization.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace tamecount {

OrderedFactorization::OrderedFactorization(long long n, std::vector<long long> parts)
    : n_(n), parts_(std::move(parts)) {
    if (n_ < 1) throw BadArguments("OrderedFactorization: n must be positive");
    long long prod = 1;
    for (long long p : parts_) {
        if (p < 2) throw BadArguments("OrderedFactorization: parts must be >= 2");
        if (prod > n_ / p) throw ProductMismatch("OrderedFactorization: product exceeds n");
        prod *= p;
    }
    if (prod != n_)
        throw ProductMismatch("OrderedFactorization: product of parts is " +
                              std::to_string(prod) + ", expected " + std::to_string(n_));
}

OrderedFactorization OrderedFactorization::parse(std::string_view text) {
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad factorization part '" + std::string(tok) + "'");
        if (value < 2)
            throw ParseError("factorization parts must be >= 2, got '" +
                             std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (parts.empty()) throw ParseError("empty factorization");
    long long prod = 1;
    for (long long p : parts) prod *= p;
    return OrderedFactorization(prod, std::move(parts));
}

std::vector<long long> OrderedFactorization::basis() const {
    std::vector<long long> b = parts_;
    std::sort(b.begin(), b.end());
    return b;
}

std::string OrderedFactorization::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

std::vector<long long> nontrivial_divisors(long long n) {
    std::vector<long long> low, high;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

std::vector<std::size_t> sigma(const OrderedFactorization& d,
                               const OrderedFactorization& e) {
    if (d.basis() != e.basis())
        throw BasisMismatch("sigma: factorizations have different bases");
    const std::size_t len = d.size();
    std::vector<bool> used(len, false);
    std::vector<std::size_t> perm(len);
    // greedy left-to-right matching of equal values preserves the order of
    // repeats, which is exactly the unique permutation required
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            if (!used[j] && e[j] == d[i]) {
                perm[i] = j;
                used[j] = true;
                break;
            }
        }
    }
    return perm;
}

bool is_associated(const OrderedFactorization& d, const OrderedFactorization& e) {
    if (d.basis() != e.basis()) return false;
    std::vector<std::size_t> perm = sigma(d, e);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (std::gcd(d[i], d[j]) > 1 && perm[i] > perm[j]) return false;
    return true;
}

}  // namespace tamecount
