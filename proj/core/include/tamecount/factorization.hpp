#ifndef TAMECOUNT_FACTORIZATION_HPP
#define TAMECOUNT_FACTORIZATION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tamecount/errors.hpp"

namespace tamecount {

/// A sequence of nontrivial divisors of n whose product is n.
/// Repeated values are distinguished by position.
class OrderedFactorization {
public:
    OrderedFactorization(long long n, std::vector<long long> parts);

    /// Parses "12,420"; the product of the parts becomes n.
    static OrderedFactorization parse(std::string_view text);

    long long n() const { return n_; }
    const std::vector<long long>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    long long operator[](std::size_t i) const { return parts_[i]; }

    /// The underlying multiset of parts, as a sorted vector.
    std::vector<long long> basis() const;

    std::string str() const;

    friend bool operator==(const OrderedFactorization&,
                           const OrderedFactorization&) = default;
    /// Lexicographic order on the part sequences.
    friend std::strong_ordering operator<=>(const OrderedFactorization& a,
                                            const OrderedFactorization& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    long long n_;
    std::vector<long long> parts_;
};

/// All d with 1 < d < n and d | n, ascending.
std::vector<long long> nontrivial_divisors(long long n);

/// The unique index permutation with d_i = e_{sigma(i)} that preserves the
/// relative order of repeated values (0-based). Throws BasisMismatch.
std::vector<std::size_t> sigma(const OrderedFactorization& d,
                               const OrderedFactorization& e);

/// True iff d and e have the same basis and sigma(d, e) keeps every pair of
/// non-coprime entries in order.
bool is_associated(const OrderedFactorization& d, const OrderedFactorization& e);

}  // namespace tamecount

#endif
