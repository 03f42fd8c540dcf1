#ifndef TAMECOUNT_ORACLE_HPP
#define TAMECOUNT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "tamecount/factorization.hpp"
#include "tamecount/fqpoly.hpp"

namespace tamecount {

/// Elementary-composition guard for the brute-force oracles. Every oracle
/// charges the number of compositions it actually forms and fails hard with
/// BudgetExceeded instead of returning an approximate answer.
inline constexpr long long kDefaultBudget = 100'000'000;

/// A set of monic original polynomials of one degree over one prime field,
/// stored as sorted canonical keys (little-endian base-p digits of the
/// non-forced coefficients f_1..f_{n-1}).
class PolySet {
public:
    using Key = unsigned __int128;

    PolySet(PrimeField field, long long degree, std::vector<Key> sorted_keys);

    const PrimeField& field() const { return field_; }
    long long degree() const { return degree_; }
    long long size() const { return static_cast<long long>(keys_.size()); }
    const std::vector<Key>& keys() const { return keys_; }

    static Key encode(const FqPoly& f);
    FqPoly decode(Key key) const;
    bool contains(const FqPoly& f) const;

    friend bool operator==(const PolySet&, const PolySet&) = default;

private:
    PrimeField field_;
    long long degree_;
    std::vector<Key> keys_;  // ascending, unique
};

PolySet set_union(const PolySet& a, const PolySet& b);
PolySet set_intersection(const PolySet& a, const PolySet& b);

/// D_{n,d} = P_{d_1} o ... o P_{d_l} by exhaustive enumeration. With
/// shift_normalized, only the orbit representatives with vanishing x^{n-1}
/// coefficient are produced (one per shift orbit; the full set is p times
/// as large and shift-closed).
PolySet composition_set(long long n, const OrderedFactorization& dseq, long long p,
                        long long budget = kDefaultBudget,
                        bool shift_normalized = false);

/// #(intersection of the composition sets of the members of D).
long long oracle_count_D(long long n, const std::vector<OrderedFactorization>& D,
                         long long p, long long budget = kDefaultBudget);

/// #D_n as the union over all nontrivial divisors d of D_{n,(d, n/d)}.
long long oracle_count_union(long long n, long long p,
                             long long budget = kDefaultBudget);

/// #D_n by scanning all p^{n-1} monic original f and testing tame_decompose
/// against every nontrivial divisor.
long long exhaustive_decomposables(long long n, long long p,
                                   long long budget = kDefaultBudget);

enum class OrbitKind { exponential, trigonometric };

/// Size of the shifted component family E_{d,e}^{[F_p]} or T_{d,e}^{[F_p]}
/// by enumeration and deduplication.
long long orbit_enumerate(OrbitKind kind, long long d, long long e, long long p,
                          long long budget = kDefaultBudget);

}  // namespace tamecount

#endif
