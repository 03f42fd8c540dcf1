#ifndef TAMECOUNT_REFINE_HPP
#define TAMECOUNT_REFINE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "tamecount/factorization.hpp"

namespace tamecount {

/// Terminal state of the gcd grid used by pairwise refinement. Row i of
/// cells (i < rows) multiplies to d_i, column j (j < cols) to e_j; the
/// trailing row/column holds the leftover entries (all 1 on termination).
struct RefinementMatrix {
    std::size_t rows = 0;  // len(d)
    std::size_t cols = 0;  // len(e)
    std::vector<std::vector<long long>> cells;  // (rows+1) x (cols+1)
};

/// Refines d by e and e by d; the two outputs are associated and describe
/// the same collision set as the inputs. Swapping the inputs swaps the
/// outputs. Throws ProductMismatch if the products differ.
std::pair<OrderedFactorization, OrderedFactorization> refine_pair(
    const OrderedFactorization& d, const OrderedFactorization& e);

/// The terminal grid reached while refining d by e.
RefinementMatrix refine_matrix(const OrderedFactorization& d,
                               const OrderedFactorization& e);

/// A set of pairwise-associated ordered factorizations with one common basis.
class NormalizedSet {
public:
    explicit NormalizedSet(std::vector<OrderedFactorization> members);

    const std::vector<OrderedFactorization>& members() const { return members_; }
    const std::vector<long long>& basis() const { return basis_; }
    /// The member whose part order fixes vertex identity in relation graphs.
    const OrderedFactorization& canonical() const { return members_[canonical_]; }
    std::size_t canonical_index() const { return canonical_; }
    long long n() const { return members_[0].n(); }

private:
    std::vector<OrderedFactorization> members_;
    std::vector<long long> basis_;
    std::size_t canonical_;
};

/// Repeated pairwise refinement to a fixed point. Members are processed in
/// ascending lexicographic order of their part sequences so the result is
/// reproducible; duplicates produced along the way are merged.
NormalizedSet normalize(std::vector<OrderedFactorization> members);

}  // namespace tamecount

#endif
