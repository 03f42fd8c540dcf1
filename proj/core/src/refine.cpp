#include "tamecount/refine.hpp"

#include <algorithm>
#include <numeric>

namespace tamecount {

namespace {

RefinementMatrix run_grid(const OrderedFactorization& d, const OrderedFactorization& e) {
    if (d.n() != e.n())
        throw ProductMismatch("refine_pair: factorizations of different integers");
    const std::size_t l = d.size(), m = e.size();
    RefinementMatrix mat;
    mat.rows = l;
    mat.cols = m;
    mat.cells.assign(l + 1, std::vector<long long>(m + 1, 1));
    for (std::size_t i = 0; i < l; ++i) mat.cells[i][m] = d[i];
    for (std::size_t j = 0; j < m; ++j) mat.cells[l][j] = e[j];
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            long long c = std::gcd(mat.cells[i][m], mat.cells[l][j]);
            mat.cells[i][j] = c;
            mat.cells[i][m] /= c;
            mat.cells[l][j] /= c;
        }
    }
    return mat;
}

std::vector<long long> flatten_rows(const RefinementMatrix& mat) {
    std::vector<long long> parts;
    for (std::size_t i = 0; i < mat.rows; ++i)
        for (std::size_t j = 0; j < mat.cols; ++j)
            if (mat.cells[i][j] > 1) parts.push_back(mat.cells[i][j]);
    return parts;
}

std::vector<long long> flatten_cols(const RefinementMatrix& mat) {
    std::vector<long long> parts;
    for (std::size_t j = 0; j < mat.cols; ++j)
        for (std::size_t i = 0; i < mat.rows; ++i)
            if (mat.cells[i][j] > 1) parts.push_back(mat.cells[i][j]);
    return parts;
}

}  // namespace

std::pair<OrderedFactorization, OrderedFactorization> refine_pair(
    const OrderedFactorization& d, const OrderedFactorization& e) {
    RefinementMatrix mat = run_grid(d, e);
    return {OrderedFactorization(d.n(), flatten_rows(mat)),
            OrderedFactorization(e.n(), flatten_cols(mat))};
}

RefinementMatrix refine_matrix(const OrderedFactorization& d,
                               const OrderedFactorization& e) {
    return run_grid(d, e);
}

NormalizedSet::NormalizedSet(std::vector<OrderedFactorization> members)
    : members_(std::move(members)), canonical_(0) {
    if (members_.empty()) throw BadArguments("NormalizedSet: empty member list");
    basis_ = members_[0].basis();
    for (const auto& m : members_) {
        if (m.n() != members_[0].n())
            throw ProductMismatch("NormalizedSet: mixed integers");
        if (m.basis() != basis_)
            throw BasisMismatch("NormalizedSet: members disagree on the basis");
    }
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (!is_associated(members_[i], members_[j]))
                throw BadArguments("NormalizedSet: members are not pairwise associated");
}

NormalizedSet normalize(std::vector<OrderedFactorization> members) {
    if (members.empty()) throw BadArguments("normalize: empty set");
    for (const auto& m : members)
        if (m.n() != members[0].n())
            throw ProductMismatch("normalize: mixed integers");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (is_associated(members[i], members[j])) continue;
                auto [di, dj] = refine_pair(members[i], members[j]);
                members[i] = std::move(di);
                members[j] = std::move(dj);
                changed = true;
            }
        }
        // merge duplicates, keeping first occurrences in place
        std::vector<OrderedFactorization> unique;
        for (auto& m : members)
            if (std::find(unique.begin(), unique.end(), m) == unique.end())
                unique.push_back(std::move(m));
        members = std::move(unique);
    }
    // canonical output order, so normalize is idempotent including order
    std::sort(members.begin(), members.end());
    return NormalizedSet(std::move(members));
}

}  // namespace tamecount
