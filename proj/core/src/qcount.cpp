#include "tamecount/qcount.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

#include "tamecount/errors.hpp"
#include "tamecount/refine.hpp"

namespace tamecount {

QPolynomial count_P(long long n) {
    if (n < 1) throw BadArguments("count_P: n must be positive");
    return QPolynomial::monomial(n - 1);
}

QPolynomial count_D_single(long long n, const OrderedFactorization& dseq) {
    if (dseq.n() != n) throw ProductMismatch("count_D_single: sequence does not factor n");
    long long sum = 0;
    for (long long d : dseq.parts()) sum += d;
    return QPolynomial::monomial(sum - static_cast<long long>(dseq.size()));
}

QPolynomial count_two_collision(long long d, long long e) {
    if (e < 2 || d <= e) throw BadOrder("count_two_collision: need d > e >= 2");
    if (std::gcd(d, e) != 1) throw NotCoprime("count_two_collision: d, e not coprime");
    QPolynomial inner = QPolynomial::monomial(d / e);
    if (e != 2) inner += QPolynomial::monomial(1) - QPolynomial(1);
    return QPolynomial::monomial(1) * inner;
}

namespace {

BigInt bigpow(const BigInt& q, long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= q;
    return r;
}

void check_orbit_args(long long d, long long e, const BigInt& q) {
    if (d < 2 || e < 1) throw BadArguments("orbit size: need d >= 2, e >= 1");
    if (std::gcd(d, e) != 1) throw BadArguments("orbit size: d, e not coprime");
    if (q < 2 || boost::multiprecision::gcd(q, BigInt(d) * e) != 1)
        throw BadArguments("orbit size: q must be coprime to d*e");
}

}  // namespace

BigInt orbit_size_exp(long long d, long long e, const BigInt& q) {
    check_orbit_args(d, e, q);
    if (e == 1) return bigpow(q, d - 1);
    if (e == 2) return bigpow(q, d / 2 + 1) - q * (q - 1) / 2;
    return bigpow(q, d / e + 1);
}

BigInt orbit_size_trig(long long d, long long e, const BigInt& q) {
    check_orbit_args(d, e, q);
    if (d == 2) return q;
    return q * (q - 1) / boost::multiprecision::gcd(q - 1, BigInt(e));
}

QPolynomial count_component(const RelationGraph& g) {
    if (g.size() == 1) return QPolynomial::monomial(g.vertex(0).value - 1);
    std::vector<long long> e = neighborhood_products(g);
    QPolynomial prod(1);
    for (std::size_t i = 0; i < g.size(); ++i)
        prod *= QPolynomial::monomial(g.vertex(i).value / e[i]);
    // The Dickson family T_n(x,z) decomposes along every transitive
    // Hamiltonian path, so it contributes q(q-1) extra polynomials unless it
    // folds into the exponential normal form. The fold happens exactly when
    // every vertex of value > 2 has neighborhood product 2 (its only
    // undirected neighbor is a single 2): T_d(x,z) lies in E_{d,2} but in no
    // E_{d,e} with e > 2, and T_2 = x^2 is always exponential.
    bool folds = true;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.vertex(i).value > 2 && e[i] != 2) folds = false;
    if (!folds) prod += QPolynomial::monomial(1) - QPolynomial(1);
    return QPolynomial::monomial(1) * prod;
}

QPolynomial count_graph(const RelationGraph& g) {
    QPolynomial result(1);
    for (const RelationGraph& comp : scc_chain(g).components)
        result *= count_component(comp);
    return result;
}

QPolynomial count_collisions(long long n, std::vector<OrderedFactorization> D) {
    if (D.empty()) throw BadArguments("count_collisions: empty set");
    for (const auto& d : D)
        if (d.n() != n)
            throw ProductMismatch("count_collisions: member does not factor n");
    return count_graph(RelationGraph::build(normalize(std::move(D))));
}

QPolynomial count_decomposables(long long n) {
    if (n < 1) throw BadArguments("count_decomposables: n must be positive");
    std::vector<long long> divisors = nontrivial_divisors(n);
    QPolynomial total;
    const std::size_t m = divisors.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<OrderedFactorization> D;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1)
                D.push_back(OrderedFactorization(n, {divisors[i], n / divisors[i]}));
        if (std::popcount(mask) % 2 == 1)
            total += count_collisions(n, std::move(D));
        else
            total -= count_collisions(n, std::move(D));
    }
    return total;
}

}  // namespace tamecount
