#ifndef TAMECOUNT_QCOUNT_HPP
#define TAMECOUNT_QCOUNT_HPP

#include <vector>

#include "tamecount/factorization.hpp"
#include "tamecount/qpoly.hpp"
#include "tamecount/relation_graph.hpp"

namespace tamecount {

/// #P_n = q^{n-1}: monic original polynomials of degree n.
QPolynomial count_P(long long n);

/// #D_{n,d} = q^{sum(d_i) - len(d)} for a single decomposition degree sequence.
QPolynomial count_D_single(long long n, const OrderedFactorization& dseq);

/// Exact 2-collision count for coprime d > e >= 2:
/// q * (q^{floor(d/e)} + (1 - [e==2]) * (q - 1)).
QPolynomial count_two_collision(long long d, long long e);

/// Size of the shift orbit of the exponential component family E_{d,e}
/// over F_q; q must be coprime to d*e.
BigInt orbit_size_exp(long long d, long long e, const BigInt& q);

/// Size of the shift orbit of the Dickson component family T_{d,e} over F_q.
BigInt orbit_size_trig(long long d, long long e, const BigInt& q);

/// Count for one strongly connected component: q^{d-1} for a singleton,
/// otherwise q * (prod_i q^{floor(d_i/e_i)} + (1 - delta) * (q - 1)) where
/// delta = 1 iff no bidirectional edge joins two vertices both > 2.
QPolynomial count_component(const RelationGraph& g);

/// Product of count_component over the strongly connected component chain.
QPolynomial count_graph(const RelationGraph& g);

/// #D_{n,D}: normalize D, build the relation graph, count it.
QPolynomial count_collisions(long long n, std::vector<OrderedFactorization> D);

/// #D_n by inclusion-exclusion over subsets of the nontrivial divisors;
/// zero for n = 1 or n prime. Valid for every prime power q coprime to n.
QPolynomial count_decomposables(long long n);

}  // namespace tamecount

#endif
