#include <doctest.h>

#include <numeric>

#include "tamecount/qcount.hpp"
#include "tamecount/refine.hpp"

using namespace tamecount;

namespace {

OrderedFactorization of(std::vector<long long> parts) {
    long long n = 1;
    for (long long p : parts) n *= p;
    return {n, std::move(parts)};
}

QPolynomial qp(const char* text) { return QPolynomial::parse(text); }

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("count_P") {
    CHECK(count_P(4) == qp("q^3"));
    CHECK(count_P(1) == qp("1"));
    CHECK(count_P(12) == qp("q^11"));
}

TEST_CASE("count_D_single") {
    CHECK(count_D_single(6, of({2, 3})) == qp("q^3"));
    CHECK(count_D_single(4, of({2, 2})) == qp("q^2"));
    CHECK(count_D_single(8, of({2, 2, 2})) == qp("q^3"));
    CHECK_THROWS_AS(count_D_single(8, of({2, 3})), ProductMismatch);
}

TEST_CASE("count_two_collision") {
    CHECK(count_two_collision(3, 2) == qp("q^2"));
    CHECK(count_two_collision(7, 6) == qp("2*q^2 - q"));
    CHECK(count_two_collision(5, 3) == qp("2*q^2 - q"));
    CHECK(count_two_collision(7, 2) == qp("q^4"));
    CHECK(count_two_collision(7, 3) == qp("q^3 + q^2 - q"));
    CHECK_THROWS_AS(count_two_collision(2, 3), BadOrder);
    CHECK_THROWS_AS(count_two_collision(6, 4), NotCoprime);
}

TEST_CASE("orbit size formulas") {
    CHECK(orbit_size_exp(5, 2, 7) == 322);
    CHECK(orbit_size_exp(3, 1, 5) == 25);
    CHECK(orbit_size_exp(3, 2, 5) == 15);
    CHECK(orbit_size_exp(7, 3, 5) == 125);  // q^{floor(7/3)+1}
    CHECK(orbit_size_trig(2, 3, 5) == 5);
    CHECK(orbit_size_trig(3, 1, 7) == 42);
    CHECK(orbit_size_trig(5, 2, 7) == 21);
    CHECK_THROWS_AS(orbit_size_exp(4, 2, 7), BadArguments);   // not coprime
    CHECK_THROWS_AS(orbit_size_exp(5, 2, 10), BadArguments);  // q not coprime
    CHECK_THROWS_AS(orbit_size_trig(5, 3, 15), BadArguments);
}

TEST_CASE("count_component") {
    RelationGraph single({{0, 6}}, {{false}});
    CHECK(count_component(single) == qp("q^5"));

    NormalizedSet a = normalize({of({12, 420}), of({14, 360})});
    SccChain chain = scc_chain(RelationGraph::build(a));
    REQUIRE(chain.components.size() == 3);
    CHECK(count_component(chain.components[0]) == qp("q"));
    CHECK(count_component(chain.components[1]) == qp("2*q^2 - q"));
    CHECK(count_component(chain.components[1]) == count_two_collision(7, 6));
    CHECK(count_component(chain.components[2]) == qp("q^59"));

    NormalizedSet b = normalize({of({12, 420}), of({14, 360}), of({20, 252})});
    SccChain cb = scc_chain(RelationGraph::build(b));
    // middle component {2,3,5,7}: all floors 0 and the {3,5} edge joins two
    // vertices > 2, so delta = 0
    CHECK(count_component(cb.components[1]) == qp("q^2"));
}

TEST_CASE("count_graph multiplies the chain") {
    NormalizedSet a = normalize({of({12, 420}), of({14, 360})});
    CHECK(count_graph(RelationGraph::build(a)) == qp("2*q^62 - q^61"));

    NormalizedSet b = normalize({of({12, 420}), of({14, 360}), of({20, 252})});
    CHECK(count_graph(RelationGraph::build(b)) == qp("q^14"));

    CHECK(count_graph(RelationGraph::build(NormalizedSet({of({2, 3})}))) ==
          qp("q^3"));
}

TEST_CASE("count_collisions") {
    CHECK(count_collisions(12, {of({4, 3}), of({6, 2})}) == qp("q^3"));
    CHECK(count_collisions(6, {of({2, 3}), of({3, 2})}) == qp("q^2"));
    CHECK(count_collisions(8, {of({2, 4}), of({4, 2})}) == qp("q^3"));
    // the Dickson family folds into the exponential one only when every
    // vertex > 2 has a single undirected neighbor of value 2
    CHECK(count_collisions(12, {of({2, 6}), of({3, 4}), of({4, 3})}) == qp("q^2"));
    CHECK(count_collisions(20, {of({2, 10}), of({4, 5}), of({5, 4})}) ==
          qp("2*q^2 - q"));
    CHECK(count_collisions(30, {of({3, 2, 5}), of({2, 3, 5}), of({3, 5, 2})}) ==
          qp("q^4"));
    CHECK_THROWS_AS(count_collisions(8, {of({2, 3})}), ProductMismatch);
    CHECK_THROWS_AS(count_collisions(8, {}), BadArguments);
}

TEST_CASE("count_collisions on singletons equals count_D_single") {
    for (long long n : {6, 8, 12, 16, 24, 30}) {
        std::vector<OrderedFactorization> singles;
        for (long long d : nontrivial_divisors(n))
            singles.push_back(of({d, n / d}));
        for (const auto& d : singles)
            CHECK(count_collisions(n, {d}) == count_D_single(n, d));
    }
}

TEST_CASE("count_decomposables basics") {
    CHECK(count_decomposables(6) == qp("2*q^3 - q^2"));
    CHECK(count_decomposables(4) == qp("q^2"));
    CHECK(count_decomposables(8) == qp("2*q^4 - q^3"));
    CHECK(count_decomposables(9) == qp("q^4"));
    CHECK(count_decomposables(1).is_zero());
    CHECK(count_decomposables(7).is_zero());
    CHECK(count_decomposables(13).is_zero());
}

TEST_CASE("decomposables are a proper nonempty subset of P_n") {
    for (long long n = 4; n <= 50; ++n) {
        if (is_prime(n)) continue;
        QPolynomial p = count_decomposables(n);
        for (long long q : {2, 3, 5, 7, 11, 13}) {
            if (std::gcd<long long>(q, n) != 1) continue;
            BigInt value = p.eval(q);
            CHECK(value > 0);
            CHECK(value < count_P(n).eval(q));
        }
    }
}

TEST_CASE("refinement monotonicity of single counts") {
    for (long long n : {12, 24, 36, 60}) {
        for (long long d : nontrivial_divisors(n)) {
            OrderedFactorization coarse = of({d, n / d});
            for (long long d2 : nontrivial_divisors(n)) {
                OrderedFactorization other = of({d2, n / d2});
                auto [fine, fine2] = refine_pair(coarse, other);
                for (long long q = 2; q <= 7; ++q)
                    CHECK(count_D_single(n, fine).eval(q) <=
                          count_D_single(n, coarse).eval(q));
            }
        }
    }
}

TEST_CASE("semiprime closed form") {
    for (long long p1 : {2, 3, 5, 7}) {
        for (long long p2 : {3, 5, 7, 11, 13}) {
            if (p1 >= p2 || p1 * p2 > 50) continue;
            QPolynomial expect =
                QPolynomial::monomial(p1 + p2 - 2, 2) - count_two_collision(p2, p1);
            CHECK(count_decomposables(p1 * p2) == expect);
        }
    }
}

TEST_CASE("prime cube closed form") {
    for (long long r : {2, 3}) {
        QPolynomial expect = QPolynomial::monomial(r * r + r - 2, 2) -
                             QPolynomial::monomial(3 * r - 3);
        CHECK(count_decomposables(r * r * r) == expect);
    }
}
