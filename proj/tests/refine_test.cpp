#include <doctest.h>

#include <numeric>
#include <random>

#include "tamecount/refine.hpp"

using namespace tamecount;

namespace {

OrderedFactorization of(std::vector<long long> parts) {
    long long n = 1;
    for (long long p : parts) n *= p;
    return {n, std::move(parts)};
}

// random ordered factorization of a random smooth n <= bound
OrderedFactorization random_factorization(std::mt19937& rng, long long n) {
    std::vector<long long> parts;
    while (true) {
        std::vector<long long> divs = nontrivial_divisors(n);
        if (divs.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, divs.size());
        std::size_t i = pick(rng);
        if (i == divs.size()) break;  // stop splitting
        parts.push_back(divs[i]);
        n /= divs[i];
    }
    if (n >= 2) parts.push_back(n);
    long long prod = 1;
    for (long long p : parts) prod *= p;
    return {prod, std::move(parts)};
}

// contiguous blocks of refined multiply back to the original parts
bool blocks_recover(const OrderedFactorization& refined,
                    const OrderedFactorization& coarse) {
    std::size_t i = 0;
    for (long long part : coarse.parts()) {
        long long prod = 1;
        while (i < refined.size() && prod < part) prod *= refined[i++];
        if (prod != part) return false;
    }
    return i == refined.size();
}

}  // namespace

TEST_CASE("refine_pair on the worked example") {
    auto [de, ed] = refine_pair(of({12, 420}), of({14, 360}));
    CHECK(de.parts() == std::vector<long long>{2, 6, 7, 60});
    CHECK(ed.parts() == std::vector<long long>{2, 7, 6, 60});
}

TEST_CASE("refine_pair small cases") {
    auto [de, ed] = refine_pair(of({4, 3}), of({6, 2}));
    CHECK(de.parts() == std::vector<long long>{2, 2, 3});
    CHECK(ed.parts() == std::vector<long long>{2, 3, 2});

    auto [a, b] = refine_pair(of({6}), of({6}));
    CHECK(a.parts() == std::vector<long long>{6});
    CHECK(b.parts() == std::vector<long long>{6});

    CHECK_THROWS_AS(refine_pair(of({6}), of({2, 4})), ProductMismatch);
}

TEST_CASE("swapping inputs swaps outputs") {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        long long n = 2 * 2 * 3 * (1 + (t % 5)) * 5;
        OrderedFactorization d = random_factorization(rng, n);
        OrderedFactorization e = random_factorization(rng, n);
        auto [de, ed] = refine_pair(d, e);
        auto [ed2, de2] = refine_pair(e, d);
        CHECK(de == de2);
        CHECK(ed == ed2);
    }
}

TEST_CASE("refinement three-way equivalence") {
    std::mt19937 rng(11);
    for (int t = 0; t < 400; ++t) {
        long long n = std::vector<long long>{720, 2310, 4096, 5040, 9240}[t % 5];
        OrderedFactorization d = random_factorization(rng, n);
        OrderedFactorization e = random_factorization(rng, n);
        auto [de, ed] = refine_pair(d, e);
        bool same_len = de.size() == d.size() && ed.size() == e.size();
        bool fixed = de == d && ed == e;
        bool assoc = is_associated(d, e);
        CHECK(same_len == fixed);
        CHECK(fixed == assoc);
        CHECK(blocks_recover(de, d));
        CHECK(blocks_recover(ed, e));
        CHECK(is_associated(de, ed));
    }
}

TEST_CASE("terminal grid coprimality") {
    std::mt19937 rng(13);
    for (int t = 0; t < 200; ++t) {
        long long n = std::vector<long long>{360, 5040, 1296}[t % 3];
        OrderedFactorization d = random_factorization(rng, n);
        OrderedFactorization e = random_factorization(rng, n);
        RefinementMatrix m = refine_matrix(d, e);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j)
                for (std::size_t i2 = i + 1; i2 < m.rows; ++i2)
                    for (std::size_t j2 = j + 1; j2 < m.cols; ++j2) {
                        CHECK(std::gcd(m.cells[i][j2], m.cells[i2][j]) == 1);
                    }
        // leftovers fully distributed
        for (std::size_t i = 0; i < m.rows; ++i) CHECK(m.cells[i][m.cols] == 1);
        for (std::size_t j = 0; j < m.cols; ++j) CHECK(m.cells[m.rows][j] == 1);
    }
}

TEST_CASE("normalize reproduces the three-member worked example") {
    NormalizedSet norm =
        normalize({of({12, 420}), of({14, 360}), of({20, 252})});
    REQUIRE(norm.members().size() == 3);
    CHECK(norm.members()[0].parts() ==
          std::vector<long long>{2, 2, 3, 7, 5, 12});
    CHECK(norm.members()[1].parts() ==
          std::vector<long long>{2, 2, 5, 3, 7, 12});
    CHECK(norm.members()[2].parts() ==
          std::vector<long long>{2, 7, 2, 3, 5, 12});
}

TEST_CASE("normalize simple sets") {
    NormalizedSet a = normalize({of({6, 7}), of({7, 6})});
    REQUIRE(a.members().size() == 2);
    CHECK(a.members()[0].parts() == std::vector<long long>{6, 7});
    CHECK(a.members()[1].parts() == std::vector<long long>{7, 6});

    NormalizedSet b = normalize({of({4, 3}), of({6, 2})});
    REQUIRE(b.members().size() == 2);
    CHECK(b.members()[0].parts() == std::vector<long long>{2, 2, 3});
    CHECK(b.members()[1].parts() == std::vector<long long>{2, 3, 2});

    // duplicates collapse
    NormalizedSet c = normalize({of({2, 4}), of({4, 2})});
    CHECK(c.members().size() == 1);
    CHECK(c.members()[0].parts() == std::vector<long long>{2, 2, 2});
}

TEST_CASE("normalize is idempotent and deterministic") {
    std::mt19937 rng(17);
    for (int t = 0; t < 100; ++t) {
        long long n = std::vector<long long>{360, 720, 5040}[t % 3];
        std::vector<OrderedFactorization> D;
        for (int k = 0; k < 3; ++k) D.push_back(random_factorization(rng, n));
        NormalizedSet once = normalize(D);
        NormalizedSet twice = normalize(once.members());
        CHECK(once.members() == twice.members());
        NormalizedSet again = normalize(D);
        CHECK(once.members() == again.members());
        CHECK(once.members().size() <= 3);
    }
}

TEST_CASE("NormalizedSet constructor rejects bad input") {
    CHECK_THROWS_AS(NormalizedSet({}), BadArguments);
    CHECK_THROWS_AS(NormalizedSet({of({2, 3}), of({2, 5})}), ProductMismatch);
    CHECK_THROWS_AS(NormalizedSet({of({2, 3}), of({6})}), BasisMismatch);
    CHECK_THROWS_AS(NormalizedSet({of({2, 4}), of({4, 2})}), BadArguments);
}
