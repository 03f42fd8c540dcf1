// Acceptance gate: one line per criterion, PASS/FAIL plus timing.
// Cases whose enumeration cost exceeds the oracle budget (or this
// machine's memory) are reported as SKIP inside the criterion line;
// a criterion passes when every attempted case agrees exactly.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "tamecount/decompose.hpp"
#include "tamecount/oracle.hpp"
#include "tamecount/qcount.hpp"
#include "tamecount/refine.hpp"

using namespace tamecount;

namespace {

int g_failures = 0;

struct Criterion {
    std::string detail;
    bool ok = true;
    std::vector<std::string> skipped;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
    void skip(const std::string& what) { skipped.push_back(what); }
};

template <typename Fn>
void run_criterion(int number, const std::string& name, Fn&& body) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& ex) {
        c.ok = false;
        c.detail = std::string("exception: ") + ex.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    std::string extra;
    if (!c.skipped.empty()) {
        extra = " skipped:";
        for (const std::string& s : c.skipped) extra += " " + s;
    }
    if (!c.detail.empty()) extra += " [" + c.detail + "]";
    std::printf("criterion %d (%s): %s (%.1fs)%s\n", number, name.c_str(),
                c.ok ? "PASS" : "FAIL", secs, extra.c_str());
    std::fflush(stdout);
    if (!c.ok) ++g_failures;
}

OrderedFactorization of(std::vector<long long> parts) {
    long long n = 1;
    for (long long p : parts) n *= p;
    return {n, std::move(parts)};
}

// enumeration cost (raw compositions) of the divisor-pair union oracle
long long union_cost(long long n, long long p) {
    long long total = 0;
    for (long long d : nontrivial_divisors(n)) {
        long long cost = 1;
        for (long long i = 0; i < d + n / d - 3; ++i) {
            if (cost > (1LL << 62) / p) return 1LL << 62;
            cost *= p;
        }
        total += cost;
    }
    return total;
}

long long pair_cost(long long d, long long e, long long p) {
    long long cost = 2;
    for (long long i = 0; i < d + e - 3; ++i) {
        if (cost > (1LL << 62) / p) return 1LL << 62;
        cost *= p;
    }
    return cost;
}

FqPoly random_monic_original(std::mt19937& rng, PrimeField F, long long d) {
    std::uniform_int_distribution<long long> coeff(0, F.p() - 1);
    std::vector<long long> c(d + 1, 0);
    c[d] = 1;
    for (long long i = 1; i < d; ++i) c[i] = coeff(rng);
    return {F, std::move(c)};
}

void criterion1(Criterion& c) {
    const std::vector<std::pair<long long, long long>> grid = {
        {4, 3}, {4, 5}, {4, 7}, {6, 5},  {6, 7}, {8, 3},
        {8, 5}, {9, 2}, {10, 3}, {14, 3}, {15, 2}};
    for (auto [n, p] : grid) {
        long long got = exhaustive_decomposables(n, p);
        BigInt want = count_decomposables(n).eval(p);
        c.require(BigInt(got) == want,
                  "n=" + std::to_string(n) + " p=" + std::to_string(p) +
                      " exhaustive=" + std::to_string(got));
    }
    // spot values
    c.require(exhaustive_decomposables(4, 3) == 9, "(4,3) != 9");
    c.require(exhaustive_decomposables(6, 5) == 225, "(6,5) != 225");
    c.require(exhaustive_decomposables(8, 3) == 135, "(8,3) != 135");
    c.require(exhaustive_decomposables(9, 2) == 16, "(9,2) != 16");
}

void criterion2(Criterion& c) {
    const long long budget = 200'000'000;
    for (long long n : {12, 16, 20, 30}) {
        for (long long p : {7, 11, 13}) {
            if (std::gcd(n, p) != 1) continue;
            std::string tag = std::to_string(n) + "/" + std::to_string(p);
            if (union_cost(n, p) > budget) {
                c.skip(tag);
                continue;
            }
            long long got = oracle_count_union(n, p, budget);
            c.require(BigInt(got) == count_decomposables(n).eval(p),
                      tag + " union=" + std::to_string(got));
        }
    }
}

void criterion3(Criterion& c) {
    const long long budget = 200'000'000;
    const std::vector<std::pair<long long, long long>> pairs = {
        {3, 2}, {5, 2}, {5, 3}, {7, 2}, {7, 3}, {4, 3}, {7, 6}};
    for (auto [d, e] : pairs) {
        for (long long p : {5, 11, 13}) {
            if ((d * e) % p == 0) continue;
            std::string tag = std::to_string(d) + "," + std::to_string(e) + "/" +
                              std::to_string(p);
            if (pair_cost(d, e, p) > budget) {
                c.skip(tag);
                continue;
            }
            long long got =
                oracle_count_D(d * e, {of({d, e}), of({e, d})}, p, budget);
            c.require(BigInt(got) == count_two_collision(d, e).eval(p),
                      tag + " oracle=" + std::to_string(got));
        }
    }
}

void criterion4(Criterion& c) {
    for (long long d = 2; d <= 7; ++d) {
        for (long long e = 1; e <= 5; ++e) {
            if (std::gcd(d, e) != 1) continue;
            for (long long p : {5, 7, 11, 13}) {
                if ((d * e) % p == 0) continue;
                std::string tag = std::to_string(d) + "," + std::to_string(e) +
                                  "/" + std::to_string(p);
                c.require(BigInt(orbit_enumerate(OrbitKind::exponential, d, e, p)) ==
                              orbit_size_exp(d, e, p),
                          "exp " + tag);
                c.require(BigInt(orbit_enumerate(OrbitKind::trigonometric, d, e, p)) ==
                              orbit_size_trig(d, e, p),
                          "trig " + tag);
            }
        }
    }
    c.require(orbit_enumerate(OrbitKind::exponential, 5, 2, 7) == 322,
              "E_{5,2}/F_7 != 322");
}

void criterion5(Criterion& c) {
    // Dickson semigroup law, non-originalized kind, full small grid
    for (long long p : {5, 7, 11}) {
        PrimeField F(p);
        for (long long d = 2; d <= 6; ++d)
            for (long long e = 2; e <= 6; ++e) {
                if ((d * e) % p == 0) continue;
                for (long long z = 1; z < p; ++z)
                    c.require(compose(dickson_star(d, F.pow(z, e), F),
                                      dickson_star(e, z, F)) ==
                                  dickson_star(d * e, z, F),
                              "dickson grid");
            }
        // originalized law for odd inner degree
        for (long long d = 2; d <= 6; ++d)
            for (long long e : {3, 5}) {
                if ((d * e) % p == 0) continue;
                for (long long z = 1; z < p; ++z)
                    c.require(compose(dickson(d, F.pow(z, e), F), dickson(e, z, F)) ==
                                  dickson(d * e, z, F),
                              "originalized dickson grid");
            }
    }
    // exponential collision law x^k w^e o x^e = x^e o x^k w(x^e)
    std::mt19937 rng(77);
    for (long long p : {5, 7}) {
        PrimeField F(p);
        for (int t = 0; t < 200; ++t) {
            long long e = 2 + t % 3, d = e + 1 + (t / 3) % 3;
            if (std::gcd(d, e) != 1) continue;
            long long s = d / e, k = d - s * e;
            FqPoly w = random_monic_original(rng, F, s) +
                       FqPoly::constant(F, t % p);
            FqPoly xe = FqPoly::monomial(F, e);
            c.require(compose(FqPoly::monomial(F, k) * w.pow(e), xe) ==
                          compose(xe, FqPoly::monomial(F, k) * compose(w, xe)),
                      "exponential law");
        }
    }
    // tame decomposition round-trips
    int trips = 0;
    for (long long p : {5, 7, 11}) {
        PrimeField F(p);
        std::uniform_int_distribution<int> deg(2, 4);
        for (int t = 0; t < 4000; ++t) {
            long long dd = deg(rng), ee = deg(rng);
            if ((dd * ee) % p == 0) continue;
            FqPoly g = random_monic_original(rng, F, dd);
            FqPoly h = random_monic_original(rng, F, ee);
            auto gh = tame_decompose(compose(g, h), dd);
            c.require(gh && gh->first == g && gh->second == h, "tame round-trip");
            ++trips;
        }
    }
    c.require(trips >= 10000, "fewer than 10^4 round-trips");
}

void criterion6(Criterion& c) {
    auto [de, ed] = refine_pair(of({12, 420}), of({14, 360}));
    c.require(de.parts() == std::vector<long long>{2, 6, 7, 60}, "refine d||e");
    c.require(ed.parts() == std::vector<long long>{2, 7, 6, 60}, "refine e||d");

    NormalizedSet norm = normalize({of({12, 420}), of({14, 360}), of({20, 252})});
    c.require(norm.members().size() == 3, "normalized size");
    c.require(norm.members()[0].parts() == std::vector<long long>{2, 2, 3, 7, 5, 12},
              "normalized member 0");
    c.require(norm.members()[1].parts() == std::vector<long long>{2, 2, 5, 3, 7, 12},
              "normalized member 1");
    c.require(norm.members()[2].parts() == std::vector<long long>{2, 7, 2, 3, 5, 12},
              "normalized member 2");

    auto values = [](const std::vector<Vertex>& vs) {
        std::vector<long long> out;
        for (const Vertex& v : vs) out.push_back(v.value);
        return out;
    };
    SccChain chain = scc_chain(RelationGraph::build(norm));
    c.require(chain.components.size() == 3, "chain length");
    if (chain.components.size() == 3) {
        c.require(values(chain.components[0].vertices()) ==
                      std::vector<long long>{2},
                  "chain head");
        std::vector<long long> mid = values(chain.components[1].vertices());
        std::sort(mid.begin(), mid.end());
        c.require(mid == std::vector<long long>{2, 3, 5, 7}, "chain middle");
        c.require(values(chain.components[2].vertices()) ==
                      std::vector<long long>{12},
                  "chain tail");
        c.require(values(max_sink_order(chain.components[1])) ==
                      std::vector<long long>{7, 2, 5, 3},
                  "max-sink order");
    }

    NormalizedSet two = normalize({of({12, 420}), of({14, 360})});
    SccChain chain2 = scc_chain(RelationGraph::build(two));
    c.require(chain2.components.size() == 3, "two-member chain length");
}

void criterion7(Criterion& c) {
    const std::vector<long long> primes = {2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (long long p1 : primes)
        for (long long p2 : primes) {
            if (p1 >= p2 || p1 * p2 > 50) continue;
            QPolynomial want = QPolynomial::monomial(p1 + p2 - 2, 2) -
                               count_two_collision(p2, p1);
            c.require(count_decomposables(p1 * p2) == want,
                      "semiprime " + std::to_string(p1 * p2));
        }
    QPolynomial eight = QPolynomial::monomial(4, 2) - QPolynomial::monomial(3, 1);
    c.require(count_decomposables(8) == eight, "n=8 closed form");
}

void criterion8(Criterion& c) {
    auto table = [] {
        std::ostringstream out, err;
        run_cli({"table", "--max", "50", "--format", "json"}, out, err);
        return out.str();
    };
    auto start = std::chrono::steady_clock::now();
    std::string a = table();
    std::string b = table();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    c.require(!a.empty(), "empty table");
    c.require(a == b, "runs differ");
    c.require(secs < 10.0, "full table too slow");
}

}  // namespace

int main() {
    run_criterion(1, "exhaustive oracle grid", criterion1);
    run_criterion(2, "composition-set oracle", criterion2);
    run_criterion(3, "two-collision formula", criterion3);
    run_criterion(4, "component orbit sizes", criterion4);
    run_criterion(5, "identity suites", criterion5);
    run_criterion(6, "worked examples", criterion6);
    run_criterion(7, "closed-form cross-checks", criterion7);
    run_criterion(8, "table determinism", criterion8);
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
