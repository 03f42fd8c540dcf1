#include "tamecount/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tamecount/decompose.hpp"
#include "tamecount/errors.hpp"

namespace tamecount {

namespace {

using Key = PolySet::Key;

// p^e if it fits 128 bits, else nullopt
std::optional<Key> key_space(long long p, long long e) {
    Key r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > (~Key{0}) / static_cast<Key>(p)) return std::nullopt;
        r *= static_cast<Key>(p);
    }
    return r;
}

void check_key_space(long long p, long long n) {
    if (!key_space(p, n - 1))
        throw BudgetExceeded("oracle: coefficient key exceeds 128 bits");
}

// charges p^e against the remaining budget
void charge(long long& budget, long long p, long long e) {
    for (long long i = 0; i < e; ++i) {
        if (budget / p == 0)
            throw BudgetExceeded("oracle: enumeration budget exceeded");
        budget /= p;
    }
}

// all monic original degree-d coefficient vectors, optionally with the
// subleading coefficient fixed to zero (shift-orbit representatives)
template <typename Fn>
void for_each_monic_original(long long p, long long d, bool subleading_zero, Fn&& fn) {
    std::vector<long long> c(d + 1, 0);
    c[d] = 1;
    std::vector<long long> free_idx;
    for (long long i = 1; i < d; ++i)
        if (!(subleading_zero && i == d - 1)) free_idx.push_back(i);
    for (;;) {
        fn(c);
        std::size_t i = 0;
        for (; i < free_idx.size(); ++i) {
            if (++c[free_idx[i]] < p) break;
            c[free_idx[i]] = 0;
        }
        if (i == free_idx.size()) return;
    }
}

Key encode_coeffs(const std::vector<long long>& c, long long p, long long n) {
    Key key = 0;
    for (long long i = n - 1; i >= 1; --i)
        key = key * static_cast<Key>(p) + static_cast<Key>(c.size() > static_cast<std::size_t>(i) ? c[i] : 0);
    return key;
}

void sort_unique(std::vector<Key>& keys) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
}

// f = g o h for all outer g of degree d, given the powers h^1..h^d; walks
// the coefficients of g from the top, accumulating sum g_i h^i
void expand_outer(const std::vector<std::vector<long long>>& hpow, long long p,
                  long long n, long long i, std::vector<long long>& acc,
                  std::vector<Key>& out) {
    if (i == 0) {
        out.push_back(encode_coeffs(acc, p, n));
        return;
    }
    std::vector<long long> next = acc;
    for (long long c = 0; c < p; ++c) {
        expand_outer(hpow, p, n, i - 1, next, out);
        for (std::size_t j = 0; j < hpow[i].size(); ++j)
            next[j] = (next[j] + hpow[i][j]) % p;
    }
}

void append_pair_keys(std::vector<Key>& keys, long long n, long long d,
                      long long e, long long p, bool normalized) {
    PrimeField F(p);
    for_each_monic_original(p, e, normalized, [&](const std::vector<long long>& hc) {
        FqPoly h(F, hc);
        std::vector<std::vector<long long>> hpow(d + 1);
        FqPoly cur = h;
        for (long long i = 1; i <= d; ++i) {
            hpow[i] = cur.coeffs();
            hpow[i].resize(n + 1, 0);
            if (i < d) cur *= h;
        }
        std::vector<long long> acc = hpow[d];  // g is monic: start from h^d
        expand_outer(hpow, p, n, d - 1, acc, keys);
    });
}

// p^e, for pre-sizing key buffers; enumeration sizes are budget-checked first
long long pow_ll(long long p, long long e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

}  // namespace

PolySet::PolySet(PrimeField field, long long degree, std::vector<Key> sorted_keys)
    : field_(field), degree_(degree), keys_(std::move(sorted_keys)) {}

Key PolySet::encode(const FqPoly& f) {
    if (!f.is_monic_original()) throw NotMonicOriginal("PolySet: not monic original");
    return encode_coeffs(f.coeffs(), f.field().p(), f.degree());
}

FqPoly PolySet::decode(Key key) const {
    std::vector<long long> c(degree_ + 1, 0);
    c[degree_] = 1;
    for (long long i = 1; i < degree_; ++i) {
        c[i] = static_cast<long long>(key % static_cast<Key>(field_.p()));
        key /= static_cast<Key>(field_.p());
    }
    return FqPoly(field_, std::move(c));
}

bool PolySet::contains(const FqPoly& f) const {
    if (f.field() != field_ || f.degree() != degree_) return false;
    return std::binary_search(keys_.begin(), keys_.end(), encode(f));
}

PolySet set_union(const PolySet& a, const PolySet& b) {
    if (a.field() != b.field() || a.degree() != b.degree())
        throw BadArguments("set_union: incompatible sets");
    std::vector<Key> keys;
    keys.reserve(a.keys().size() + b.keys().size());
    std::set_union(a.keys().begin(), a.keys().end(), b.keys().begin(), b.keys().end(),
                   std::back_inserter(keys));
    return PolySet(a.field(), a.degree(), std::move(keys));
}

PolySet set_intersection(const PolySet& a, const PolySet& b) {
    if (a.field() != b.field() || a.degree() != b.degree())
        throw BadArguments("set_intersection: incompatible sets");
    std::vector<Key> keys;
    std::set_intersection(a.keys().begin(), a.keys().end(), b.keys().begin(),
                          b.keys().end(), std::back_inserter(keys));
    return PolySet(a.field(), a.degree(), std::move(keys));
}

PolySet composition_set(long long n, const OrderedFactorization& dseq, long long p,
                        long long budget, bool shift_normalized) {
    if (dseq.n() != n) throw ProductMismatch("composition_set: sequence does not factor n");
    PrimeField F(p);
    if (n % p == 0) throw WildCharacteristic("composition_set: characteristic divides n");
    check_key_space(p, n);
    long long remaining = budget;
    for (std::size_t i = 0; i < dseq.size(); ++i)
        charge(remaining, p, dseq[i] - 1 - (shift_normalized && i + 1 == dseq.size() ? 1 : 0));

    if (dseq.size() == 2) {
        std::vector<Key> keys;
        keys.reserve(pow_ll(p, dseq[0] + dseq[1] - 3 + (shift_normalized ? 0 : 1)));
        append_pair_keys(keys, n, dseq[0], dseq[1], p, shift_normalized);
        sort_unique(keys);
        return PolySet(F, n, std::move(keys));
    }

    std::vector<Key> keys;
    // right-to-left: enumerate the innermost component, compose outward
    auto rec = [&](auto&& self, std::size_t level, const FqPoly& inner) -> void {
        if (level == 0) {
            keys.push_back(PolySet::encode(inner));
            return;
        }
        const long long d = dseq[level - 1];
        for_each_monic_original(
            p, d, shift_normalized && level == dseq.size(),
            [&](const std::vector<long long>& gc) {
                FqPoly g(F, gc);
                self(self, level - 1,
                     level == dseq.size() ? g : compose(g, inner));
            });
    };
    rec(rec, dseq.size(), FqPoly(F));
    sort_unique(keys);
    return PolySet(F, n, keys);
}

long long oracle_count_D(long long n, const std::vector<OrderedFactorization>& D,
                         long long p, long long budget) {
    if (D.empty()) throw BadArguments("oracle_count_D: empty set");
    std::optional<PolySet> acc;
    for (const auto& d : D) {
        PolySet s = composition_set(n, d, p, budget, /*shift_normalized=*/true);
        acc = acc ? set_intersection(*acc, s) : std::move(s);
    }
    return p * acc->size();
}

long long oracle_count_union(long long n, long long p, long long budget) {
    std::vector<long long> divisors = nontrivial_divisors(n);
    if (divisors.empty()) return 0;
    if (n % p == 0)
        throw WildCharacteristic("oracle_count_union: characteristic divides n");
    check_key_space(p, n);
    // budget-check every pair first (costs add across divisor pairs), then
    // pre-size one flat buffer so the peak stays at one copy of the raw
    // (pre-dedup) key stream
    long long total = 0;
    for (long long d : divisors) {
        long long cost = 1, e = d + n / d - 3;
        while (e-- > 0) {
            if (cost > budget / p)
                throw BudgetExceeded("oracle: enumeration budget exceeded");
            cost *= p;
        }
        total += cost;
        if (total > budget)
            throw BudgetExceeded("oracle: enumeration budget exceeded");
    }
    std::vector<Key> keys;
    keys.reserve(total);
    for (long long d : divisors)
        append_pair_keys(keys, n, d, n / d, p, /*normalized=*/true);
    sort_unique(keys);
    return p * static_cast<long long>(keys.size());
}

long long exhaustive_decomposables(long long n, long long p, long long budget) {
    PrimeField F(p);
    if (n % p == 0)
        throw WildCharacteristic("exhaustive_decomposables: characteristic divides n");
    long long remaining = budget;
    charge(remaining, p, n - 1);
    std::vector<long long> divisors = nontrivial_divisors(n);
    long long count = 0;
    for_each_monic_original(p, n, false, [&](const std::vector<long long>& fc) {
        FqPoly f(F, fc);
        for (long long d : divisors) {
            if (tame_decompose(f, d)) {
                ++count;
                break;
            }
        }
    });
    return count;
}

long long orbit_enumerate(OrbitKind kind, long long d, long long e, long long p,
                          long long budget) {
    if (d < 2 || e < 1 || std::gcd(d, e) != 1)
        throw BadArguments("orbit_enumerate: need coprime d >= 2, e >= 1");
    PrimeField F(p);
    if ((d * e) % p == 0 || d % p == 0)
        throw BadArguments("orbit_enumerate: characteristic divides d*e");
    check_key_space(p, d);
    std::vector<Key> keys;
    // shift orbits have size exactly p (the x^{d-1} coefficient moves by
    // d*a), so crossing with all shifts and deduplicating equals p times
    // the number of distinct orbit representatives with that coefficient 0
    const long long dinv = F.inv(d % p);
    auto add_orbit = [&](const FqPoly& g) {
        long long a = F.mul(F.neg(g[d - 1]), dinv);
        keys.push_back(PolySet::encode(original_shift(g, a)));
    };
    if (kind == OrbitKind::exponential) {
        if (e == 1) {
            long long remaining = budget;
            charge(remaining, p, d - 1);
            for_each_monic_original(p, d, false,
                                    [&](const std::vector<long long>& gc) {
                                        add_orbit(FqPoly(F, gc));
                                    });
        } else {
            const long long s = d / e, k = d - s * e;
            long long remaining = budget;
            charge(remaining, p, s);
            // all monic w of degree s, free constant term included
            std::vector<long long> wc(s + 1, 0);
            wc[s] = 1;
            for (;;) {
                add_orbit(FqPoly::monomial(F, k) * FqPoly(F, wc).pow(e));
                long long i = 0;
                for (; i < s; ++i) {
                    if (++wc[i] < p) break;
                    wc[i] = 0;
                }
                if (i == s) break;
            }
        }
    } else {
        for (long long z = 1; z < p; ++z) add_orbit(dickson(d, F.pow(z, e), F));
    }
    sort_unique(keys);
    return p * static_cast<long long>(keys.size());
}

}  // namespace tamecount
