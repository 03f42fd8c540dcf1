#include "tamecount/decompose.hpp"

#include <numeric>
#include <stdexcept>

#include "tamecount/errors.hpp"

namespace tamecount {

std::vector<FqPoly> h_adic_expand(const FqPoly& f, const FqPoly& h) {
    if (h.degree() < 1) throw BadArguments("h_adic_expand: deg h must be >= 1");
    std::vector<FqPoly> digits;
    FqPoly rem = f;
    while (!rem.is_zero()) {
        auto [q, r] = rem.divmod(h);
        digits.push_back(std::move(r));
        rem = std::move(q);
    }
    if (digits.empty()) digits.push_back(FqPoly(f.field()));
    return digits;
}

std::optional<std::pair<FqPoly, FqPoly>> tame_decompose(const FqPoly& f, long long d) {
    if (!f.is_monic_original())
        throw NotMonicOriginal("tame_decompose: f must be monic original");
    const long long n = f.degree();
    if (d <= 1 || d >= n || n % d != 0)
        throw BadDivisor("tame_decompose: d must be a nontrivial divisor of deg f");
    const PrimeField& F = f.field();
    if (d % F.p() == 0)
        throw BadDivisor("tame_decompose: characteristic divides d (wild case)");
    const long long e = n / d;
    const long long dinv = F.inv(d % F.p());

    // coefficients of f at degrees n-1 .. n-e+1 depend on h alone, one new
    // h-coefficient each, linearly with slope d
    std::vector<long long> hc(e + 1, 0);
    hc[e] = 1;
    for (long long j = 1; j < e; ++j) {
        FqPoly hp = FqPoly(F, hc).pow(d);
        long long delta = F.sub(f[n - j], hp[n - j]);
        hc[e - j] = F.mul(delta, dinv);
    }
    FqPoly h(F, std::move(hc));

    std::vector<FqPoly> digits = h_adic_expand(f, h);
    std::vector<long long> gc;
    gc.reserve(digits.size());
    for (const FqPoly& c : digits) {
        if (c.degree() > 0) return std::nullopt;
        gc.push_back(c[0]);
    }
    FqPoly g(F, std::move(gc));
    if (g.degree() != d) return std::nullopt;  // cannot happen for monic f
    return std::make_pair(std::move(g), std::move(h));
}

namespace {

// exact e-th root of a monic polynomial of degree s*e, if it exists
std::optional<FqPoly> monic_eth_root(const FqPoly& u, long long e) {
    const PrimeField& F = u.field();
    if (e % F.p() == 0 || !u.is_monic() || u.degree() % e != 0) return std::nullopt;
    const long long s = u.degree() / e;
    const long long einv = F.inv(e % F.p());
    std::vector<long long> wc(s + 1, 0);
    wc[s] = 1;
    for (long long j = 1; j <= s; ++j) {
        FqPoly wp = FqPoly(F, wc).pow(e);
        long long delta = F.sub(u[s * e - j], wp[s * e - j]);
        wc[s - j] = F.mul(delta, einv);
    }
    FqPoly w(F, std::move(wc));
    if (w.pow(e) != u) return std::nullopt;
    return w;
}

}  // namespace

std::optional<CollisionForm> classify_two_collision(const FqPoly& f, long long d,
                                                    long long e) {
    if (e < 2 || d <= e || std::gcd(d, e) != 1)
        throw BadArguments("classify_two_collision: need coprime d > e >= 2");
    const PrimeField& F = f.field();
    if ((d * e) % F.p() == 0)
        throw BadArguments("classify_two_collision: characteristic divides d*e");
    const long long n = d * e;
    if (f.degree() != n || !f.is_monic_original()) return std::nullopt;
    if (!tame_decompose(f, d) || !tame_decompose(f, e)) return std::nullopt;

    // a is the subdiagonal coefficient over n; both normal forms have a
    // vanishing x^{n-1} term before shifting
    const long long a = F.mul(f[n - 1], F.inv(n % F.p()));
    FqPoly f0 = original_shift(f, F.neg(a));

    // exponential: f0 = x^{ke} w(x^e)^e, supported on multiples of e
    bool on_multiples = true;
    for (long long i = 0; i <= n; ++i)
        if (i % e != 0 && f0[i] != 0) on_multiples = false;
    if (on_multiples) {
        std::vector<long long> vc(d + 1, 0);
        for (long long i = 0; i <= d; ++i) vc[i] = f0[i * e];
        FqPoly v(F, std::move(vc));  // v(y) = y^k w(y)^e
        const long long k = d % e;
        bool divisible = true;
        for (long long i = 0; i < k; ++i)
            if (v[i] != 0) divisible = false;
        if (divisible) {
            std::vector<long long> uc(d - k + 1, 0);
            for (long long i = k; i <= d; ++i) uc[i - k] = v[i];
            if (auto w = monic_eth_root(FqPoly(F, std::move(uc)), e))
                return CollisionForm(ExponentialForm{std::move(*w), a});
        }
    }

    // trigonometric: f0 = T_n(x, z) with z read off the x^{n-2} coefficient
    const long long z = F.mul(F.neg(f0[n - 2]), F.inv(n % F.p()));
    if (z != 0 && f0 == dickson(n, z, F))
        return CollisionForm(TrigonometricForm{z, a});
    return std::nullopt;
}

std::pair<FqPoly, FqPoly> ritt_move(const FqPoly& g1, const FqPoly& g2) {
    const long long d1 = g1.degree(), d2 = g2.degree();
    if (d1 < 2 || d2 < 2 || std::gcd(d1, d2) != 1)
        throw BadArguments("ritt_move: degrees must be coprime and >= 2");
    if (!g1.is_monic_original() || !g2.is_monic_original())
        throw NotMonicOriginal("ritt_move: components must be monic original");
    const PrimeField& F = g1.field();
    FqPoly f = compose(g1, g2);
    const long long d = std::max(d1, d2), e = std::min(d1, d2);

    std::optional<CollisionForm> cf = classify_two_collision(f, d, e);
    if (!cf) throw NoSwapExists("ritt_move: composition is not a 2-collision");

    FqPoly outer(F), inner(F);
    if (const auto* exp = std::get_if<ExponentialForm>(&*cf)) {
        const long long k = d % e;
        FqPoly xe = FqPoly::monomial(F, e);
        if (d2 == d) {
            outer = FqPoly::monomial(F, k) * exp->w.pow(e);  // x^k w^e
            inner = xe;
        } else {
            outer = xe;
            inner = FqPoly::monomial(F, k) * compose(exp->w, xe);  // x^k w(x^e)
        }
        // f = (outer o inner)^{[a]} = outer^{[inner(a)]} o inner^{[a]}
        outer = original_shift(outer, inner.eval(exp->a));
        inner = original_shift(inner, exp->a);
    } else {
        const auto& trig = std::get<TrigonometricForm>(*cf);
        inner = original_shift(dickson(d1, trig.z, F), trig.a);
        std::vector<long long> gc;
        for (const FqPoly& c : h_adic_expand(f, inner)) {
            if (c.degree() > 0)
                throw std::logic_error("ritt_move: Dickson inner does not divide");
            gc.push_back(c[0]);
        }
        outer = FqPoly(F, std::move(gc));
    }
    if (compose(outer, inner) != f)
        throw std::logic_error("ritt_move: swapped pair does not recompose");
    return {std::move(outer), std::move(inner)};
}

GcdSplit gcd_split(const FqPoly& g, const FqPoly& h, const FqPoly& g2,
                   const FqPoly& h2) {
    for (const FqPoly* f : {&g, &h, &g2, &h2})
        if (!f->is_monic_original())
            throw NotMonicOriginal("gcd_split: components must be monic original");
    if (compose(g, h) != compose(g2, h2))
        throw NotACollision("gcd_split: the two compositions differ");
    const PrimeField& F = g.field();
    const long long l = std::gcd(g.degree(), g2.degree());
    const long long r = std::gcd(h.degree(), h2.degree());

    GcdSplit out{FqPoly(F), FqPoly(F), FqPoly(F), FqPoly(F)};
    if (l == g.degree()) {
        out.a = g;
        out.u = FqPoly::x(F);
    } else if (l == 1) {
        out.a = FqPoly::x(F);
        out.u = g;
    } else {
        auto au = tame_decompose(g, l);
        if (!au) throw NotACollision("gcd_split: outer gcd component does not split");
        out.a = std::move(au->first);
        out.u = std::move(au->second);
    }
    if (r == h.degree()) {
        out.v = FqPoly::x(F);
        out.b = h;
    } else if (r == 1) {
        out.v = h;
        out.b = FqPoly::x(F);
    } else {
        auto vb = tame_decompose(h, h.degree() / r);
        if (!vb) throw NotACollision("gcd_split: inner gcd component does not split");
        out.v = std::move(vb->first);
        out.b = std::move(vb->second);
    }
    return out;
}

}  // namespace tamecount
