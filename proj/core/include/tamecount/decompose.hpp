#ifndef TAMECOUNT_DECOMPOSE_HPP
#define TAMECOUNT_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "tamecount/fqpoly.hpp"

namespace tamecount {

/// Digits c_0..c_m with f = sum c_i h^i and deg c_i < deg h.
std::vector<FqPoly> h_adic_expand(const FqPoly& f, const FqPoly& h);

/// The unique (g, h) in P_d x P_{n/d} with f = g o h, if it exists.
/// Requires f monic original of degree n, d | n with 1 < d < n, p coprime
/// to d. Recovers h by coefficient matching from the top, then accepts iff
/// the h-adic digits of f are all constants.
std::optional<std::pair<FqPoly, FqPoly>> tame_decompose(const FqPoly& f, long long d);

/// f = (x^k w^e o x^e)^{[a]} with d = se + k, 1 <= k < e, deg w = s.
struct ExponentialForm {
    FqPoly w;
    long long a;
};

/// f = T_{de}(x, z)^{[a]} with z != 0.
struct TrigonometricForm {
    long long z;
    long long a;
};

using CollisionForm = std::variant<ExponentialForm, TrigonometricForm>;

/// Normal form of a 2-collision of degree d*e (d > e >= 2 coprime, p coprime
/// to d*e). For e = 2 the trigonometric case folds into the exponential one
/// and is reported as such. Empty result means f is not a 2-collision.
std::optional<CollisionForm> classify_two_collision(const FqPoly& f, long long d,
                                                    long long e);

/// Swaps adjacent components of coprime degrees: returns (g1*, g2*) with
/// g1 o g2 = g1* o g2*, deg g1* = deg g2, deg g2* = deg g1.
std::pair<FqPoly, FqPoly> ritt_move(const FqPoly& g1, const FqPoly& g2);

/// The unique boundary components of Prop-style gcd splitting.
struct GcdSplit {
    FqPoly a;  // degree gcd(deg g, deg g2), with g = a o u
    FqPoly u;
    FqPoly v;  // h = v o b
    FqPoly b;  // degree gcd(deg h, deg h2)
};

/// For two decompositions g o h = g2 o h2 of one polynomial, splits off the
/// common outer part a and the common inner part b.
GcdSplit gcd_split(const FqPoly& g, const FqPoly& h, const FqPoly& g2,
                   const FqPoly& h2);

}  // namespace tamecount

#endif
