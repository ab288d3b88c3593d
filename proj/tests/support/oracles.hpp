#pragma once

// Test-only oracles. Everything here recomputes values along routes the
// library does not use: plain signed arithmetic with fresh transcriptions
// of the model equations, extended-gcd inverses instead of Fermat powering,
// and exact rational arithmetic for the moduli map.

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "kummerlab/models.hpp"

namespace kummerlab::testing {

inline i64 md(i64 x, i64 p) {
    x %= p;
    return x < 0 ? x + p : x;
}

inline i64 mm(i64 a, i64 b, i64 p) { return md(md(a, p) * md(b, p), p); }

// Modular inverse by extended gcd.
inline i64 egcd_inv(i64 a, i64 p) {
    i64 old_r = md(a, p), r = p;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw std::domain_error("egcd_inv: not invertible");
    return md(old_s, p);
}

// Right-hand sides transcribed afresh; par holds the model parameters.
inline i64 oracle_rhs(ModelId id, i64 p, std::array<i64, 2> par, i64 b, i64 f) {
    const i64 l1 = par[0], l2 = par[1];
    switch (id) {
        case ModelId::LegendreCurve:
            return mm(mm(f, f - 1, p), f - l1, p);
        case ModelId::KummerJ4:
            return mm(mm(mm(b, b - 1, p), b - l1, p), mm(mm(f, f - 1, p), f - l2, p), p);
        case ModelId::KummerJ6: {
            i64 A = mm(mm(b, b - 1, p), l2 * b - l1, p);
            i64 B = mm(mm(b, b - l1, p), l2 * b - 1, p);
            return mm(f, mm(f - A, f - B, p), p);
        }
        case ModelId::KummerJ6Tilde: {
            i64 bracket = md(mm(mm(1 - l1, 1 - l2, p), mm(b, b, p) * f % p, p) -
                                 mm(mm(b, b - 1, p), l2 * b - l1, p),
                             p);
            return mm(mm(f, 1 - f, p), bracket, p);
        }
        case ModelId::K3Y: {
            i64 c2 = mm(1 - l1, 1 - l2, p);
            i64 c0 = mm(mm(l1 - l2, l1 - l2, p), egcd_inv(c2, p), p);
            i64 fu = md(mm(c2, b * b % p, p) + mm(2 * (l1 + l2), b, p) + c0, p);
            return mm(fu, mm(mm(f, 1 - f, p), f - b, p), p);
        }
        case ModelId::K3Z: {
            i64 lin = md(1 - l2 * f - l1 * b, p);
            return mm(mm(mm(b, 1 - b, p), mm(f, 1 - f, p), p), lin, p);
        }
        case ModelId::RationalS:
            return mm(mm(1 - l1, 1 - l2, p), mm(mm(f, 1 - f, p), f - b, p), p);
        case ModelId::K3YGkz: {
            // lambdas here are (k1, k2); z's from the moduli map.
            i64 k1 = l1, k2 = l2;
            i64 s2 = md((k1 + k2) * (k1 + k2), p);
            i64 inv_s2 = egcd_inv(s2, p);
            i64 z1 = mm(4 * k1 % p * k2 % p, inv_s2, p);
            i64 z2 = md(-mm(mm(k1 * k1 - 1, k2 * k2 - 1, p), inv_s2, p), p);
            i64 lin = md(1 - z2 * f - z1 * b, p);
            return mm(s2, mm(mm(b, 1 - b, p), mm(mm(f, f - 1, p), lin, p), p), p);
        }
    }
    return 0;
}

// #solutions of height^2 = G by full enumeration of the height axis.
inline i64 oracle_count(ModelId id, i64 p, std::array<i64, 2> par) {
    i64 count = 0;
    const bool curve = model_arity(id) == 1;
    for (i64 b = 0; b < (curve ? 1 : p); ++b)
        for (i64 f = 0; f < p; ++f) {
            i64 g = oracle_rhs(id, p, par, b, f);
            for (i64 h = 0; h < p; ++h)
                if ((h * h - g) % p == 0) ++count;
        }
    return count;
}

// Exact rational arithmetic on int64; enough headroom for the moduli map.
struct Rat {
    i64 num, den;
};

inline Rat rat(i64 n, i64 d = 1) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return {n, d};
}

inline Rat operator+(Rat a, Rat b) { return rat(a.num * b.den + b.num * a.den, a.den * b.den); }
inline Rat operator-(Rat a, Rat b) { return rat(a.num * b.den - b.num * a.den, a.den * b.den); }
inline Rat operator*(Rat a, Rat b) { return rat(a.num * b.num, a.den * b.den); }
inline Rat operator/(Rat a, Rat b) { return rat(a.num * b.den, a.den * b.num); }

// Reduction of a rational to F_p; requires p not dividing the denominator.
inline i64 rat_mod(Rat r, i64 p) { return mm(md(r.num, p), egcd_inv(md(r.den, p), p), p); }

}  // namespace kummerlab::testing
