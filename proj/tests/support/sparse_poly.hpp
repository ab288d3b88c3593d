#pragma once

// Independent sparse bivariate polynomial engine. Cross-checks the dense
// BiPoly implementation; shares only the base-field context with it.

#include <map>
#include <utility>

#include "kummerlab/bipoly.hpp"

namespace kummerlab::testing {

struct SPoly {
    // (deg1, deg2) -> nonzero residue
    std::map<std::pair<int, int>, u64> c;
};

inline void sp_accum(SPoly& a, int i, int j, u64 v, const PrimeContext& F) {
    auto key = std::make_pair(i, j);
    u64 next = (a.c.count(key) ? a.c[key] + v : v) % F.p();
    if (next == 0)
        a.c.erase(key);
    else
        a.c[key] = next;
}

inline SPoly sp_from_bipoly(const BiPoly& f, const PrimeContext& F) {
    SPoly out;
    for (int i = 0; i <= f.deg1(); ++i)
        for (int j = 0; j <= f.deg2(); ++j)
            if (f.at(i, j).v != 0) sp_accum(out, i, j, f.at(i, j).v, F);
    return out;
}

inline SPoly sp_scale(const SPoly& a, u64 s, const PrimeContext& F) {
    SPoly out;
    for (const auto& [k, v] : a.c) sp_accum(out, k.first, k.second, v * (s % F.p()) % F.p(), F);
    return out;
}

inline SPoly sp_shift(const SPoly& a, int s1, int s2, const PrimeContext& F) {
    SPoly out;
    for (const auto& [k, v] : a.c) sp_accum(out, k.first + s1, k.second + s2, v, F);
    return out;
}

inline SPoly sp_add(const SPoly& a, const SPoly& b, const PrimeContext& F) {
    SPoly out = a;
    for (const auto& [k, v] : b.c) sp_accum(out, k.first, k.second, v, F);
    return out;
}

inline SPoly sp_sub(const SPoly& a, const SPoly& b, const PrimeContext& F) {
    return sp_add(a, sp_scale(b, F.p() - 1, F), F);
}

inline SPoly sp_deriv(const SPoly& a, int var, const PrimeContext& F) {
    SPoly out;
    for (const auto& [k, v] : a.c) {
        int e = var == 1 ? k.first : k.second;
        if (e == 0) continue;
        int i = var == 1 ? k.first - 1 : k.first;
        int j = var == 1 ? k.second : k.second - 1;
        sp_accum(out, i, j, v * static_cast<u64>(e) % F.p(), F);
    }
    return out;
}

// z(1-z) f'' + (gamma - (alpha+beta+1) z) f' - alpha beta f in variable var.
inline SPoly sp_gauss(u64 alpha, u64 beta, u64 gamma, int var, const SPoly& f,
                      const PrimeContext& F) {
    const int s1 = var == 1 ? 1 : 0, s2 = var == 1 ? 0 : 1;
    SPoly f1 = sp_deriv(f, var, F);
    SPoly f2 = sp_deriv(f1, var, F);
    SPoly acc = sp_sub(sp_shift(f2, s1, s2, F), sp_shift(f2, 2 * s1, 2 * s2, F), F);
    acc = sp_add(acc, sp_scale(f1, gamma, F), F);
    u64 abc = (alpha + beta + 1) % F.p();
    acc = sp_sub(acc, sp_shift(sp_scale(f1, abc, F), s1, s2, F), F);
    acc = sp_sub(acc, sp_scale(f, alpha * beta % F.p(), F), F);
    return acc;
}

// The Appell system operator with the given index, written out directly.
inline SPoly sp_appell(u64 alpha, u64 beta1, u64 beta2, u64 gamma1, u64 gamma2, int index,
                       const SPoly& f, const PrimeContext& F) {
    const int va = index == 1 ? 1 : 2;
    const int vb = index == 1 ? 2 : 1;
    const u64 beta_a = index == 1 ? beta1 : beta2;
    const u64 gamma_a = index == 1 ? gamma1 : gamma2;
    const int s1 = index == 1 ? 1 : 0, s2 = index == 1 ? 0 : 1;

    SPoly fa = sp_deriv(f, va, F);
    SPoly fb = sp_deriv(f, vb, F);
    SPoly faa = sp_deriv(fa, va, F);
    SPoly fab = sp_deriv(fa, vb, F);

    SPoly acc = sp_sub(sp_shift(faa, s1, s2, F), sp_shift(faa, 2 * s1, 2 * s2, F), F);
    acc = sp_sub(acc, sp_shift(fab, 1, 1, F), F);
    acc = sp_add(acc, sp_scale(fa, gamma_a, F), F);
    acc = sp_sub(acc, sp_shift(sp_scale(fa, (alpha + beta_a + 1) % F.p(), F), s1, s2, F), F);
    acc = sp_sub(acc, sp_shift(sp_scale(fb, beta_a, F), 1 - s1, 1 - s2, F), F);
    acc = sp_sub(acc, sp_scale(f, alpha * beta_a % F.p(), F), F);
    return acc;
}

inline bool sp_equals_bipoly(const SPoly& a, const BiPoly& b) {
    for (const auto& [k, v] : a.c)
        if (b.at(k.first, k.second).v != v) return false;
    for (int i = 0; i <= b.deg1(); ++i)
        for (int j = 0; j <= b.deg2(); ++j)
            if (b.at(i, j).v != 0 && !a.c.count({i, j})) return false;
    return true;
}

inline u64 sp_eval(const SPoly& a, u64 x, u64 y, const PrimeContext& F) {
    u64 acc = 0;
    for (const auto& [k, v] : a.c) {
        u64 term = v;
        for (int i = 0; i < k.first; ++i) term = term * x % F.p();
        for (int j = 0; j < k.second; ++j) term = term * y % F.p();
        acc = (acc + term) % F.p();
    }
    return acc;
}

}  // namespace kummerlab::testing
