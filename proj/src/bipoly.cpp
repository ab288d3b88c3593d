#include "kummerlab/bipoly.hpp"

#include <algorithm>

#include "json.hpp"

namespace kummerlab {

bool BiPoly::is_zero() const noexcept {
    return std::all_of(c_.begin(), c_.end(), [](Fp x) { return x.v == 0; });
}

Fp BiPoly::eval(const PrimeContext& ctx, Fp a, Fp b) const {
    // Horner in var1 of Horner-in-var2 rows.
    Fp acc = ctx.zero();
    for (int i = d1_; i >= 0; --i) {
        Fp row = ctx.zero();
        for (int j = d2_; j >= 0; --j) row = ctx.add(ctx.mul(row, b), at(i, j));
        acc = ctx.add(ctx.mul(acc, a), row);
    }
    return acc;
}

std::string BiPoly::to_json(const PrimeContext& ctx) const {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i <= d1_; ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j <= d2_; ++j) row.push_back(at(i, j).v);
        rows.push_back(row);
    }
    nlohmann::ordered_json j;
    j["p"] = ctx.p();
    j["coeffs"] = rows;
    return j.dump();
}

bool operator==(const BiPoly& a, const BiPoly& b) {
    const int d1 = std::max(a.d1_, b.d1_), d2 = std::max(a.d2_, b.d2_);
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

BiPoly poly_from_countX(const PrimeContext& ctx) {
    const i64 N = static_cast<i64>(ctx.trunc_order());
    BiPoly out(static_cast<int>(N), static_cast<int>(N));
    for (i64 m = 0; m <= N; ++m) {
        const i64 n = N - m;
        for (i64 i = 0; i <= m; ++i) {
            for (i64 j = 0; j <= m; ++j) {
                for (i64 k = 0; k <= n; ++k) {
                    const i64 l = N - i - j - k;
                    if (l < 0 || l > n) continue;
                    const i64 first[4] = {i, j, k, l};
                    const i64 second[4] = {m - i, m - j, n - k, n - l};
                    Fp term = ctx.mul(ctx.multinomial(static_cast<u64>(N), first),
                                      ctx.multinomial(static_cast<u64>(N), second));
                    const int a = static_cast<int>(i + k), b = static_cast<int>(j + k);
                    out.set(a, b, ctx.add(out.at(a, b), term));
                }
            }
        }
    }
    return out;
}

BiPoly poly_from_countZ(const PrimeContext& ctx) {
    const i64 N = static_cast<i64>(ctx.trunc_order());
    BiPoly out(static_cast<int>(N), static_cast<int>(N));
    for (i64 i = 0; i <= N; ++i) {
        for (i64 j = 0; j + i <= N; ++j) {
            const i64 parts[3] = {i, j, N - i - j};
            Fp coeff = ctx.mul(ctx.multinomial(static_cast<u64>(N), parts),
                               ctx.mul(ctx.binomial(static_cast<u64>(N), i),
                                       ctx.binomial(static_cast<u64>(N), j)));
            out.set(static_cast<int>(i), static_cast<int>(j), coeff);
        }
    }
    return out;
}

BiPoly poly_trunc_2f1(const PrimeContext& ctx) {
    const u64 N = ctx.trunc_order();
    BiPoly out(static_cast<int>(N), 0);
    for (u64 r = 0; r <= N; ++r)
        out.set(static_cast<int>(r), 0, ctx.sqr(ctx.binomial(N, static_cast<i64>(r))));
    return out;
}

BiPoly poly_trunc_appell(const PrimeContext& ctx) {
    const u64 N = ctx.trunc_order();
    BiPoly out(static_cast<int>(N), static_cast<int>(N));
    for (u64 m = 0; m <= N; ++m) {
        for (u64 n = 0; n + m <= N; ++n) {
            Fp num = ctx.mul(ctx.pochhammer_half(m + n),
                             ctx.mul(ctx.pochhammer_half(m), ctx.pochhammer_half(n)));
            Fp den = ctx.mul(ctx.sqr(ctx.inverse_factorial(m)), ctx.sqr(ctx.inverse_factorial(n)));
            out.set(static_cast<int>(m), static_cast<int>(n), ctx.mul(num, den));
        }
    }
    return out;
}

namespace {

BiPoly add(const BiPoly& a, const BiPoly& b, const PrimeContext& ctx) {
    BiPoly out(std::max(a.deg1(), b.deg1()), std::max(a.deg2(), b.deg2()));
    for (int i = 0; i <= out.deg1(); ++i)
        for (int j = 0; j <= out.deg2(); ++j) out.set(i, j, ctx.add(a.at(i, j), b.at(i, j)));
    return out;
}

BiPoly sub(const BiPoly& a, const BiPoly& b, const PrimeContext& ctx) {
    BiPoly out(std::max(a.deg1(), b.deg1()), std::max(a.deg2(), b.deg2()));
    for (int i = 0; i <= out.deg1(); ++i)
        for (int j = 0; j <= out.deg2(); ++j) out.set(i, j, ctx.sub(a.at(i, j), b.at(i, j)));
    return out;
}

BiPoly scale(const BiPoly& a, Fp s, const PrimeContext& ctx) {
    BiPoly out(a.deg1(), a.deg2());
    for (int i = 0; i <= a.deg1(); ++i)
        for (int j = 0; j <= a.deg2(); ++j) out.set(i, j, ctx.mul(a.at(i, j), s));
    return out;
}

// multiply by (var1)^s1 (var2)^s2
BiPoly shift(const BiPoly& a, int s1, int s2) {
    BiPoly out(a.deg1() + s1, a.deg2() + s2);
    for (int i = 0; i <= a.deg1(); ++i)
        for (int j = 0; j <= a.deg2(); ++j) out.set(i + s1, j + s2, a.at(i, j));
    return out;
}

}  // namespace

BiPoly derivative(const PrimeContext& ctx, const BiPoly& f, PolyVar var) {
    if (var == PolyVar::First) {
        BiPoly out(std::max(f.deg1() - 1, 0), f.deg2());
        for (int i = 1; i <= f.deg1(); ++i)
            for (int j = 0; j <= f.deg2(); ++j)
                out.set(i - 1, j, ctx.mul(f.at(i, j), ctx.from_uint(static_cast<u64>(i))));
        return out;
    }
    BiPoly out(f.deg1(), std::max(f.deg2() - 1, 0));
    for (int i = 0; i <= f.deg1(); ++i)
        for (int j = 1; j <= f.deg2(); ++j)
            out.set(i, j - 1, ctx.mul(f.at(i, j), ctx.from_uint(static_cast<u64>(j))));
    return out;
}

BiPoly apply_gauss(const PrimeContext& ctx, const GaussOperator& op, const BiPoly& f) {
    const bool v1 = op.var == PolyVar::First;
    const int s1 = v1 ? 1 : 0, s2 = v1 ? 0 : 1;
    BiPoly f1 = derivative(ctx, f, op.var);
    BiPoly f2 = derivative(ctx, f1, op.var);

    BiPoly acc = sub(shift(f2, s1, s2), shift(f2, 2 * s1, 2 * s2), ctx);       // z(1-z) f''
    acc = add(acc, scale(f1, op.gamma, ctx), ctx);                             // gamma f'
    Fp abc = ctx.add(ctx.add(op.alpha, op.beta), ctx.one());
    acc = sub(acc, shift(scale(f1, abc, ctx), s1, s2), ctx);                   // -(a+b+1) z f'
    acc = sub(acc, scale(f, ctx.mul(op.alpha, op.beta), ctx), ctx);            // -ab f
    return acc;
}

BiPoly apply_appell(const PrimeContext& ctx, const AppellOperator& op, const BiPoly& f) {
    const bool first = op.index == 1;
    const PolyVar va = first ? PolyVar::First : PolyVar::Second;
    const PolyVar vb = first ? PolyVar::Second : PolyVar::First;
    const Fp beta_a = first ? op.beta1 : op.beta2;
    const Fp gamma_a = first ? op.gamma1 : op.gamma2;
    const int s1 = first ? 1 : 0, s2 = first ? 0 : 1;

    BiPoly fa = derivative(ctx, f, va);
    BiPoly fb = derivative(ctx, f, vb);
    BiPoly faa = derivative(ctx, fa, va);
    BiPoly fab = derivative(ctx, fa, vb);

    BiPoly acc = sub(shift(faa, s1, s2), shift(faa, 2 * s1, 2 * s2), ctx);     // z_a(1-z_a) f_aa
    acc = sub(acc, shift(fab, 1, 1), ctx);                                     // -z1 z2 f_ab
    acc = add(acc, scale(fa, gamma_a, ctx), ctx);                              // gamma_a f_a
    Fp abc = ctx.add(ctx.add(op.alpha, beta_a), ctx.one());
    acc = sub(acc, shift(scale(fa, abc, ctx), s1, s2), ctx);                   // -(a+b_a+1) z_a f_a
    acc = sub(acc, shift(scale(fb, beta_a, ctx), 1 - s1, 1 - s2), ctx);        // -b_a z_b f_b
    acc = sub(acc, scale(f, ctx.mul(op.alpha, beta_a), ctx), ctx);             // -a b_a f
    return acc;
}

}  // namespace kummerlab
