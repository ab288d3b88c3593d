#include "kummerlab/series.hpp"

#include <cmath>
#include <vector>

namespace kummerlab {

Fp parity_sign(const PrimeContext& ctx) {
    return ctx.trunc_order() % 2 == 0 ? ctx.one() : ctx.neg(ctx.one());
}

Fp trunc_2f1(const PrimeContext& ctx, Fp lambda) {
    const u64 N = ctx.trunc_order();
    Fp acc = ctx.zero();
    Fp power = ctx.one();
    for (u64 r = 0; r <= N; ++r) {
        acc = ctx.add(acc, ctx.mul(ctx.sqr(ctx.binomial(N, static_cast<i64>(r))), power));
        power = ctx.mul(power, lambda);
    }
    return acc;
}

namespace {

std::vector<Fp> powers(const PrimeContext& ctx, Fp z, u64 up_to) {
    std::vector<Fp> pw(up_to + 1);
    pw[0] = ctx.one();
    for (u64 i = 1; i <= up_to; ++i) pw[i] = ctx.mul(pw[i - 1], z);
    return pw;
}

}  // namespace

Fp trunc_appell_f2(const PrimeContext& ctx, Fp z1, Fp z2) {
    const i64 N = static_cast<i64>(ctx.trunc_order());
    const auto p1 = powers(ctx, z1, static_cast<u64>(N));
    const auto p2 = powers(ctx, z2, static_cast<u64>(N));
    Fp acc = ctx.zero();
    for (i64 i = 0; i <= N; ++i) {
        for (i64 j = 0; j + i <= N; ++j) {
            const i64 k = N - i - j;
            const i64 parts[3] = {i, j, k};
            Fp coeff = ctx.mul(ctx.multinomial(static_cast<u64>(N), parts),
                               ctx.mul(ctx.binomial(static_cast<u64>(N), i),
                                       ctx.binomial(static_cast<u64>(N), j)));
            acc = ctx.add(acc, ctx.mul(coeff, ctx.mul(p1[static_cast<std::size_t>(i)],
                                                      p2[static_cast<std::size_t>(j)])));
        }
    }
    return acc;
}

Fp kummer_count_formula(const PrimeContext& ctx, Fp lambda1, Fp lambda2) {
    const i64 N = static_cast<i64>(ctx.trunc_order());
    const auto p1 = powers(ctx, lambda1, static_cast<u64>(N));
    const auto p2 = powers(ctx, lambda2, static_cast<u64>(N));
    const auto p12 = powers(ctx, ctx.mul(lambda1, lambda2), static_cast<u64>(N));
    Fp acc = ctx.zero();
    for (i64 m = 0; m <= N; ++m) {
        const i64 n = N - m;
        for (i64 i = 0; i <= m; ++i) {
            for (i64 j = 0; j <= m; ++j) {
                for (i64 k = 0; k <= n; ++k) {
                    const i64 l = N - i - j - k;
                    if (l < 0 || l > n) continue;
                    const i64 first[4] = {i, j, k, l};
                    const i64 second[4] = {m - i, m - j, n - k, n - l};
                    Fp coeff = ctx.mul(ctx.multinomial(static_cast<u64>(N), first),
                                       ctx.multinomial(static_cast<u64>(N), second));
                    Fp mono = ctx.mul(p1[static_cast<std::size_t>(i)],
                                      ctx.mul(p2[static_cast<std::size_t>(j)],
                                              p12[static_cast<std::size_t>(k)]));
                    acc = ctx.add(acc, ctx.mul(coeff, mono));
                }
            }
        }
    }
    return acc;
}

namespace {

// multiply a dense coefficient vector by q2 t^2 + q1 t + q0
std::vector<Fp> quad_mul(const PrimeContext& ctx, const std::vector<Fp>& a, Fp q0, Fp q1, Fp q2) {
    std::vector<Fp> out(a.size() + 2, ctx.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = ctx.add(out[i], ctx.mul(a[i], q0));
        out[i + 1] = ctx.add(out[i + 1], ctx.mul(a[i], q1));
        out[i + 2] = ctx.add(out[i + 2], ctx.mul(a[i], q2));
    }
    return out;
}

}  // namespace

Fp kummer_count_fast(const PrimeContext& ctx, Fp lambda1, Fp lambda2) {
    const u64 N = ctx.trunc_order();
    const Fp a0 = lambda1, a1 = ctx.neg(ctx.add(lambda1, lambda2)), a2 = lambda2;
    const Fp b0 = lambda1, b1 = ctx.neg(ctx.add(ctx.one(), ctx.mul(lambda1, lambda2))), b2 = lambda2;

    std::vector<std::vector<Fp>> bpow(N + 1);
    bpow[0] = {ctx.one()};
    for (u64 n = 1; n <= N; ++n) bpow[n] = quad_mul(ctx, bpow[n - 1], b0, b1, b2);

    Fp acc = ctx.zero();
    std::vector<Fp> apow{ctx.one()};
    for (u64 m = 0; m <= N; ++m) {
        if (m > 0) apow = quad_mul(ctx, apow, a0, a1, a2);
        const std::vector<Fp>& bp = bpow[N - m];
        Fp coeff = ctx.zero();
        for (std::size_t i = 0; i < apow.size() && i <= N; ++i) {
            const u64 j = N - i;
            if (j < bp.size()) coeff = ctx.add(coeff, ctx.mul(apow[i], bp[j]));
        }
        Fp weight = ctx.mul(ctx.binomial(N, static_cast<i64>(m)),
                            ctx.binomial(N, static_cast<i64>(N - m)));
        acc = ctx.add(acc, ctx.mul(weight, coeff));
    }
    return ctx.mul(parity_sign(ctx), acc);
}

MapResult<IdentitySides> identity_sides(const PrimeContext& ctx, Fp k1, Fp k2) {
    auto mp = moduli_forward(ctx, k1, k2);
    if (!mp.ok()) return MapResult<IdentitySides>::undefined(mp.vanished());
    Fp lhs = kummer_count_fast(ctx, mp.value().lambda1, mp.value().lambda2);
    Fp rhs = ctx.mul(parity_sign(ctx), trunc_appell_f2(ctx, mp.value().z1, mp.value().z2));
    return MapResult<IdentitySides>(IdentitySides{lhs, rhs});
}

std::optional<Fp> closed_form_count(const ModelInstance& m) {
    const PrimeContext& F = m.ctx();
    switch (m.id()) {
        case ModelId::LegendreCurve:
            return F.neg(F.mul(parity_sign(F), trunc_2f1(F, m.param(0))));
        case ModelId::KummerJ4:
            return F.mul(trunc_2f1(F, m.param(0)), trunc_2f1(F, m.param(1)));
        case ModelId::KummerJ6:
            return kummer_count_fast(F, m.param(0), m.param(1));
        case ModelId::K3Z:
            return trunc_appell_f2(F, m.param(0), m.param(1));
        case ModelId::K3YGkz: {
            auto mp = moduli_forward(F, m.param(0), m.param(1));
            Fp twist = F.euler_pow(F.neg(F.sqr(F.add(m.param(0), m.param(1)))));
            return F.mul(twist, trunc_appell_f2(F, mp.value().z1, mp.value().z2));
        }
        default:
            return std::nullopt;
    }
}

// ---- float evaluators ----

namespace {

bool nonpositive_integer(double g) { return g <= 0.0 && g == std::floor(g); }

}  // namespace

double gauss2f1_float(const GaussParams& params, double z, double tol) {
    if (nonpositive_integer(params.gamma)) throw BadParams("gauss2f1: gamma is a nonpositive integer");
    if (std::abs(z) >= 1.0) throw NonConvergent("gauss2f1: |z| >= 1");
    const double rho = std::abs(z);
    const double cutoff = tol * (1.0 - rho);
    double term = 1.0, sum = 1.0;
    const int warmup = 8 + static_cast<int>(std::abs(params.alpha) + std::abs(params.beta) +
                                            std::abs(params.gamma));
    for (int n = 0; n < 100000; ++n) {
        term *= (params.alpha + n) * (params.beta + n) / ((params.gamma + n) * (n + 1)) * z;
        sum += term;
        if (n >= warmup && std::abs(term) < cutoff) return sum;
    }
    throw NonConvergent("gauss2f1: series did not meet tolerance");
}

double f2_float(const AppellParams& params, double z1, double z2, double tol) {
    if (nonpositive_integer(params.gamma1)) throw BadParams("f2: gamma1 is a nonpositive integer");
    if (nonpositive_integer(params.gamma2)) throw BadParams("f2: gamma2 is a nonpositive integer");
    const double rho = std::abs(z1) + std::abs(z2);
    if (rho >= 1.0) throw NonConvergent("f2: |z1| + |z2| >= 1");
    const double cutoff = tol * (1.0 - rho);
    const int warmup = 8 + static_cast<int>(std::abs(params.alpha) + std::abs(params.beta1) +
                                            std::abs(params.beta2));

    // diag[m] holds the term of bidegree (m, k-m); advance one total degree
    // at a time and stop once a whole diagonal block is below the cutoff.
    std::vector<double> diag{1.0};
    double sum = 1.0;
    for (int k = 0; k < 100000; ++k) {
        std::vector<double> next(static_cast<std::size_t>(k) + 2, 0.0);
        for (int m = 0; m <= k; ++m) {
            const int n = k - m;
            next[static_cast<std::size_t>(m)] = diag[static_cast<std::size_t>(m)] * z2 *
                                                (params.alpha + k) * (params.beta2 + n) /
                                                ((params.gamma2 + n) * (n + 1));
        }
        next[static_cast<std::size_t>(k) + 1] = diag[static_cast<std::size_t>(k)] * z1 *
                                                (params.alpha + k) * (params.beta1 + k) /
                                                ((params.gamma1 + k) * (k + 1));
        double block = 0.0;
        for (double t : next) {
            sum += t;
            block += std::abs(t);
        }
        if (k >= warmup && block < cutoff) return sum;
        diag = std::move(next);
    }
    throw NonConvergent("f2: series did not meet tolerance");
}

double clausen_residual(double beta1, double beta2, double k1, double k2, double tol) {
    if (!(beta1 > 0.0)) throw DomainViolation("Re(beta1) > 0");
    if (!(beta2 > 0.0)) throw DomainViolation("Re(beta2) > 0");
    const double s = k1 + k2;
    if (!(s > 0.0)) throw DomainViolation("k1 + k2 > 0");
    const double z1 = 4.0 * k1 * k2 / (s * s);
    const double z2 = -(k1 * k1 - 1.0) * (k2 * k2 - 1.0) / (s * s);
    if (!(std::abs(z1) + std::abs(z2) < 1.0)) throw DomainViolation("|z1| + |z2| < 1");
    if (!(std::abs(k1 * k1) < 1.0)) throw DomainViolation("|k1^2| < 1");
    if (!(std::abs(1.0 - k2 * k2) < 1.0)) throw DomainViolation("|1 - k2^2| < 1");

    const double alpha = beta1 + beta2 - 0.5;
    double lhs = f2_float({alpha, beta1, beta2, 2.0 * beta1, 2.0 * beta2}, z1, z2, tol);
    double rhs = std::pow(s, 2.0 * beta1 + 2.0 * beta2 - 1.0) *
                 gauss2f1_float({alpha, beta2, beta1 + 0.5}, k1 * k1, tol) *
                 gauss2f1_float({alpha, beta2, 2.0 * beta2}, 1.0 - k2 * k2, tol);
    return std::abs(lhs - rhs);
}

}  // namespace kummerlab
