#pragma once

#include <string>
#include <vector>

#include "kummerlab/fp.hpp"

namespace kummerlab {

enum class PolyVar { First, Second };

/// Dense bivariate polynomial over F_p with per-variable degree bounds.
/// Trailing zero rows/columns are permitted; equality zero-extends.
class BiPoly {
public:
    BiPoly() : BiPoly(0, 0) {}
    BiPoly(int d1, int d2)
        : d1_(d1), d2_(d2), c_(static_cast<std::size_t>(d1 + 1) * static_cast<std::size_t>(d2 + 1)) {}

    int deg1() const noexcept { return d1_; }
    int deg2() const noexcept { return d2_; }

    Fp at(int i, int j) const noexcept {
        if (i < 0 || j < 0 || i > d1_ || j > d2_) return Fp{0};
        return c_[idx(i, j)];
    }
    void set(int i, int j, Fp v) { c_[idx(i, j)] = v; }

    bool is_zero() const noexcept;
    Fp eval(const PrimeContext& ctx, Fp a, Fp b) const;

    // {"p": int, "coeffs": [[int]]}, coeffs[i][j] the coefficient of
    // (var1)^i (var2)^j.
    std::string to_json(const PrimeContext& ctx) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b);

private:
    std::size_t idx(int i, int j) const noexcept {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(d2_ + 1) +
               static_cast<std::size_t>(j);
    }
    int d1_, d2_;
    std::vector<Fp> c_;
};

/// Gauss hypergeometric operator z(1-z) d^2/dz^2 + (gamma - (alpha+beta+1) z)
/// d/dz - alpha beta, acting formally in the selected variable.
struct GaussOperator {
    Fp alpha, beta, gamma;
    PolyVar var;
    // 2 alpha = 2 beta = gamma = 1.
    static GaussOperator standard(const PrimeContext& ctx, PolyVar var) {
        return {ctx.half(), ctx.half(), ctx.one(), var};
    }
};

/// One of the two Appell F2 system operators (rank-4 holonomic system).
struct AppellOperator {
    Fp alpha, beta1, beta2, gamma1, gamma2;
    int index;  // 1 or 2
    // 2 alpha = 2 beta1 = 2 beta2 = gamma1 = gamma2 = 1.
    static AppellOperator standard(const PrimeContext& ctx, int index) {
        return {ctx.half(), ctx.half(), ctx.half(), ctx.one(), ctx.one(), index};
    }
};

// The KummerJ6 counting function as a polynomial in (lambda1, lambda2);
// evaluating it anywhere equals kummer_count_formula.
BiPoly poly_from_countX(const PrimeContext& ctx);

// The K3Z counting function as a polynomial in (z1, z2), multinomial form.
BiPoly poly_from_countZ(const PrimeContext& ctx);

// The truncated Gauss series as a univariate polynomial in var1.
BiPoly poly_trunc_2f1(const PrimeContext& ctx);

// The truncated Appell series built from Pochhammer-form coefficients
// (1/2)_{m+n} (1/2)_m (1/2)_n / ((1)_m (1)_n m! n!); equals
// poly_from_countZ coefficient-wise mod p.
BiPoly poly_trunc_appell(const PrimeContext& ctx);

BiPoly derivative(const PrimeContext& ctx, const BiPoly& f, PolyVar var);
BiPoly apply_gauss(const PrimeContext& ctx, const GaussOperator& op, const BiPoly& f);
BiPoly apply_appell(const PrimeContext& ctx, const AppellOperator& op, const BiPoly& f);

}  // namespace kummerlab
