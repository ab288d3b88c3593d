#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "kummerlab/fp.hpp"
#include "kummerlab/models.hpp"

namespace kummerlab {

// (-1)^{(p-1)/2} as a field element.
Fp parity_sign(const PrimeContext& ctx);

// N-truncated Gauss series at half-integer parameters:
//   sum_{r=0}^{N} binom(N, r)^2 lambda^r,  N = (p-1)/2.
// The coefficients agree with binom(-1/2, r)^2 mod p.
Fp trunc_2f1(const PrimeContext& ctx, Fp lambda);

// N-truncated Appell series, multinomial coefficient form:
//   sum_{i+j+k=N} multinom(N; i,j,k) binom(N,i) binom(N,j) z1^i z2^j.
Fp trunc_appell_f2(const PrimeContext& ctx, Fp z1, Fp z2);

// Closed-form count of the KummerJ6 model:
//   sum_{m+n=N} sum_{i+j+k+l=N} multinom(N; i,j,k,l)
//       multinom(N; m-i, m-j, n-k, n-l) l1^i l2^j (l1 l2)^k.
Fp kummer_count_formula(const PrimeContext& ctx, Fp lambda1, Fp lambda2);

// The same value through its generating-function form,
//   (-1)^N sum_{m+n=N} binom(N,m) binom(N,n) [t^N] (A^m B^n)
// with A = (t-1)(l2 t - l1), B = (t - l1)(l2 t - 1). O(N^2) instead of
// O(N^4); this is what report sweeps evaluate at large p.
Fp kummer_count_fast(const PrimeContext& ctx, Fp lambda1, Fp lambda2);

struct IdentitySides {
    Fp lhs;  // kummer_count_formula at (k1^2, k2^2)
    Fp rhs;  // (-1)^{(p-1)/2} * trunc_appell_f2 at the mapped (z1, z2)
};

// Both sides of the main two-parameter identity; undefined on k1 + k2 = 0.
MapResult<IdentitySides> identity_sides(const PrimeContext& ctx, Fp k1, Fp k2);

// Closed-form value the sweep engine cross-fills into reports, where one
// exists for the model:
//   legendre   -(-1)^N trunc_2f1(lambda)
//   kummer-j4  trunc_2f1(lambda1) * trunc_2f1(lambda2)
//   kummer-j6  kummer_count_formula
//   k3-z       trunc_appell_f2
//   k3-y-gkz   ((-1)(k1+k2)^2)^N * trunc_appell_f2(z1, z2)
std::optional<Fp> closed_form_count(const ModelInstance& m);

// ---- floating-point evaluators (principal branches, |args| inside the
// ---- convergence domain only; no analytic continuation) ----

struct GaussParams {
    double alpha, beta, gamma;
};

struct AppellParams {
    double alpha, beta1, beta2, gamma1, gamma2;
};

struct NonConvergent : std::domain_error {
    explicit NonConvergent(const std::string& what) : std::domain_error(what) {}
};

struct BadParams : std::domain_error {
    explicit BadParams(const std::string& what) : std::domain_error(what) {}
};

struct DomainViolation : std::domain_error {
    explicit DomainViolation(std::string cond)
        : std::domain_error("domain violation: " + cond), condition(std::move(cond)) {}
    std::string condition;
};

// Gauss 2F1 partial sums until the geometric tail estimate drops below tol.
// Throws NonConvergent for |z| >= 1, BadParams for gamma in {0, -1, -2, ...}.
double gauss2f1_float(const GaussParams& params, double z, double tol);

// Appell F2 by diagonal blocks of fixed total degree; the tail is dominated
// by a geometric series in rho = |z1| + |z2|. Same error contract.
double f2_float(const AppellParams& params, double z1, double z2, double tol);

// |LHS - RHS| of the multivariate Clausen factorization
//   F2(b1+b2-1/2; b1, b2; 2b1, 2b2; z1, z2)
//     = (k1+k2)^{2b1+2b2-1} 2F1(b1+b2-1/2, b2; b1+1/2; k1^2)
//                            2F1(b1+b2-1/2, b2; 2b2; 1-k2^2)
// with (z1, z2) the images of (k1, k2) under the moduli map. Throws
// DomainViolation naming the first failed hypothesis.
double clausen_residual(double beta1, double beta2, double k1, double k2, double tol = 1e-13);

}  // namespace kummerlab
