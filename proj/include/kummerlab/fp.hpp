#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace kummerlab {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Canonical residue in [0, p). Plain data; the owning PrimeContext defines p.
struct Fp {
    u64 v = 0;
    friend bool operator==(Fp, Fp) = default;
};

// Deterministic Miller-Rabin, valid for all 64-bit n.
bool is_prime(u64 n) noexcept;

/// Arithmetic substrate for one odd prime p: factorial and inverse-factorial
/// tables, the quadratic-residue table, and the residue (p+1)/2 standing in
/// for 1/2. Immutable after construction; safe for concurrent reads.
class PrimeContext {
public:
    // Rejects anything that is not an odd prime in [3, prime_cap()].
    explicit PrimeContext(u64 p);

    u64 p() const noexcept { return p_; }
    // N = (p-1)/2, the truncation order of every series in this library.
    u64 trunc_order() const noexcept { return (p_ - 1) / 2; }
    Fp half() const noexcept { return half_; }

    Fp zero() const noexcept { return Fp{0}; }
    Fp one() const noexcept { return Fp{1}; }
    Fp from_uint(u64 x) const noexcept { return Fp{x % p_}; }
    Fp from_int(i64 x) const noexcept;

    Fp add(Fp a, Fp b) const noexcept {
        u64 s = a.v + b.v;
        return Fp{s >= p_ ? s - p_ : s};
    }
    Fp sub(Fp a, Fp b) const noexcept {
        return Fp{a.v >= b.v ? a.v - b.v : a.v + (p_ - b.v)};
    }
    Fp neg(Fp a) const noexcept { return Fp{a.v == 0 ? 0 : p_ - a.v}; }
    Fp mul(Fp a, Fp b) const noexcept {
        return Fp{static_cast<u64>((static_cast<u128>(a.v) * b.v) % p_)};
    }
    Fp sqr(Fp a) const noexcept { return mul(a, a); }
    Fp pow(Fp a, u64 e) const noexcept;
    Fp inv(Fp a) const;  // throws std::domain_error on zero
    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

    // chi_p(a) in {-1, 0, +1} via the residue table.
    int legendre_symbol(Fp a) const noexcept { return residue_[a.v]; }
    // a^{(p-1)/2} by square-and-multiply. Agrees with legendre_symbol under
    // -1 <-> p-1 but deliberately shares no code path with it.
    Fp euler_pow(Fp a) const noexcept { return pow(a, trunc_order()); }

    Fp factorial(u64 k) const;          // k <= p-1
    Fp inverse_factorial(u64 k) const;  // k <= p-1
    // n over k; zero outside 0 <= k <= n, domain error for n > p-1.
    Fp binomial(u64 n, i64 k) const;
    // n! / (a_1! ... a_r!) when the parts are nonnegative and sum to n,
    // zero otherwise; domain error for n > p-1 (tables insufficient).
    Fp multinomial(u64 n, std::span<const i64> parts) const;
    // (1/2)_k as a residue; k <= (p-1)/2 or the symbol hits a multiple of p.
    Fp pochhammer_half(u64 k) const;

    // Largest admissible p; 2^20 unless overridden by KUMMERLAB_MAX_P.
    static u64 prime_cap();

private:
    u64 p_;
    Fp half_;
    std::vector<u64> fact_, inv_fact_;
    std::vector<std::int8_t> residue_;
};

}  // namespace kummerlab
