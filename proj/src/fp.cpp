#include "kummerlab/fp.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kummerlab {

namespace {

u64 mulmod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 e, u64 m) noexcept {
    u64 r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

u64 PrimeContext::prime_cap() {
    static const u64 cap = [] {
        if (const char* env = std::getenv("KUMMERLAB_MAX_P")) {
            char* end = nullptr;
            u64 v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v >= 3) return v;
        }
        return u64{1} << 20;
    }();
    return cap;
}

PrimeContext::PrimeContext(u64 p) : p_(p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("PrimeContext: p must be an odd prime >= 3, got " + std::to_string(p));
    if (p > prime_cap())
        throw std::invalid_argument("PrimeContext: p exceeds cap " + std::to_string(prime_cap()) +
                                    " (override with KUMMERLAB_MAX_P)");
    half_ = Fp{(p + 1) / 2};

    fact_.resize(p);
    fact_[0] = 1;
    for (u64 k = 1; k < p; ++k) fact_[k] = mulmod(fact_[k - 1], k, p);

    inv_fact_.resize(p);
    inv_fact_[p - 1] = powmod(fact_[p - 1], p - 2, p);
    for (u64 k = p - 1; k > 0; --k) inv_fact_[k - 1] = mulmod(inv_fact_[k], k, p);

    residue_.assign(p, 0);
    for (u64 b = 1; b <= (p - 1) / 2; ++b) residue_[mulmod(b, b, p)] = 1;
    for (u64 a = 1; a < p; ++a)
        if (residue_[a] == 0) residue_[a] = -1;
}

Fp PrimeContext::from_int(i64 x) const noexcept {
    i64 r = x % static_cast<i64>(p_);
    if (r < 0) r += static_cast<i64>(p_);
    return Fp{static_cast<u64>(r)};
}

Fp PrimeContext::pow(Fp a, u64 e) const noexcept { return Fp{powmod(a.v, e, p_)}; }

Fp PrimeContext::inv(Fp a) const {
    if (a.v == 0) throw std::domain_error("PrimeContext::inv: zero has no inverse");
    return pow(a, p_ - 2);
}

Fp PrimeContext::factorial(u64 k) const {
    if (k >= p_) throw std::domain_error("PrimeContext::factorial: k out of table range");
    return Fp{fact_[k]};
}

Fp PrimeContext::inverse_factorial(u64 k) const {
    if (k >= p_) throw std::domain_error("PrimeContext::inverse_factorial: k out of table range");
    return Fp{inv_fact_[k]};
}

Fp PrimeContext::binomial(u64 n, i64 k) const {
    if (n >= p_) throw std::domain_error("PrimeContext::binomial: n out of table range");
    if (k < 0 || static_cast<u64>(k) > n) return zero();
    u64 kk = static_cast<u64>(k);
    return Fp{mulmod(fact_[n], mulmod(inv_fact_[kk], inv_fact_[n - kk], p_), p_)};
}

Fp PrimeContext::multinomial(u64 n, std::span<const i64> parts) const {
    if (n >= p_) throw std::domain_error("PrimeContext::multinomial: n out of table range");
    i64 sum = 0;
    for (i64 a : parts) {
        if (a < 0) return zero();
        sum += a;
    }
    if (sum != static_cast<i64>(n)) return zero();
    u64 r = fact_[n];
    for (i64 a : parts) r = mulmod(r, inv_fact_[static_cast<u64>(a)], p_);
    return Fp{r};
}

Fp PrimeContext::pochhammer_half(u64 k) const {
    if (k > trunc_order())
        throw std::domain_error("PrimeContext::pochhammer_half: k beyond (p-1)/2");
    u64 r = 1;
    for (u64 i = 0; i < k; ++i) r = mulmod(r, half_.v + i, p_);
    return Fp{r};
}

}  // namespace kummerlab
