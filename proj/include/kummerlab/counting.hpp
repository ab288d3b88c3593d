#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kummerlab/models.hpp"

namespace kummerlab {

/// One verification row: exact affine solution count, Euler character sum,
/// the closed-form value where the model has one, and the match flag.
/// exact == p^(arity) + sum chi(G), so exact mod p always equals euler.
struct CountReport {
    ModelId model;
    u64 p = 0;
    int n_params = 0;
    std::array<u64, 2> params{};
    u64 exact = 0;
    Fp euler;
    std::optional<Fp> formula;
    bool match = false;
    u64 skipped = 0;
};

// #{(base, fiber, height) : height^2 = G(base, fiber)} over the affine
// grid (the fiber axis alone for the curve model). Residue-table driven.
u64 count_exact(const ModelInstance& m);

// sum of G(base, fiber)^{(p-1)/2} over the same grid, by square-and-multiply.
Fp count_euler(const ModelInstance& m);

// Runs both counters, cross-fills the closed form, sets match.
CountReport make_report(const ModelInstance& m);

using ParamTuple = std::array<Fp, 2>;

// All admissible parameter tuples for the model in lexicographic order
// (K3Y skips lambda_i = 1, K3YGkz skips k1 + k2 = 0).
std::vector<ParamTuple> parameter_grid(const PrimeContext& ctx, ModelId id);

// One report per tuple, emitted in input order regardless of the worker
// count. Workers share nothing but the immutable context.
void sweep(const PrimeContext& ctx, ModelId id, std::span<const ParamTuple> tuples, int jobs,
           const std::function<void(const CountReport&)>& emit);

// Utility: fn(i) for i in [0, n) on up to `jobs` threads, unordered.
void parallel_for(u64 n, int jobs, const std::function<void(u64)>& fn);

}  // namespace kummerlab
