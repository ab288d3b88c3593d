#include "kummerlab/counting.hpp"

#include <atomic>
#include <mutex>
#include <thread>

#include "kummerlab/series.hpp"

namespace kummerlab {

u64 count_exact(const ModelInstance& m) {
    const PrimeContext& F = m.ctx();
    const u64 p = F.p();
    u64 count = 0;
    if (model_arity(m.id()) == 1) {
        for (u64 x = 0; x < p; ++x)
            count += static_cast<u64>(1 + F.legendre_symbol(m.rhs(F.zero(), Fp{x})));
        return count;
    }
    for (u64 b = 0; b < p; ++b)
        for (u64 f = 0; f < p; ++f)
            count += static_cast<u64>(1 + F.legendre_symbol(m.rhs(Fp{b}, Fp{f})));
    return count;
}

Fp count_euler(const ModelInstance& m) {
    const PrimeContext& F = m.ctx();
    const u64 p = F.p();
    Fp acc = F.zero();
    if (model_arity(m.id()) == 1) {
        for (u64 x = 0; x < p; ++x) acc = F.add(acc, F.euler_pow(m.rhs(F.zero(), Fp{x})));
        return acc;
    }
    for (u64 b = 0; b < p; ++b)
        for (u64 f = 0; f < p; ++f) acc = F.add(acc, F.euler_pow(m.rhs(Fp{b}, Fp{f})));
    return acc;
}

CountReport make_report(const ModelInstance& m) {
    const PrimeContext& F = m.ctx();
    CountReport r;
    r.model = m.id();
    r.p = F.p();
    r.n_params = m.param_count();
    for (int i = 0; i < r.n_params; ++i) r.params[static_cast<std::size_t>(i)] = m.param(i).v;
    r.exact = count_exact(m);
    r.euler = count_euler(m);
    r.formula = closed_form_count(m);
    r.match = (Fp{r.exact % r.p} == r.euler) && (!r.formula || *r.formula == r.euler);
    return r;
}

std::vector<ParamTuple> parameter_grid(const PrimeContext& ctx, ModelId id) {
    const u64 p = ctx.p();
    std::vector<ParamTuple> grid;
    if (model_param_count(id) == 1) {
        grid.reserve(p);
        for (u64 a = 0; a < p; ++a) grid.push_back({Fp{a}, Fp{0}});
        return grid;
    }
    grid.reserve(p * p);
    for (u64 a = 0; a < p; ++a) {
        for (u64 b = 0; b < p; ++b) {
            if (id == ModelId::K3Y && (a == 1 || b == 1)) continue;
            if (id == ModelId::K3YGkz && ctx.add(Fp{a}, Fp{b}).v == 0) continue;
            grid.push_back({Fp{a}, Fp{b}});
        }
    }
    return grid;
}

void parallel_for(u64 n, int jobs, const std::function<void(u64)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (u64 i = 0; i < n; ++i) fn(i);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<u64>(static_cast<u64>(jobs), n));
    std::atomic<u64> next{0};
    std::atomic<bool> bailed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (u64 i = next.fetch_add(1); i < n && !bailed.load(); i = next.fetch_add(1))
                    fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                bailed.store(true);
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

void sweep(const PrimeContext& ctx, ModelId id, std::span<const ParamTuple> tuples, int jobs,
           const std::function<void(const CountReport&)>& emit) {
    const std::size_t n = tuples.size();
    const std::size_t block = 64;
    std::vector<CountReport> buf;
    for (std::size_t start = 0; start < n; start += block) {
        const std::size_t len = std::min(block, n - start);
        buf.assign(len, CountReport{});
        parallel_for(len, jobs, [&](u64 i) {
            const ParamTuple& t = tuples[start + i];
            ModelInstance m(ctx, id, std::span<const Fp>(t.data(),
                                                         static_cast<std::size_t>(model_param_count(id))));
            buf[i] = make_report(m);
        });
        for (const CountReport& r : buf) emit(r);
    }
}

}  // namespace kummerlab
