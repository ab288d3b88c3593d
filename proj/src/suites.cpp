#include "kummerlab/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "kummerlab/bipoly.hpp"
#include "kummerlab/counting.hpp"
#include "kummerlab/models.hpp"
#include "kummerlab/rng.hpp"
#include "kummerlab/series.hpp"

namespace kummerlab {

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> out;
    for (u64 q = 3; q <= n; q += 2)
        if (is_prime(q)) out.push_back(q);
    return out;
}

namespace {

constexpr std::size_t kFailCap = 50;

struct FailSink {
    std::vector<std::string> rows;
    u64 dropped = 0;
    void add(std::string s) {
        if (rows.size() < kFailCap)
            rows.push_back(std::move(s));
        else
            ++dropped;
    }
};

// Runs body(p, cases, sink) for each prime, possibly in parallel; failures
// are merged in prime order so the report is deterministic at any job count.
template <class Body>
SuiteResult per_prime(std::string name, const std::vector<u64>& primes, int jobs, Body body) {
    SuiteResult res;
    res.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<u64> cases(primes.size(), 0);
    std::vector<FailSink> sinks(primes.size());
    parallel_for(primes.size(), jobs, [&](u64 i) { body(primes[i], cases[i], sinks[i]); });

    u64 dropped = 0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        res.cases += cases[i];
        dropped += sinks[i].dropped;
        for (auto& f : sinks[i].rows) {
            if (res.failures.size() < kFailCap)
                res.failures.push_back(std::move(f));
            else
                ++dropped;
        }
    }
    if (dropped > 0) res.failures.push_back("... and " + std::to_string(dropped) + " more");

    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

ModelInstance instance(const PrimeContext& F, ModelId id, Fp a) {
    const Fp par[1] = {a};
    return ModelInstance(F, id, par);
}

ModelInstance instance(const PrimeContext& F, ModelId id, Fp a, Fp b) {
    const Fp par[2] = {a, b};
    return ModelInstance(F, id, par);
}

SuiteResult run_igusa(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? primes_up_to(101) : cfg.primes;
    return per_prime("igusa", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        for (u64 lam = 0; lam < p; ++lam) {
            auto m = instance(F, ModelId::LegendreCurve, Fp{lam});
            u64 exact = count_exact(m);
            Fp predicted = F.neg(F.mul(parity_sign(F), trunc_2f1(F, Fp{lam})));
            ++cases;
            if (Fp{exact % p} != predicted) {
                std::ostringstream os;
                os << "p=" << p << " lambda=" << lam << " exact=" << exact
                   << " series=" << predicted.v;
                sink.add(os.str());
            }
        }
    });
}

SuiteResult run_countx(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? default_primes("countx") : cfg.primes;
    return per_prime("countx", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        for (u64 a = 0; a < p; ++a) {
            for (u64 b = 0; b < p; ++b) {
                Fp formula = kummer_count_formula(F, Fp{a}, Fp{b});
                Fp euler = count_euler(instance(F, ModelId::KummerJ6, Fp{a}, Fp{b}));
                ++cases;
                if (formula != euler) {
                    std::ostringstream os;
                    os << "p=" << p << " lambda1=" << a << " lambda2=" << b
                       << " formula=" << formula.v << " euler=" << euler.v;
                    sink.add(os.str());
                }
            }
        }
    });
}

SuiteResult run_countz(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? default_primes("countz") : cfg.primes;
    return per_prime("countz", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        for (u64 a = 0; a < p; ++a) {
            for (u64 b = 0; b < p; ++b) {
                Fp formula = trunc_appell_f2(F, Fp{a}, Fp{b});
                Fp euler = count_euler(instance(F, ModelId::K3Z, Fp{a}, Fp{b}));
                ++cases;
                if (formula != euler) {
                    std::ostringstream os;
                    os << "p=" << p << " z1=" << a << " z2=" << b << " formula=" << formula.v
                       << " euler=" << euler.v;
                    sink.add(os.str());
                }
            }
        }
    });
}

SuiteResult run_identity(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? default_primes("identity") : cfg.primes;
    return per_prime("identity", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        for (u64 a = 0; a < p; ++a) {
            for (u64 b = 0; b < p; ++b) {
                auto sides = identity_sides(F, Fp{a}, Fp{b});
                if (!sides.ok()) continue;
                ++cases;
                if (sides.value().lhs != sides.value().rhs) {
                    std::ostringstream os;
                    os << "p=" << p << " k1=" << a << " k2=" << b << " lhs=" << sides.value().lhs.v
                       << " rhs=" << sides.value().rhs.v;
                    sink.add(os.str());
                }
            }
        }
        // anchor case: both sides must equal (-1)^{(p-1)/2}
        auto anchor = identity_sides(F, F.one(), F.zero());
        Fp want = parity_sign(F);
        ++cases;
        if (!anchor.ok() || anchor.value().lhs != want || anchor.value().rhs != want) {
            std::ostringstream os;
            os << "p=" << p << " anchor (k1,k2)=(1,0) expected both sides " << want.v;
            sink.add(os.str());
        }
    });
}

SuiteResult run_pf(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? primes_up_to(37) : cfg.primes;
    return per_prime("pf", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        auto check = [&](const char* label, const BiPoly& poly) {
            ++cases;
            if (!poly.is_zero()) sink.add("p=" + std::to_string(p) + " " + label + " nonzero");
        };

        BiPoly X = poly_from_countX(F);
        check("L_lambda1(countX)", apply_gauss(F, GaussOperator::standard(F, PolyVar::First), X));
        check("L_lambda2(countX)", apply_gauss(F, GaussOperator::standard(F, PolyVar::Second), X));

        BiPoly Z = poly_from_countZ(F);
        check("L1(countZ)", apply_appell(F, AppellOperator::standard(F, 1), Z));
        check("L2(countZ)", apply_appell(F, AppellOperator::standard(F, 2), Z));

        BiPoly A = poly_trunc_appell(F);
        ++cases;
        if (!(A == Z)) sink.add("p=" + std::to_string(p) + " truncated Appell != countZ polynomial");
        check("L1(truncAppell)", apply_appell(F, AppellOperator::standard(F, 1), A));
        check("L2(truncAppell)", apply_appell(F, AppellOperator::standard(F, 2), A));

        BiPoly G = poly_trunc_2f1(F);
        check("L(trunc2F1)", apply_gauss(F, GaussOperator::standard(F, PolyVar::First), G));
    });
}

SuiteResult run_euler(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? default_primes("euler") : cfg.primes;
    return per_prime("euler", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        for (ModelId id : kAllModels) {
            for (const ParamTuple& t : parameter_grid(F, id)) {
                ModelInstance m(F, id, std::span<const Fp>(t.data(),
                                                           static_cast<std::size_t>(model_param_count(id))));
                u64 exact = count_exact(m);
                Fp euler = count_euler(m);
                ++cases;
                if (Fp{exact % p} != euler) {
                    std::ostringstream os;
                    os << "p=" << p << " model=" << model_tag(id) << " params=(" << t[0].v << ","
                       << t[1].v << ") exact=" << exact << " euler=" << euler.v;
                    sink.add(os.str());
                }
            }
        }
    });
}

SuiteResult run_twist(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? default_primes("twist") : cfg.primes;
    return per_prime("twist", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        for (const ParamTuple& t : parameter_grid(F, ModelId::K3YGkz)) {
            auto mp = moduli_forward(F, t[0], t[1]);
            Fp lhs = count_euler(instance(F, ModelId::K3YGkz, t[0], t[1]));
            Fp twist = F.euler_pow(F.neg(F.sqr(F.add(t[0], t[1]))));
            Fp rhs = F.mul(twist, count_euler(instance(F, ModelId::K3Z, mp.value().z1, mp.value().z2)));
            ++cases;
            if (lhs != rhs) {
                std::ostringstream os;
                os << "p=" << p << " k1=" << t[0].v << " k2=" << t[1].v << " Y=" << lhs.v
                   << " twisted Z=" << rhs.v;
                sink.add(os.str());
            }
        }
    });
}

// All on-model points of m, via a square-root table over the fiber grid.
std::vector<AffinePoint> on_model_points(const ModelInstance& m) {
    const PrimeContext& F = m.ctx();
    const u64 p = F.p();
    std::vector<u64> root(p, 0);
    for (u64 r = (p - 1) / 2; r >= 1; --r) root[F.sqr(Fp{r}).v] = r;
    std::vector<AffinePoint> pts;
    for (u64 b = 0; b < p; ++b) {
        for (u64 f = 0; f < p; ++f) {
            Fp g = m.rhs(Fp{b}, Fp{f});
            int chi = F.legendre_symbol(g);
            if (chi == 0) {
                pts.push_back({Fp{b}, Fp{f}, F.zero()});
            } else if (chi == 1) {
                pts.push_back({Fp{b}, Fp{f}, Fp{root[g.v]}});
                pts.push_back({Fp{b}, Fp{f}, F.neg(Fp{root[g.v]})});
            }
        }
    }
    return pts;
}

SuiteResult run_covers(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? default_primes("covers") : cfg.primes;
    const u64 seed = cfg.seed;
    std::atomic<u64> skipped{0};
    SuiteResult res = per_prime("covers", primes, cfg.jobs, [seed, &skipped](u64 p, u64& cases,
                                                                             FailSink& sink) {
        PrimeContext F(p);
        // 20 parameter pairs with lambda_i outside {0, 1}, drawn without
        // replacement from the (p-2)^2 grid.
        CounterRng rng(seed ^ p);
        const u64 side = p - 2;
        auto idx = rng.sample_indices(side * side, 20);
        for (u64 index : idx) {
            Fp l1{2 + index / side}, l2{2 + index % side};

            auto fail = [&](const char* map, const AffinePoint& src) {
                std::ostringstream os;
                os << "p=" << p << " lambda=(" << l1.v << "," << l2.v << ") map=" << map
                   << " point=(" << src.base.v << "," << src.fiber.v << "," << src.height.v << ")";
                sink.add(os.str());
            };

            auto j4 = instance(F, ModelId::KummerJ4, l1, l2);
            auto j6t = instance(F, ModelId::KummerJ6Tilde, l1, l2);
            for (const AffinePoint& pt : on_model_points(j4)) {
                auto img = j4_to_j6(j4, pt);
                if (!img.ok()) {
                    ++skipped;
                    continue;
                }
                ++cases;
                if (!j6t.on_model(img.value())) fail("j4_to_j6", pt);
            }

            auto k3y = instance(F, ModelId::K3Y, l1, l2);
            auto rats = instance(F, ModelId::RationalS, l1, l2);
            for (const AffinePoint& pt : on_model_points(j6t)) {
                auto y = cover_to_Y(j6t, pt);
                if (y.ok()) {
                    ++cases;
                    if (!k3y.on_model(y.value())) fail("cover_to_Y", pt);
                } else {
                    ++skipped;
                }
                auto s = cover_to_S(j6t, pt);
                if (s.ok()) {
                    ++cases;
                    if (!rats.on_model(s.value())) fail("cover_to_S", pt);
                } else {
                    ++skipped;
                }
            }

            auto j6 = instance(F, ModelId::KummerJ6, l1, l2);
            auto j6_swapped = instance(F, ModelId::KummerJ6, l2, l1);
            for (const AffinePoint& pt : on_model_points(j6)) {
                auto img = j6_param_swap(j6, pt);
                if (!img.ok()) {
                    ++skipped;
                    continue;
                }
                ++cases;
                if (!j6_swapped.on_model(img.value())) fail("j6_param_swap", pt);
            }
        }
    });
    res.note = "skipped " + std::to_string(skipped.load()) + " indeterminacy points";
    return res;
}

SuiteResult run_clausen(const SuiteConfig&) {
    SuiteResult res;
    res.name = "clausen";
    const auto t0 = std::chrono::steady_clock::now();

    const double betas[4][2] = {{0.5, 0.5}, {0.5, 0.75}, {0.75, 0.5}, {0.75, 0.75}};
    const double ks[5][2] = {{0.05, 0.95}, {0.1, 0.9}, {0.15, 1.05}, {0.2, 0.95}, {0.08, 1.1}};
    double max_resid = 0.0;
    for (const auto& b : betas) {
        for (const auto& k : ks) {
            ++res.cases;
            try {
                double r = clausen_residual(b[0], b[1], k[0], k[1]);
                max_resid = std::max(max_resid, r);
                if (!(r < 1e-10)) {
                    std::ostringstream os;
                    os << "beta=(" << b[0] << "," << b[1] << ") k=(" << k[0] << "," << k[1]
                       << ") residual=" << r;
                    res.failures.push_back(os.str());
                }
            } catch (const std::domain_error& e) {
                std::ostringstream os;
                os << "beta=(" << b[0] << "," << b[1] << ") k=(" << k[0] << "," << k[1] << ") "
                   << e.what();
                res.failures.push_back(os.str());
            }
        }
    }
    std::ostringstream note;
    note << "max residual " << max_resid;
    res.note = note.str();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

SuiteResult run_combinatorial(const SuiteConfig& cfg) {
    auto primes = cfg.primes.empty() ? primes_up_to(101) : cfg.primes;
    return per_prime("combinatorial", primes, cfg.jobs, [](u64 p, u64& cases, FailSink& sink) {
        PrimeContext F(p);
        ++cases;
        if (F.factorial(p - 1) != F.neg(F.one()))
            sink.add("p=" + std::to_string(p) + " Wilson fails");

        for (u64 k = 0; k <= 2 * (p - 1); ++k) {
            Fp sum = F.zero();
            for (u64 x = 0; x < p; ++x) sum = F.add(sum, F.pow(Fp{x}, k));
            Fp want = (k > 0 && k % (p - 1) == 0) ? F.neg(F.one()) : F.zero();
            ++cases;
            if (sum != want)
                sink.add("p=" + std::to_string(p) + " power sum k=" + std::to_string(k) +
                         " got " + std::to_string(sum.v));
        }

        const u64 N = F.trunc_order();
        Fp acc = F.zero();
        for (u64 i = 0; i <= N; ++i) acc = F.add(acc, F.sqr(F.binomial(N, static_cast<i64>(i))));
        ++cases;
        if (acc != parity_sign(F))
            sink.add("p=" + std::to_string(p) + " central binomial sum got " + std::to_string(acc.v));
    });
}

struct SuiteEntry {
    const char* name;
    SuiteResult (*fn)(const SuiteConfig&);
};

constexpr SuiteEntry kSuites[] = {
    {"igusa", run_igusa},   {"countx", run_countx},       {"countz", run_countz},
    {"identity", run_identity}, {"pf", run_pf},           {"euler", run_euler},
    {"covers", run_covers}, {"twist", run_twist},         {"clausen", run_clausen},
    {"combinatorial", run_combinatorial},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& e : kSuites) out.emplace_back(e.name);
    return out;
}

bool is_suite(const std::string& name) {
    for (const auto& e : kSuites)
        if (name == e.name) return true;
    return false;
}

std::vector<u64> default_primes(const std::string& name) {
    if (name == "igusa" || name == "combinatorial") return primes_up_to(101);
    if (name == "pf") return primes_up_to(37);
    if (name == "covers") return {11, 13};
    if (name == "clausen") return {};
    return {3, 5, 7, 11, 13};
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
    for (const auto& e : kSuites)
        if (name == e.name) return e.fn(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace kummerlab
