#include "kummerlab/models.hpp"

#include <stdexcept>

#include "json.hpp"

namespace kummerlab {

std::string_view model_tag(ModelId id) {
    switch (id) {
        case ModelId::LegendreCurve: return "legendre";
        case ModelId::KummerJ4: return "kummer-j4";
        case ModelId::KummerJ6: return "kummer-j6";
        case ModelId::KummerJ6Tilde: return "kummer-j6-tilde";
        case ModelId::K3Y: return "k3-y";
        case ModelId::K3Z: return "k3-z";
        case ModelId::RationalS: return "rational-s";
        case ModelId::K3YGkz: return "k3-y-gkz";
    }
    return "?";
}

std::optional<ModelId> model_from_tag(std::string_view tag) {
    for (ModelId id : kAllModels)
        if (model_tag(id) == tag) return id;
    return std::nullopt;
}

int model_param_count(ModelId id) { return id == ModelId::LegendreCurve ? 1 : 2; }

int model_arity(ModelId id) { return id == ModelId::LegendreCurve ? 1 : 2; }

std::array<std::string_view, 2> model_param_names(ModelId id) {
    switch (id) {
        case ModelId::LegendreCurve: return {"lambda", ""};
        case ModelId::K3Z: return {"z1", "z2"};
        case ModelId::K3YGkz: return {"k1", "k2"};
        default: return {"lambda1", "lambda2"};
    }
}

ModelInstance::ModelInstance(const PrimeContext& ctx, ModelId id, std::span<const Fp> params)
    : ctx_(&ctx), id_(id) {
    const int want = model_param_count(id);
    if (static_cast<int>(params.size()) != want)
        throw std::invalid_argument("ModelInstance: model " + std::string(model_tag(id)) + " takes " +
                                    std::to_string(want) + " parameter(s)");
    for (int i = 0; i < want; ++i) par_[static_cast<std::size_t>(i)] = params[static_cast<std::size_t>(i)];

    if (id == ModelId::K3Y) {
        const Fp one = ctx.one();
        Fp c2 = ctx.mul(ctx.sub(one, par_[0]), ctx.sub(one, par_[1]));
        if (c2.v == 0)
            throw std::invalid_argument("ModelInstance: K3Y requires lambda1 != 1 and lambda2 != 1");
        // f(u) = (1-l1)(1-l2) u^2 + 2(l1+l2) u + (l1-l2)^2 / ((1-l1)(1-l2))
        cache_[0] = c2;
        cache_[1] = ctx.add(ctx.add(par_[0], par_[1]), ctx.add(par_[0], par_[1]));
        cache_[2] = ctx.div(ctx.sqr(ctx.sub(par_[0], par_[1])), c2);
    } else if (id == ModelId::K3YGkz) {
        auto mp = moduli_forward(ctx, par_[0], par_[1]);
        if (!mp.ok())
            throw std::invalid_argument("ModelInstance: K3YGkz requires k1 + k2 != 0");
        cache_[0] = ctx.sqr(ctx.add(par_[0], par_[1]));
        cache_[1] = mp.value().z1;
        cache_[2] = mp.value().z2;
    }
}

Fp ModelInstance::rhs(Fp base, Fp fiber) const {
    const PrimeContext& F = *ctx_;
    const Fp one = F.one();
    switch (id_) {
        case ModelId::LegendreCurve: {
            // x(x-1)(x-lambda) in the fiber coordinate
            return F.mul(fiber, F.mul(F.sub(fiber, one), F.sub(fiber, par_[0])));
        }
        case ModelId::KummerJ4: {
            Fp a = F.mul(base, F.mul(F.sub(base, one), F.sub(base, par_[0])));
            Fp b = F.mul(fiber, F.mul(F.sub(fiber, one), F.sub(fiber, par_[1])));
            return F.mul(a, b);
        }
        case ModelId::KummerJ6: {
            Fp t = base, X = fiber;
            Fp A = F.mul(t, F.mul(F.sub(t, one), F.sub(F.mul(par_[1], t), par_[0])));
            Fp B = F.mul(t, F.mul(F.sub(t, par_[0]), F.sub(F.mul(par_[1], t), one)));
            return F.mul(X, F.mul(F.sub(X, A), F.sub(X, B)));
        }
        case ModelId::KummerJ6Tilde: {
            // Xt(1-Xt) ((1-l1)(1-l2) t^2 Xt - t(t-1)(l2 t - l1)); the bracket
            // is the numerator of the third factor of the fibration equation
            // after clearing (1-l1)(1-l2) t.
            Fp t = base, X = fiber;
            Fp c = F.mul(F.sub(one, par_[0]), F.sub(one, par_[1]));
            Fp bracket = F.sub(F.mul(c, F.mul(F.sqr(t), X)),
                               F.mul(t, F.mul(F.sub(t, one), F.sub(F.mul(par_[1], t), par_[0]))));
            return F.mul(X, F.mul(F.sub(one, X), bracket));
        }
        case ModelId::K3Y: {
            Fp u = base, x = fiber;
            Fp f = F.add(F.mul(F.add(F.mul(cache_[0], u), cache_[1]), u), cache_[2]);
            return F.mul(f, F.mul(x, F.mul(F.sub(one, x), F.sub(x, u))));
        }
        case ModelId::K3Z: {
            Fp v = base, x = fiber;
            Fp lin = F.sub(F.sub(one, F.mul(par_[1], x)), F.mul(par_[0], v));
            return F.mul(F.mul(v, F.sub(one, v)), F.mul(F.mul(x, F.sub(one, x)), lin));
        }
        case ModelId::RationalS: {
            Fp u = base, x = fiber;
            Fp c = F.mul(F.sub(one, par_[0]), F.sub(one, par_[1]));
            return F.mul(c, F.mul(x, F.mul(F.sub(one, x), F.sub(x, u))));
        }
        case ModelId::K3YGkz: {
            Fp v = base, x = fiber;
            Fp lin = F.sub(F.sub(one, F.mul(cache_[2], x)), F.mul(cache_[1], v));
            return F.mul(cache_[0],
                         F.mul(F.mul(v, F.sub(one, v)), F.mul(F.mul(x, F.sub(x, one)), lin)));
        }
    }
    return F.zero();
}

std::string ModelInstance::descriptor_json() const {
    nlohmann::ordered_json j;
    j["model"] = std::string(model_tag(id_));
    j["p"] = ctx_->p();
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    auto names = model_param_names(id_);
    for (int i = 0; i < param_count(); ++i)
        params[std::string(names[static_cast<std::size_t>(i)])] = par_[static_cast<std::size_t>(i)].v;
    j["params"] = params;
    return j.dump();
}

MapResult<ModuliPair> moduli_forward(const PrimeContext& ctx, Fp k1, Fp k2) {
    Fp s = ctx.add(k1, k2);
    if (s.v == 0) return MapResult<ModuliPair>::undefined("k1+k2");
    Fp s2inv = ctx.inv(ctx.sqr(s));
    Fp l1 = ctx.sqr(k1), l2 = ctx.sqr(k2);
    Fp four = ctx.from_uint(4);
    Fp z1 = ctx.mul(ctx.mul(four, ctx.mul(k1, k2)), s2inv);
    Fp z2 = ctx.neg(ctx.mul(ctx.mul(ctx.sub(l1, ctx.one()), ctx.sub(l2, ctx.one())), s2inv));
    return MapResult<ModuliPair>(ModuliPair{k1, k2, l1, l2, z1, z2});
}

MapResult<Fp> psi_base(const ModelInstance& m, Fp t) {
    const PrimeContext& F = m.ctx();
    const Fp one = F.one();
    if (t.v == 0) return MapResult<Fp>::undefined("t");
    Fp d1 = F.sub(one, m.param(0));
    if (d1.v == 0) return MapResult<Fp>::undefined("1-lambda1");
    Fp d2 = F.sub(one, m.param(1));
    if (d2.v == 0) return MapResult<Fp>::undefined("1-lambda2");
    Fp num = F.mul(F.sub(t, one), F.sub(F.mul(m.param(1), t), m.param(0)));
    return MapResult<Fp>(F.div(num, F.mul(F.mul(d1, d2), t)));
}

MapResult<AffinePoint> j4_to_j6(const ModelInstance& j4, const AffinePoint& pt) {
    const PrimeContext& F = j4.ctx();
    const Fp one = F.one();
    Fp x1 = pt.base, x2 = pt.fiber, y12 = pt.height;
    Fp l1 = j4.param(0), l2 = j4.param(1);

    if (x2.v == 0) return MapResult<AffinePoint>::undefined("x2");
    if (x1.v == 0) return MapResult<AffinePoint>::undefined("x1");
    Fp dl2x2 = F.sub(l2, x2);
    if (dl2x2.v == 0) return MapResult<AffinePoint>::undefined("lambda2-x2");
    Fp dl1 = F.sub(one, l1);
    if (dl1.v == 0) return MapResult<AffinePoint>::undefined("1-lambda1");

    Fp t = F.div(x1, x2);
    Fp cross = F.sub(F.mul(l1, x2), F.mul(l2, x1));
    Fp X = F.div(F.mul(F.sub(x1, one), cross), F.mul(x1, F.mul(dl2x2, dl1)));
    Fp Ynum = F.mul(F.sub(F.mul(l2, x1), x2), F.mul(cross, y12));
    Fp Yden = F.mul(F.mul(x1, F.sqr(x2)), F.mul(F.sqr(dl2x2), dl1));
    return MapResult<AffinePoint>(AffinePoint{t, X, F.div(Ynum, Yden)});
}

MapResult<AffinePoint> cover_to_Y(const ModelInstance& j6t, const AffinePoint& pt) {
    const PrimeContext& F = j6t.ctx();
    auto u = psi_base(j6t, pt.base);
    if (!u.ok()) return MapResult<AffinePoint>::undefined(u.vanished());
    Fp l1 = j6t.param(0), l2 = j6t.param(1);
    Fp den = F.mul(F.mul(F.sub(F.one(), l1), F.sub(F.one(), l2)), F.sqr(pt.base));
    Fp num = F.mul(F.sub(F.mul(l2, F.sqr(pt.base)), l1), pt.height);
    return MapResult<AffinePoint>(AffinePoint{u.value(), pt.fiber, F.div(num, den)});
}

MapResult<AffinePoint> cover_to_S(const ModelInstance& j6t, const AffinePoint& pt) {
    const PrimeContext& F = j6t.ctx();
    auto u = psi_base(j6t, pt.base);
    if (!u.ok()) return MapResult<AffinePoint>::undefined(u.vanished());
    return MapResult<AffinePoint>(AffinePoint{u.value(), pt.fiber, F.div(pt.height, pt.base)});
}

MapResult<AffinePoint> j6_param_swap(const ModelInstance& j6, const AffinePoint& pt) {
    const PrimeContext& F = j6.ctx();
    if (pt.base.v == 0) return MapResult<AffinePoint>::undefined("t");
    Fp tinv = F.inv(pt.base);
    Fp t4 = F.sqr(F.sqr(tinv));
    Fp t6 = F.mul(t4, F.sqr(tinv));
    return MapResult<AffinePoint>(
        AffinePoint{tinv, F.mul(pt.fiber, t4), F.neg(F.mul(pt.height, t6))});
}

}  // namespace kummerlab
