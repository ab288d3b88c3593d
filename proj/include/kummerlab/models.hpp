#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "kummerlab/fp.hpp"

namespace kummerlab {

// One tag per affine right-hand side G with height^2 = G(base, fiber):
//   LegendreCurve  y^2 = x(x-1)(x-lambda)                                  (curve)
//   KummerJ4       y12^2 = x1(x1-1)(x1-l1) x2(x2-1)(x2-l2)                 (double Kummer pencil)
//   KummerJ6       Y^2 = X(X - t(t-1)(l2 t - l1))(X - t(t - l1)(l2 t - 1))
//   KummerJ6Tilde  Yt^2 = Xt(1-Xt)((1-l1)(1-l2) t^2 Xt - t(t-1)(l2 t - l1))
//   K3Y            yt^2 = f(u) x(1-x)(x-u),  f of degree two in u
//   K3Z            y^2 = v(1-v) x(1-x)(1 - z2 x - z1 v)
//   RationalS      yt^2 = (1-l1)(1-l2) x(1-x)(x-u)
//   K3YGkz         y^2 = (k1+k2)^2 v(1-v) x(x-1)(1 - z2 x - z1 v)
// K3YGkz is the (v, x) chart of K3Y used by the twist-relation check; its
// parameters are (k1, k2) and the z's come from the moduli map below.
enum class ModelId {
    LegendreCurve,
    KummerJ4,
    KummerJ6,
    KummerJ6Tilde,
    K3Y,
    K3Z,
    RationalS,
    K3YGkz,
};

inline constexpr std::array<ModelId, 8> kAllModels = {
    ModelId::LegendreCurve, ModelId::KummerJ4,  ModelId::KummerJ6, ModelId::KummerJ6Tilde,
    ModelId::K3Y,           ModelId::K3Z,       ModelId::RationalS, ModelId::K3YGkz,
};

std::string_view model_tag(ModelId id);             // e.g. "kummer-j6"
std::optional<ModelId> model_from_tag(std::string_view tag);
int model_param_count(ModelId id);                  // 1 or 2
int model_arity(ModelId id);                        // grid dimensions: 1 for the curve, 2 otherwise
std::array<std::string_view, 2> model_param_names(ModelId id);

struct AffinePoint {
    Fp base;    // x1, t, u, or v depending on the model
    Fp fiber;   // x, X, or Xt
    Fp height;  // the y-coordinate
};

/// A model tag plus its parameters over one prime field. Validates at
/// construction: K3Y needs lambda_i != 1, K3YGkz needs k1 + k2 != 0.
/// Degenerate parameter values are otherwise accepted, not rejected.
class ModelInstance {
public:
    ModelInstance(const PrimeContext& ctx, ModelId id, std::span<const Fp> params);

    const PrimeContext& ctx() const noexcept { return *ctx_; }
    ModelId id() const noexcept { return id_; }
    int param_count() const noexcept { return model_param_count(id_); }
    Fp param(int i) const noexcept { return par_[static_cast<std::size_t>(i)]; }

    // G(base, fiber); exact polynomial evaluation, defined everywhere.
    Fp rhs(Fp base, Fp fiber) const;
    bool on_model(const AffinePoint& pt) const {
        return ctx_->sqr(pt.height) == rhs(pt.base, pt.fiber);
    }

    // {"model": tag, "p": int, "params": {name: int}}
    std::string descriptor_json() const;

private:
    const PrimeContext* ctx_;
    ModelId id_;
    std::array<Fp, 2> par_{};
    std::array<Fp, 3> cache_{};  // K3Y: f coefficients; K3YGkz: (k1+k2)^2, z1, z2
};

/// Result of a rational map: either the image or the name of the vanishing
/// denominator. Indeterminacy points are skipped by callers, never fatal.
template <class T>
class MapResult {
public:
    MapResult(T value) : value_(std::move(value)), vanished_(nullptr) {}
    static MapResult undefined(const char* factor) { return MapResult(factor); }

    bool ok() const noexcept { return value_.has_value(); }
    const T& value() const { return *value_; }
    // Name of the vanishing denominator, nullptr when ok().
    const char* vanished() const noexcept { return vanished_; }

private:
    explicit MapResult(const char* factor) : vanished_(factor) {}
    std::optional<T> value_;
    const char* vanished_;
};

struct ModuliPair {
    Fp k1, k2;
    Fp lambda1, lambda2;  // k_i^2
    Fp z1, z2;
};

// (z1, z2) = (4 k1 k2 / (k1+k2)^2, -(k1^2-1)(k2^2-1) / (k1+k2)^2).
// Undefined on the pole k1 + k2 = 0.
MapResult<ModuliPair> moduli_forward(const PrimeContext& ctx, Fp k1, Fp k2);

// Base map of the degree-two cover: u = (t-1)(l2 t - l1) / ((1-l1)(1-l2) t).
// m must carry (lambda1, lambda2); undefined for t = 0 or lambda_i = 1.
MapResult<Fp> psi_base(const ModelInstance& m, Fp t);

// Birational transformation KummerJ4 -> KummerJ6Tilde.
MapResult<AffinePoint> j4_to_j6(const ModelInstance& j4, const AffinePoint& pt);

// Degree-two rational covers KummerJ6Tilde -> K3Y and -> RationalS.
MapResult<AffinePoint> cover_to_Y(const ModelInstance& j6t, const AffinePoint& pt);
MapResult<AffinePoint> cover_to_S(const ModelInstance& j6t, const AffinePoint& pt);

// (t, X, Y) -> (1/t, X/t^4, -Y/t^6) on KummerJ6; lands on the model with
// lambda1 and lambda2 interchanged. An involution away from t = 0.
MapResult<AffinePoint> j6_param_swap(const ModelInstance& j6, const AffinePoint& pt);

}  // namespace kummerlab
