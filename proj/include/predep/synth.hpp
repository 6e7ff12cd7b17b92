#pragma once

// Synthetic benchmark generators: six functional families on x ~ U(-1,1)
// with uniform additive noise, five point-cloud shapes, the Clayton copula
// experiment, and the bivariate normal oracle input.
//
// Draw discipline (part of the determinism contract): every generator makes
// one pass drawing shape-defining values per point in a fixed order, then a
// second pass drawing noise, and the noise pass is skipped entirely when
// delta = 0. Regenerating with the same seed and a different delta therefore
// reproduces identical x and y_clean.

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "analytic.hpp"
#include "sampling.hpp"
#include "stats.hpp"

namespace predep {

enum class ModelKind {
    linear,
    logarithmic,
    cubic,
    quadratic,
    sinusoidal,
    piecewise,
    cross_shaped,
    circular,
    two_circles,
    checkerboard,
    annulus,
};

inline bool is_functional(ModelKind kind) {
    switch (kind) {
        case ModelKind::linear:
        case ModelKind::logarithmic:
        case ModelKind::cubic:
        case ModelKind::quadratic:
        case ModelKind::sinusoidal:
        case ModelKind::piecewise:
            return true;
        default:
            return false;
    }
}

inline std::size_t coefficient_arity(ModelKind kind) {
    switch (kind) {
        case ModelKind::linear: return 2;
        case ModelKind::logarithmic: return 1;
        case ModelKind::cubic: return 4;
        case ModelKind::quadratic: return 3;
        case ModelKind::sinusoidal: return 2;
        case ModelKind::piecewise: return 2;
        default: return 0;
    }
}

inline std::string model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::linear: return "linear";
        case ModelKind::logarithmic: return "logarithmic";
        case ModelKind::cubic: return "cubic";
        case ModelKind::quadratic: return "quadratic";
        case ModelKind::sinusoidal: return "sinusoidal";
        case ModelKind::piecewise: return "piecewise";
        case ModelKind::cross_shaped: return "cross";
        case ModelKind::circular: return "circular";
        case ModelKind::two_circles: return "two_circles";
        case ModelKind::checkerboard: return "checkerboard";
        case ModelKind::annulus: return "annulus";
    }
    throw std::invalid_argument("unknown model kind");
}

inline ModelKind model_kind_from_name(const std::string& name) {
    for (ModelKind k :
         {ModelKind::linear, ModelKind::logarithmic, ModelKind::cubic, ModelKind::quadratic,
          ModelKind::sinusoidal, ModelKind::piecewise, ModelKind::cross_shaped,
          ModelKind::circular, ModelKind::two_circles, ModelKind::checkerboard,
          ModelKind::annulus}) {
        if (model_kind_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown model kind: " + name);
}

struct RelationshipModel {
    ModelKind kind = ModelKind::linear;
    std::vector<double> coefficients;  // empty for non-functional kinds
};

struct PairedSample {
    std::vector<double> x;
    std::vector<double> y;
    std::optional<std::vector<double>> y_clean;  // pre-noise y; set by every generator
};

// Coefficients are U(-1,1) except piecewise: theta0 ~ U(-3,0), theta1 ~ U(0,3).
inline RelationshipModel draw_model(ModelKind kind, std::uint64_t seed) {
    if (!is_functional(kind)) throw std::invalid_argument("no coefficients");
    Rng rng(seed);
    RelationshipModel m;
    m.kind = kind;
    if (kind == ModelKind::piecewise) {
        m.coefficients = {rng.uniform(-3.0, 0.0), rng.uniform(0.0, 3.0)};
    } else {
        m.coefficients.reserve(coefficient_arity(kind));
        for (std::size_t i = 0; i < coefficient_arity(kind); ++i)
            m.coefficients.push_back(rng.uniform(-1.0, 1.0));
    }
    return m;
}

namespace detail {

// Coefficient indexing follows ascending powers where applicable:
// linear y = c0 x + c1, quadratic y = c2 x^2 + c1 x + c0,
// cubic y = c3 x^3 + c2 x^2 + c1 x + c0, logarithmic y = c0 ln(x + 1),
// sinusoidal y = c1 sin(c0 x), piecewise y = min(max(1/x, c0), c1).
inline double functional_value(const RelationshipModel& m, double x) {
    const std::vector<double>& c = m.coefficients;
    switch (m.kind) {
        case ModelKind::linear: return c[0] * x + c[1];
        case ModelKind::logarithmic: return c[0] * std::log(x + 1.0);
        case ModelKind::cubic: return ((c[3] * x + c[2]) * x + c[1]) * x + c[0];
        case ModelKind::quadratic: return (c[2] * x + c[1]) * x + c[0];
        case ModelKind::sinusoidal: return c[1] * std::sin(c[0] * x);
        case ModelKind::piecewise: return std::min(std::max(1.0 / x, c[0]), c[1]);
        default: throw std::invalid_argument("no coefficients");
    }
}

}  // namespace detail

// Functional kinds: x ~ U(-1,1), y_clean = h(x), y = y_clean + U(-delta, delta).
// Shape kinds are the usual dependence-benchmark point clouds:
//   cross:        horizontal or vertical unit segment through the origin
//   circular:     ring r = 1 + U(-0.2, 0.2); delta adds further radial jitter
//   two_circles:  concentric circles of radii 0.5 and 1
//   checkerboard: uniform over the dark cells of a 4x4 grid on [-1,1]^2
//   annulus:      uniform on 3/4 <= x^2 + y^2 <= 1 by rejection
// Non-circular shapes take delta as coordinate-wise jitter.
inline PairedSample generate(const RelationshipModel& model, std::size_t n, double delta,
                             std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("empty sample");
    if (!(delta >= 0.0)) throw std::invalid_argument("delta must be nonnegative");
    if (is_functional(model.kind) && model.coefficients.size() != coefficient_arity(model.kind))
        throw std::invalid_argument("no coefficients");

    Rng rng(seed);
    PairedSample s;
    s.x.resize(n);
    s.y.resize(n);
    std::vector<double> clean(n);

    if (is_functional(model.kind)) {
        for (std::size_t i = 0; i < n; ++i) {
            double x = rng.uniform(-1.0, 1.0);
            if (model.kind == ModelKind::logarithmic)
                while (x <= -1.0) x = rng.uniform(-1.0, 1.0);
            s.x[i] = x;
            clean[i] = detail::functional_value(model, x);
        }
        s.y = clean;
        if (delta > 0.0)
            for (std::size_t i = 0; i < n; ++i) s.y[i] += rng.uniform(-delta, delta);
        s.y_clean = std::move(clean);
        return s;
    }

    constexpr double two_pi = 6.283185307179586476925286766559;
    std::vector<double> theta;  // circular kinds keep the angle for radial jitter
    if (model.kind == ModelKind::circular) theta.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
        switch (model.kind) {
            case ModelKind::cross_shaped: {
                bool horizontal = rng.uniform01() < 0.5;
                double t = rng.uniform(-1.0, 1.0);
                s.x[i] = horizontal ? t : 0.0;
                clean[i] = horizontal ? 0.0 : t;
                break;
            }
            case ModelKind::circular: {
                double a = rng.uniform(0.0, two_pi);
                double r = 1.0 + rng.uniform(-0.2, 0.2);
                theta[i] = a;
                s.x[i] = r * std::cos(a);
                clean[i] = r * std::sin(a);
                break;
            }
            case ModelKind::two_circles: {
                double a = rng.uniform(0.0, two_pi);
                double r = rng.uniform01() < 0.5 ? 0.5 : 1.0;
                s.x[i] = r * std::cos(a);
                clean[i] = r * std::sin(a);
                break;
            }
            case ModelKind::checkerboard: {
                double px = 0.0, py = 0.0;
                for (;;) {
                    px = rng.uniform(-1.0, 1.0);
                    py = rng.uniform(-1.0, 1.0);
                    int ci = std::min(3, static_cast<int>((px + 1.0) * 2.0));
                    int cj = std::min(3, static_cast<int>((py + 1.0) * 2.0));
                    if ((ci + cj) % 2 == 0) break;
                }
                s.x[i] = px;
                clean[i] = py;
                break;
            }
            case ModelKind::annulus: {
                double px = 0.0, py = 0.0;
                for (;;) {
                    px = rng.uniform(-1.0, 1.0);
                    py = rng.uniform(-1.0, 1.0);
                    double r2 = px * px + py * py;
                    if (r2 >= 0.75 && r2 <= 1.0) break;
                }
                s.x[i] = px;
                clean[i] = py;
                break;
            }
            default: throw std::invalid_argument("unknown model kind");
        }
    }

    s.y = clean;
    if (delta > 0.0) {
        if (model.kind == ModelKind::circular) {
            for (std::size_t i = 0; i < n; ++i) {
                double j = rng.uniform(-delta, delta);
                s.x[i] += j * std::cos(theta[i]);
                s.y[i] += j * std::sin(theta[i]);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                s.x[i] += rng.uniform(-delta, delta);
                s.y[i] += rng.uniform(-delta, delta);
            }
        }
    }
    s.y_clean = std::move(clean);
    return s;
}

// 1 - cor^2(y_clean, y_noisy)
inline double noise_level(const std::vector<double>& y_clean, const std::vector<double>& y_noisy) {
    double r = pearson(y_clean, y_noisy);
    return std::clamp(1.0 - r * r, 0.0, 1.0);
}

// delta of U(-delta, delta) noise targeting 1 - r^2 = eta for additive
// independent noise: Var(eps) = Var(clean) eta / (1 - eta), Var(eps) = delta^2/3.
inline double delta_for_target_noise(double var_clean, double eta) {
    if (!(var_clean >= 0.0) || !(eta >= 0.0 && eta < 1.0))
        throw std::invalid_argument("noise target out of range");
    return std::sqrt(3.0 * var_clean * eta / (1.0 - eta));
}

// Clayton copula pair by the conditional-inverse method for theta > 0. For
// theta in [-1, 0) this reproduces the benchmark's observed behaviour in
// that regime: an independent uniform pair (see README and decision log).
inline PairedSample clayton_sample(double theta, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("empty sample");
    if (!(theta >= -1.0) || theta == 0.0) throw std::invalid_argument("theta out of range");
    Rng rng(seed);
    PairedSample s;
    s.x.resize(n);
    s.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double u = rng.uniform_open01();
        double w = rng.uniform_open01();
        if (theta < 0.0) {
            s.x[i] = u;
            s.y[i] = w;
            continue;
        }
        double v = std::pow((std::pow(w, -theta / (1.0 + theta)) - 1.0) * std::pow(u, -theta) + 1.0,
                            -1.0 / theta);
        s.x[i] = u;
        s.y[i] = std::clamp(v, 0.0, 1.0);
    }
    return s;
}

// Cholesky construction: x = sx z1, y = sy (rho z1 + sqrt(1-rho^2) z2).
inline PairedSample gaussian_pair_sample(const GaussianParams& params, std::size_t n,
                                         std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("empty sample");
    if (!(params.sigma_x > 0.0) || !(params.sigma_y > 0.0))
        throw std::invalid_argument("sigma must be positive");
    if (!(std::abs(params.rho) <= 1.0)) throw std::invalid_argument("rho out of range");
    double tail = std::sqrt(1.0 - params.rho * params.rho);
    Rng rng(seed);
    PairedSample s;
    s.x.resize(n);
    s.y.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        double z1 = rng.normal();
        double z2 = rng.normal();
        s.x[i] = params.sigma_x * z1;
        s.y[i] = params.sigma_y * (params.rho * z1 + tail * z2);
    }
    return s;
}

}  // namespace predep
