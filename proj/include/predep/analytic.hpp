#pragma once

// Closed forms for the bivariate normal family. These are the oracles the
// estimator is validated against. Natural log throughout; entropies in nats.

#include <cmath>
#include <stdexcept>

namespace predep {

struct GaussianParams {
    double sigma_x = 1.0;
    double sigma_y = 1.0;
    double rho = 0.0;
};

// alpha = 1 - sqrt(1 - rho^2)
inline double gaussian_alpha(double rho) {
    if (!(std::abs(rho) <= 1.0)) throw std::invalid_argument("rho out of range");
    return 1.0 - std::sqrt(1.0 - rho * rho);
}

// S_Y = integral of f_Y^2 = 1 / (2 sigma sqrt(pi))
inline double gaussian_s_marginal(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    constexpr double sqrt_pi = 1.7724538509055160272981675;
    return 1.0 / (2.0 * sigma * sqrt_pi);
}

// S_{Y|X} = 1 / (2 sigma_y sqrt(pi (1 - rho^2))); diverges as |rho| -> 1
inline double gaussian_s_conditional(const GaussianParams& params) {
    if (!(params.sigma_y > 0.0) || !(params.sigma_x > 0.0))
        throw std::invalid_argument("sigma must be positive");
    if (!(std::abs(params.rho) <= 1.0)) throw std::invalid_argument("rho out of range");
    if (std::abs(params.rho) == 1.0) throw std::invalid_argument("degenerate conditional");
    constexpr double pi = 3.1415926535897932384626434;
    return 1.0 / (2.0 * params.sigma_y * std::sqrt(pi * (1.0 - params.rho * params.rho)));
}

// I(X, Y) = -1/2 ln(1 - rho^2) = -ln(1 - alpha)
inline double gaussian_mutual_information(double rho) {
    if (!(std::abs(rho) <= 1.0)) throw std::invalid_argument("rho out of range");
    if (std::abs(rho) == 1.0) throw std::invalid_argument("degenerate conditional");
    return -0.5 * std::log(1.0 - rho * rho);
}

// H_2 = -ln(S); negative when the density concentrates (S > 1)
inline double renyi2_entropy_from_s(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("s must be positive");
    return -std::log(s);
}

}  // namespace predep
