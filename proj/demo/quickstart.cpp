// Minimal library walkthrough: generate a noisy relationship, estimate
// alpha in both directions, and compare against the bivariate normal
// closed form.

#include <cstdio>

#include <predep/predep.hpp>

int main() {
    using namespace predep;

    // x^2 with mild noise: strongly predictable forward, ambiguous backward
    Rng rng(1);
    std::vector<double> x(1500), y(1500);
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = rng.uniform(-1.0, 1.0);
        y[i] = x[i] * x[i] + 0.05 * rng.normal();
    }

    PredepConfig cfg;
    cfg.seed = 2;
    auto [yx, xy] = predep_both(x, y, cfg);
    std::printf("parabola: alpha y|x = %.3f, alpha x|y = %.3f\n", yx.alpha, xy.alpha);

    // interval for the forward direction
    cfg.ci_resamples = 100;
    auto [lo, hi] = predep_ci(x, y, cfg);
    std::printf("          95%% interval y|x: [%.3f, %.3f]\n", lo, hi);

    // oracle check on a correlated normal pair
    GaussianParams p{1.0, 1.0, 0.7};
    PairedSample g = gaussian_pair_sample(p, 2000, 3);
    PredepConfig gcfg;
    gcfg.seed = 4;
    PredepResult r = predep::predep(g.x, g.y, gcfg);
    std::printf("gaussian rho=0.7: estimated alpha %.3f, closed form %.3f\n", r.alpha,
                gaussian_alpha(p.rho));
    return 0;
}
