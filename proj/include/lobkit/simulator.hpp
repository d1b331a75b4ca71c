#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lobkit/frames.hpp"
#include "lobkit/types.hpp"
#include "lobkit/util.hpp"

namespace lobkit {

struct SignProcessSpec {
    enum class Kind : int { IID = 0, Markov = 1, LinearPredictor = 2 };
    Kind kind = Kind::IID;
    double rho = 0.0;                 // Markov: eps_hat_t = rho * eps_{t-1}
    std::vector<double> weights;      // LinearPredictor: eps_hat_t = sum a_k eps_{t-k}

    // Throws InvalidSpec: Markov needs |rho| < 1, LinearPredictor needs
    // sum |a_k| < 1 so the predictor stays inside (-1, 1).
    void validate() const;
};

struct MrrParams {
    double impact_g = 1.0;      // G, dollars per unit order-flow innovation
    double w_sigma = 0.0;       // std of the news shock W_t, dollars
    double w_coupling = 0.0;    // q: P(eps_{t+1} copies sign(W_t))
    double tick = 0.01;         // dollars (discrete mode only)
    double rebate = 0.003;      // dollars per share
    double p0 = 100.0;          // starting fundamental price, dollars
    std::int64_t n_steps = 0;
    double volume_noise = 0.1;  // lognormal sigma of the total best depth
    double volume_scale = 200.0;  // shares

    void validate_continuous() const;
    void validate_discrete() const;
};

enum class SimMode : int { Continuous = 0, Discrete = 1 };

struct SimStep {
    double p = 0.0;        // fundamental price before trade t, dollars
    double eps_hat = 0.0;  // predictor E_{t-1}[eps_t]
    double w = 0.0;        // news shock released at t
    double bid = 0.0, ask = 0.0, mid = 0.0;  // dollars
    Shares vbid = 0, vask = 0;
    int eps = 0;
    bool depleted = false;  // quotes shifted right after this trade
};

struct SimPath {
    SimMode mode = SimMode::Continuous;
    MrrParams params;
    SignProcessSpec spec;
    std::uint64_t seed = 0;
    std::vector<SimStep> steps;
};

// Sign sequence plus its predictor, base process only (no news coupling).
struct SignSequence {
    std::vector<int> eps;
    std::vector<double> eps_hat;
};

SignSequence generate_signs(const SignProcessSpec& spec, std::int64_t n,
                            std::uint64_t seed);

// Classic MRR dynamics on a continuous price scale. Quotes are rebate
// adjusted (a = p + G[1 - eps_hat] - r), so the spread is 2G - 2r; the mid
// x = p - G eps_hat is unaffected by r. Best depths encode the fundamental
// price through the squared-volume inversion.
SimPath simulate_continuous(const MrrParams& params, const SignProcessSpec& spec,
                            std::uint64_t seed);

// Large-tick generalization: quotes live on the tick grid one tick apart and
// stay fixed while p remains inside the rebate-widened profitability
// interval; when p exits, the adjacent queue depletes and both quotes shift
// by one tick (`depleted` set on the step just recorded). Requires
// tick + 2*rebate - 2*G > 0.
SimPath simulate_discrete(const MrrParams& params, const SignProcessSpec& spec,
                          std::uint64_t seed);

// Converts a path to the estimator-facing frame series (prices to 1e-4
// dollar units, traded size 1 per transaction).
FrameSeries to_frames(const SimPath& path);

// True fundamental price per step, in frame units; the oracle series for
// proxy-recovery tests.
std::vector<double> truth_units(const SimPath& path);

// Direct sample estimate of E[eps_{t+1} W_t] from the generator state.
double measured_news_covariance(const SimPath& path);

// Truth CSV: `t,p,eps_hat,w,eps,depleted` (dollars).
std::string truth_to_csv(const SimPath& path,
                         const std::vector<std::string>& header_lines = {});

// Internal sign/news engine, exposed for the sticky-grid unit tests.
class SignDriver {
public:
    SignDriver(const SignProcessSpec& spec, double coupling);

    double predictor() const;   // eps_hat for the upcoming sign
    int realize(Rng& rng);      // draws the sign and appends it to history
    void observe_news(double w);

private:
    double base_predictor() const;

    SignProcessSpec spec_;
    double coupling_;
    std::vector<int> history_;  // most recent last; bounded by predictor depth
    int pending_news_sign_ = 0;
};

// One sticky-grid update: shifts `bid` by whole ticks until p lies inside the
// profitability interval (b - r + G(1 + eps_hat), b + tick + r - G(1 - eps_hat)).
// Returns the net number of ticks shifted (signed).
int advance_sticky_quotes(double& bid, double p, double eps_hat,
                          const MrrParams& params);

}  // namespace lobkit
