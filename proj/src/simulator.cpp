#include "lobkit/simulator.hpp"

#include <algorithm>
#include <cmath>

#include "lobkit/error.hpp"

namespace lobkit {

namespace {

constexpr double kRatioClamp = 1e-3;  // keeps both depths strictly positive

struct VolumePair {
    Shares vbid = 0;
    Shares vask = 0;
};

// Inverts the squared-volume proxy around p: Vb^2 / (Va^2 + Vb^2) equals the
// clamped position of p in the rebate-widened quote band; the total depth is
// lognormal around volume_scale.
VolumePair draw_volumes(double p, double bid, double ask, const MrrParams& params,
                        Rng& rng) {
    const double width = ask - bid + 2.0 * params.rebate;
    double f = (p - bid + params.rebate) / width;
    f = std::clamp(f, kRatioClamp, 1.0 - kRatioClamp);
    const double ratio = std::sqrt(f / (1.0 - f));  // Vb / Va
    double total = params.volume_scale;
    if (params.volume_noise > 0.0)
        total *= std::exp(params.volume_noise * rng.normal());
    VolumePair v;
    v.vask = std::max<Shares>(1, std::llround(total / (1.0 + ratio)));
    v.vbid = std::max<Shares>(1, std::llround(total * ratio / (1.0 + ratio)));
    return v;
}

void validate_common(const MrrParams& params) {
    if (params.impact_g <= 0.0)
        throw Error(ErrorCode::InvalidSpec, "impact G must be positive");
    if (params.w_sigma < 0.0)
        throw Error(ErrorCode::InvalidSpec, "w_sigma must be non-negative");
    if (params.w_coupling < 0.0 || params.w_coupling > 1.0)
        throw Error(ErrorCode::InvalidSpec, "coupling must be in [0, 1]");
    if (params.rebate < 0.0)
        throw Error(ErrorCode::InvalidSpec, "rebate must be non-negative");
    if (params.n_steps <= 0)
        throw Error(ErrorCode::InvalidSpec, "n_steps must be positive");
    if (params.volume_scale < 2.0)
        throw Error(ErrorCode::InvalidSpec, "volume_scale too small");
    if (params.volume_noise < 0.0)
        throw Error(ErrorCode::InvalidSpec, "volume_noise must be non-negative");
}

}  // namespace

void SignProcessSpec::validate() const {
    switch (kind) {
        case Kind::IID:
            break;
        case Kind::Markov:
            if (!(rho > -1.0 && rho < 1.0))
                throw Error(ErrorCode::InvalidSpec, "Markov rho must be in (-1, 1)");
            break;
        case Kind::LinearPredictor: {
            if (weights.empty())
                throw Error(ErrorCode::InvalidSpec, "predictor weights empty");
            double total = 0.0;
            for (double a : weights) total += std::fabs(a);
            if (!(total < 1.0))
                throw Error(ErrorCode::InvalidSpec,
                            "sum |a_k| must be < 1 to keep |eps_hat| < 1");
            break;
        }
    }
}

void MrrParams::validate_continuous() const { validate_common(*this); }

void MrrParams::validate_discrete() const {
    validate_common(*this);
    if (tick <= 0.0)
        throw Error(ErrorCode::InvalidSpec, "tick must be positive in discrete mode");
    if (!(tick + 2.0 * rebate - 2.0 * impact_g > 0.0))
        throw Error(ErrorCode::InvalidSpec,
                    "profitability interval degenerate: need tick + 2r > 2G");
}

SignDriver::SignDriver(const SignProcessSpec& spec, double coupling)
    : spec_(spec), coupling_(coupling) {
    spec_.validate();
}

double SignDriver::base_predictor() const {
    switch (spec_.kind) {
        case SignProcessSpec::Kind::IID:
            return 0.0;
        case SignProcessSpec::Kind::Markov:
            return history_.empty() ? 0.0 : spec_.rho * history_.back();
        case SignProcessSpec::Kind::LinearPredictor: {
            double hat = 0.0;
            for (std::size_t k = 0; k < spec_.weights.size(); ++k) {
                if (k + 1 > history_.size()) break;
                hat += spec_.weights[k] *
                       static_cast<double>(history_[history_.size() - 1 - k]);
            }
            return hat;
        }
    }
    return 0.0;
}

double SignDriver::predictor() const {
    const double base = base_predictor();
    if (pending_news_sign_ == 0 || coupling_ == 0.0) return base;
    return coupling_ * static_cast<double>(pending_news_sign_) +
           (1.0 - coupling_) * base;
}

int SignDriver::realize(Rng& rng) {
    int sign;
    if (pending_news_sign_ != 0 && coupling_ > 0.0 && rng.bernoulli(coupling_)) {
        sign = pending_news_sign_;
    } else {
        const double base = base_predictor();
        sign = rng.bernoulli(0.5 * (1.0 + base)) ? 1 : -1;
    }
    pending_news_sign_ = 0;
    history_.push_back(sign);
    const std::size_t depth =
        spec_.kind == SignProcessSpec::Kind::LinearPredictor
            ? spec_.weights.size()
            : 1;
    if (history_.size() > depth)
        history_.erase(history_.begin(),
                       history_.end() - static_cast<std::ptrdiff_t>(depth));
    return sign;
}

void SignDriver::observe_news(double w) {
    if (w > 0.0)
        pending_news_sign_ = 1;
    else if (w < 0.0)
        pending_news_sign_ = -1;
    else
        pending_news_sign_ = 0;
}

SignSequence generate_signs(const SignProcessSpec& spec, std::int64_t n,
                            std::uint64_t seed) {
    spec.validate();
    if (n <= 0) throw Error(ErrorCode::InvalidSpec, "n must be positive");
    Rng rng(seed);
    SignDriver driver(spec, 0.0);
    SignSequence out;
    out.eps.reserve(static_cast<std::size_t>(n));
    out.eps_hat.reserve(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        out.eps_hat.push_back(driver.predictor());
        out.eps.push_back(driver.realize(rng));
    }
    return out;
}

SimPath simulate_continuous(const MrrParams& params, const SignProcessSpec& spec,
                            std::uint64_t seed) {
    params.validate_continuous();
    spec.validate();
    SimPath path;
    path.mode = SimMode::Continuous;
    path.params = params;
    path.spec = spec;
    path.seed = seed;
    path.steps.resize(static_cast<std::size_t>(params.n_steps));

    Rng rng(seed);
    SignDriver driver(spec, params.w_coupling);
    const double g = params.impact_g;
    double p = params.p0;

    for (auto& step : path.steps) {
        const double eps_hat = driver.predictor();
        step.p = p;
        step.eps_hat = eps_hat;
        step.ask = p + g * (1.0 - eps_hat) - params.rebate;
        step.bid = p + g * (-1.0 - eps_hat) + params.rebate;
        step.mid = 0.5 * (step.ask + step.bid);
        const auto vols = draw_volumes(p, step.bid, step.ask, params, rng);
        step.vbid = vols.vbid;
        step.vask = vols.vask;
        step.eps = driver.realize(rng);
        step.w = rng.normal(params.w_sigma);
        driver.observe_news(step.w);
        p += g * (static_cast<double>(step.eps) - eps_hat) + step.w;
    }
    return path;
}

int advance_sticky_quotes(double& bid, double p, double eps_hat,
                          const MrrParams& params) {
    const double g = params.impact_g;
    const double r = params.rebate;
    int shifts = 0;
    while (p >= bid + params.tick + r - g * (1.0 - eps_hat)) {
        bid += params.tick;
        ++shifts;
    }
    while (p <= bid - r + g * (1.0 + eps_hat)) {
        bid -= params.tick;
        --shifts;
    }
    return shifts;
}

SimPath simulate_discrete(const MrrParams& params, const SignProcessSpec& spec,
                          std::uint64_t seed) {
    params.validate_discrete();
    spec.validate();
    SimPath path;
    path.mode = SimMode::Discrete;
    path.params = params;
    path.spec = spec;
    path.seed = seed;
    path.steps.resize(static_cast<std::size_t>(params.n_steps));

    Rng rng(seed);
    SignDriver driver(spec, params.w_coupling);
    const double g = params.impact_g;
    double p = params.p0;

    // Start with the mid on the grid near p0, then settle into the interval.
    double bid = params.tick * std::round(params.p0 / params.tick - 0.5);
    advance_sticky_quotes(bid, p, driver.predictor(), params);

    for (auto& step : path.steps) {
        const double eps_hat = driver.predictor();
        step.p = p;
        step.eps_hat = eps_hat;
        step.bid = bid;
        step.ask = bid + params.tick;
        step.mid = bid + 0.5 * params.tick;
        const auto vols = draw_volumes(p, step.bid, step.ask, params, rng);
        step.vbid = vols.vbid;
        step.vask = vols.vask;
        step.eps = driver.realize(rng);
        step.w = rng.normal(params.w_sigma);
        driver.observe_news(step.w);
        p += g * (static_cast<double>(step.eps) - eps_hat) + step.w;

        // Liquidity at the best stays only while marginally profitable under
        // the updated beliefs; otherwise the adjacent queue depletes.
        if (advance_sticky_quotes(bid, p, driver.predictor(), params) != 0)
            step.depleted = true;
    }
    return path;
}

FrameSeries to_frames(const SimPath& path) {
    FrameSeries series;
    series.market.tick_size = path.params.tick;
    series.market.rebate = path.params.rebate;
    series.frames.resize(path.steps.size());
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& s = path.steps[i];
        auto& f = series.frames[i];
        f.t = static_cast<std::int64_t>(i);
        f.wall_time_s = static_cast<double>(i);
        f.sign = s.eps;
        f.bid = s.bid * kUnitsPerDollar;
        f.ask = s.ask * kUnitsPerDollar;
        f.mid = s.mid * kUnitsPerDollar;
        f.bid_depth = s.vbid;
        f.ask_depth = s.vask;
        f.imbalance = static_cast<double>(s.vbid - s.vask) /
                      static_cast<double>(s.vbid + s.vask);
        f.traded_size = 1;
        f.depleted = s.depleted;
        f.segment = 0;
        f.day = 0;
    }
    return series;
}

std::vector<double> truth_units(const SimPath& path) {
    std::vector<double> out;
    out.reserve(path.steps.size());
    for (const auto& s : path.steps) out.push_back(s.p * kUnitsPerDollar);
    return out;
}

double measured_news_covariance(const SimPath& path) {
    if (path.steps.size() < 2)
        throw Error(ErrorCode::InsufficientData, "path too short");
    double sum = 0.0;
    for (std::size_t t = 0; t + 1 < path.steps.size(); ++t)
        sum += static_cast<double>(path.steps[t + 1].eps) * path.steps[t].w;
    return sum / static_cast<double>(path.steps.size() - 1);
}

std::string truth_to_csv(const SimPath& path,
                         const std::vector<std::string>& header_lines) {
    std::string out;
    out += "# lobkit-truth v1 mode=";
    out += path.mode == SimMode::Discrete ? "discrete" : "continuous";
    out += '\n';
    for (const auto& h : header_lines) {
        out += "# ";
        out += h;
        out += '\n';
    }
    out += "t,p,eps_hat,w,eps,depleted\n";
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
        const auto& s = path.steps[i];
        out += format_int(static_cast<std::int64_t>(i));
        out += ',';
        out += format_double(s.p);
        out += ',';
        out += format_double(s.eps_hat);
        out += ',';
        out += format_double(s.w);
        out += ',';
        out += format_int(s.eps);
        out += ',';
        out += s.depleted ? '1' : '0';
        out += '\n';
    }
    return out;
}

}  // namespace lobkit
