#include "qtsp/distsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qtsp/quadrature.hpp"

namespace qtsp {

double LengthDistribution::min_length() const {
    return *std::min_element(lengths.begin(), lengths.end());
}

double LengthDistribution::max_length() const {
    return *std::max_element(lengths.begin(), lengths.end());
}

LengthDistribution enumerate_lengths(const NormalizedInstance& inst, int limit) {
    const int n = inst.size();
    if (n > limit)
        throw SizeLimitError("enumerate_lengths: n = " + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limit));
    LengthDistribution dist;
    dist.n = n;
    dist.lengths.resize(factorial(n));
    const std::int64_t total = static_cast<std::int64_t>(dist.lengths.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < total; ++r)
        dist.lengths[static_cast<std::size_t>(r)] =
            tour_length(inst, decode(unrank(static_cast<std::uint64_t>(r), n)));
    return dist;
}

LengthDistribution enumerate_lengths_ref(const NormalizedInstance& inst, int limit) {
    const int n = inst.size();
    LengthDistribution dist;
    dist.n = n;
    dist.lengths.reserve(factorial(std::min(n, limit)));
    for_each_code(
        n, [&](const InsertionCode& c) { dist.lengths.push_back(tour_length(inst, decode(c))); },
        limit);
    return dist;
}

CodeTable boltzmann_exact(const LengthDistribution& dist, Alpha alpha) {
    CodeTable table;
    table.n = dist.n;
    table.p.resize(dist.lengths.size());
    const double log_alpha = alpha.log();
    const double shift = dist.min_length();
    const std::int64_t total = static_cast<std::int64_t>(table.p.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < total; ++r)
        table.p[static_cast<std::size_t>(r)] =
            std::exp(-log_alpha * (dist.lengths[static_cast<std::size_t>(r)] - shift));
    double z = 0.0;
    for (double w : table.p) z += w;
    for (double& w : table.p) w /= z;
    return table;
}

InsertionCode boltzmann_sample(const CodeTable& table, Rng& rng) {
    const CumulativeTable cdf{table.p};
    return unrank(cdf.sample(rng), table.n);
}

SisDraw sis_sample(const NormalizedInstance& inst, Alpha alpha, Rng& rng) {
    validate(inst);
    const int n = inst.size();
    const double log_alpha = alpha.log();
    SisDraw draw;
    draw.code.entries.reserve(static_cast<std::size_t>(n));
    draw.code.entries.push_back(1);
    Permutation perm;
    perm.order.reserve(static_cast<std::size_t>(n));
    perm.order.push_back(1);
    double log_q = 0.0;
    for (int i = 2; i <= n; ++i) {
        std::vector<double> incs(static_cast<std::size_t>(i));
        double min_inc = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= i; ++j) {
            incs[static_cast<std::size_t>(j - 1)] = insertion_increment(inst, perm.order, i, j);
            min_inc = std::min(min_inc, incs[static_cast<std::size_t>(j - 1)]);
        }
        std::vector<double> w(static_cast<std::size_t>(i));
        double total = 0.0;
        for (int j = 0; j < i; ++j) {
            w[static_cast<std::size_t>(j)] = std::exp(-log_alpha * (incs[static_cast<std::size_t>(j)] - min_inc));
            total += w[static_cast<std::size_t>(j)];
        }
        const double u = rng.uniform() * total;
        double acc = 0.0;
        int pick = i;  // top position if accumulation never crosses u
        for (int j = 1; j <= i; ++j) {
            acc += w[static_cast<std::size_t>(j - 1)];
            if (u < acc) {
                pick = j;
                break;
            }
        }
        draw.code.entries.push_back(pick);
        draw.length += incs[static_cast<std::size_t>(pick - 1)];
        log_q += std::log(w[static_cast<std::size_t>(pick - 1)] / total);
        perm.order.insert(perm.order.begin() + (pick - 1), i);
    }
    draw.log_weight = -log_alpha * draw.length - log_q;
    draw.weight = std::exp(draw.log_weight);
    return draw;
}

GaussianFit gaussian_fit(std::span<const double> samples) {
    if (samples.size() < 2)
        throw DegenerateFitError("gaussian_fit: need at least 2 samples");
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= static_cast<double>(samples.size());
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double sigma = std::sqrt(ss / static_cast<double>(samples.size() - 1));
    if (sigma <= 1e-9 * std::max(1.0, std::abs(mean)))
        throw DegenerateFitError("gaussian_fit: zero variance");
    return {mean, sigma, samples.size()};
}

double sigma_ratio(const LengthDistribution& dist, Alpha alpha, double eps) {
    if (eps <= 0.0) throw RangeError("sigma_ratio: eps must be positive");
    const double x_min = dist.min_length();
    const double x_max = dist.max_length();
    if (!(x_min < x_max)) throw RangeError("sigma_ratio: x_min must be below x_max");
    const double log_alpha = alpha.log();
    const double cutoff = x_min * (1.0 + eps) + 1e-9;
    double num = 0.0, den = 0.0;
    for (double length : dist.lengths) {
        const double w = std::exp(-log_alpha * (length - x_min));
        den += w;
        if (length <= cutoff) num += w;
    }
    return num / den;
}

double sigma_ratio(const GaussianFit& fit, double x_min, double x_max, Alpha alpha,
                   double eps) {
    if (eps <= 0.0) throw RangeError("sigma_ratio: eps must be positive");
    if (!(x_min < x_max)) throw RangeError("sigma_ratio: x_min must be below x_max");
    const double log_alpha = alpha.log();
    const double inv_two_var = 1.0 / (2.0 * fit.sigma * fit.sigma);
    // alpha^(-x_min) is factored out of both integrals to keep the
    // integrand well scaled at large alpha.
    const auto integrand = [&](double x) {
        return std::exp(-log_alpha * (x - x_min) - (x - fit.mu) * (x - fit.mu) * inv_two_var);
    };
    const double upper = std::min(x_min * (1.0 + eps), x_max);
    const double num = integrate(integrand, x_min, upper);
    const double den = integrate(integrand, x_min, x_max);
    if (den <= 0.0) throw RangeError("sigma_ratio: vanishing denominator");
    return std::min(num / den, 1.0);
}

double h_function(double x, double eps_xmin, double range_width) {
    if (!(eps_xmin > 0.0)) throw RangeError("h_function: eps_xmin must be positive");
    if (range_width < eps_xmin)
        throw RangeError("h_function: range_width must be at least eps_xmin");
    const auto gauss = [](double t) { return std::exp(-t * t); };
    const double num = integrate(gauss, x, x + eps_xmin);
    const double den = integrate(gauss, x, x + range_width);
    if (den <= 0.0) throw RangeError("h_function: vanishing denominator");
    return std::min(num / den, 1.0);
}

double tv_distance(const CodeTable& p, const CodeTable& q) {
    if (p.n != q.n || p.p.size() != q.p.size())
        throw DimensionError("tv_distance: tables index different code sets");
    double total = 0.0;
    for (std::size_t i = 0; i < p.p.size(); ++i) total += std::abs(p.p[i] - q.p[i]);
    return 0.5 * total;
}

CodeTable wave_code_table(const WaveState& state) {
    return {state.depth, probabilities(state)};
}

std::vector<HistogramBin> histogram(std::span<const double> values, int bins) {
    if (values.empty()) throw RangeError("histogram: no values");
    if (bins < 1) throw RangeError("histogram: need at least one bin");
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *lo_it, hi = *hi_it;
    std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
    const double width = (hi - lo) / bins;
    for (int b = 0; b < bins; ++b) {
        out[static_cast<std::size_t>(b)].lo = lo + b * width;
        out[static_cast<std::size_t>(b)].hi = lo + (b + 1) * width;
    }
    for (double v : values) {
        int b = width > 0.0 ? static_cast<int>((v - lo) / width) : 0;
        b = std::clamp(b, 0, bins - 1);
        ++out[static_cast<std::size_t>(b)].count;
    }
    return out;
}

}  // namespace qtsp
