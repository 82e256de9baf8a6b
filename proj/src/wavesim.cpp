#include "qtsp/wavesim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace qtsp {

double WaveState::norm_sq() const {
    double total = 0.0;
    for (const auto& a : amps) total += std::norm(a);
    return total;
}

WaveState WaveState::point_mass(const InsertionCode& code) {
    validate(code);
    WaveState state;
    state.depth = code.size();
    state.amps.assign(factorial(state.depth), {0.0, 0.0});
    state.amps[rank(code)] = {1.0, 0.0};
    return state;
}

WaveState initial_state() {
    WaveState state;
    state.depth = 1;
    state.amps.assign(1, {1.0, 0.0});
    return state;
}

WaveState apply_uniform_gate(const WaveState& state, int limit) {
    const int t = state.depth;
    if (t < 1 || state.amps.size() != factorial(t))
        throw DepthError("apply_uniform_gate: malformed state");
    if (t + 1 > limit)
        throw DepthError("apply_uniform_gate: depth " + std::to_string(t + 1) +
                         " exceeds enumeration limit " + std::to_string(limit));
    const std::uint64_t tfact = factorial(t);
    WaveState next;
    next.depth = t + 1;
    next.amps.resize(tfact * static_cast<std::uint64_t>(t + 1));
    const double inv = 1.0 / std::sqrt(static_cast<double>(t + 1));
    const std::int64_t parents = static_cast<std::int64_t>(tfact);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < parents; ++r) {
        const std::complex<double> z = state.amps[static_cast<std::size_t>(r)] * inv;
        for (int j = 0; j <= t; ++j)
            next.amps[static_cast<std::size_t>(r) + static_cast<std::uint64_t>(j) * tfact] = z;
    }
    return next;
}

namespace {

WaveState weighted_gate_impl(const WaveState& state, const NormalizedInstance& inst,
                             Alpha alpha, bool parallel) {
    const int t = state.depth;
    const int n = inst.size();
    if (t < 1 || state.amps.size() != factorial(t))
        throw DepthError("apply_weighted_gate: malformed state");
    if (t >= n)
        throw DimensionError("apply_weighted_gate: state depth " + std::to_string(t) +
                             " not below instance size " + std::to_string(n));
    const std::uint64_t tfact = factorial(t);
    WaveState next;
    next.depth = t + 1;
    next.amps.resize(tfact * static_cast<std::uint64_t>(t + 1));
    const double log_alpha = alpha.log();
    const std::int64_t parents = static_cast<std::int64_t>(tfact);

#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t r = 0; r < parents; ++r) {
        const Permutation prefix = decode(unrank(static_cast<std::uint64_t>(r), t));
        double incs[kEnumerationLimit + 1];
        double min_inc = std::numeric_limits<double>::infinity();
        for (int j = 1; j <= t + 1; ++j) {
            incs[j - 1] = insertion_increment(inst, prefix.order, t + 1, j);
            min_inc = std::min(min_inc, incs[j - 1]);
        }
        // Shift by the branch minimum before exponentiating; the ratios are
        // unchanged and large alpha cannot underflow the whole branch.
        double weights[kEnumerationLimit + 1];
        double total = 0.0;
        for (int j = 0; j <= t; ++j) {
            weights[j] = std::exp(-log_alpha * (incs[j] - min_inc));
            total += weights[j];
        }
        const std::complex<double> z = state.amps[static_cast<std::size_t>(r)];
        for (int j = 0; j <= t; ++j)
            next.amps[static_cast<std::size_t>(r) + static_cast<std::uint64_t>(j) * tfact] =
                z * std::sqrt(weights[j] / total);
    }
    return next;
}

}  // namespace

WaveState apply_weighted_gate(const WaveState& state, const NormalizedInstance& inst,
                              Alpha alpha) {
    return weighted_gate_impl(state, inst, alpha, true);
}

WaveState apply_weighted_gate_ref(const WaveState& state, const NormalizedInstance& inst,
                                  Alpha alpha) {
    return weighted_gate_impl(state, inst, alpha, false);
}

WaveState prepare_uniform(int n, int limit) {
    if (n < 1) throw SizeLimitError("prepare_uniform: n must be at least 1");
    if (n > limit)
        throw SizeLimitError("prepare_uniform: n = " + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limit));
    WaveState state = initial_state();
    for (int t = 1; t < n; ++t) state = apply_uniform_gate(state, limit);
    return state;
}

namespace {

WaveState prepare_weighted_impl(const NormalizedInstance& inst, Alpha alpha, int limit,
                                bool parallel) {
    const int n = inst.size();
    if (n > limit)
        throw SizeLimitError("prepare_weighted: n = " + std::to_string(n) +
                             " exceeds enumeration limit " + std::to_string(limit));
    WaveState state = initial_state();
    for (int t = 1; t < n; ++t) state = weighted_gate_impl(state, inst, alpha, parallel);
    return state;
}

}  // namespace

WaveState prepare_weighted(const NormalizedInstance& inst, Alpha alpha, int limit) {
    return prepare_weighted_impl(inst, alpha, limit, true);
}

WaveState prepare_weighted_ref(const NormalizedInstance& inst, Alpha alpha, int limit) {
    return prepare_weighted_impl(inst, alpha, limit, false);
}

InsertionCode measure(const WaveState& state, int n, Rng& rng) {
    if (state.depth != n)
        throw DepthError("measure: state depth " + std::to_string(state.depth) +
                         " is not the full depth " + std::to_string(n));
    const double u = rng.uniform() * state.norm_sq();
    double acc = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t r = 0; r < state.amps.size(); ++r) {
        const double p = std::norm(state.amps[r]);
        if (p > 0.0) last_nonzero = r;
        acc += p;
        if (u < acc) return unrank(r, n);
    }
    return unrank(last_nonzero, n);
}

double probability_of(const WaveState& state, const InsertionCode& code) {
    if (code.size() != state.depth)
        throw DimensionError("probability_of: code length != state depth");
    return std::norm(state.amps[rank(code)]);
}

std::vector<double> probabilities(const WaveState& state) {
    std::vector<double> p(state.amps.size());
    for (std::size_t r = 0; r < state.amps.size(); ++r) p[r] = std::norm(state.amps[r]);
    return p;
}

std::vector<std::vector<int>> render_registers(const InsertionCode& code) {
    validate(code);
    std::vector<std::vector<int>> registers;
    registers.reserve(static_cast<std::size_t>(code.size()));
    for (int i = 1; i <= code.size(); ++i) {
        std::vector<int> reg(static_cast<std::size_t>(i + 1), 0);
        reg[static_cast<std::size_t>(code.entries[static_cast<std::size_t>(i - 1)])] = 1;
        registers.push_back(std::move(reg));
    }
    return registers;
}

void dump_wave_csv(const WaveState& state, std::ostream& out) {
    out << "rank,code,probability\n";
    char buf[64];
    for (std::size_t r = 0; r < state.amps.size(); ++r) {
        std::snprintf(buf, sizeof buf, "%.17g", std::norm(state.amps[r]));
        out << r << ",\"" << to_string(unrank(r, state.depth)) << "\"," << buf << "\n";
    }
}

}  // namespace qtsp
