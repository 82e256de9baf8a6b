#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qtsp/geometry.hpp"
#include "qtsp/permcode.hpp"
#include "qtsp/rng.hpp"

namespace qtsp {

// Tilt base for the weighted wave: branch probabilities are proportional to
// alpha^(-insertion increment), alpha > 1. The equivalent shift parameter k
// satisfies ln(alpha) = 2k.
class Alpha {
public:
    explicit Alpha(double value) : value_(value) {
        if (!(value > 1.0)) throw RangeError("Alpha: value must exceed 1");
    }
    static Alpha from_log(double log_value) { return Alpha(std::exp(log_value)); }

    double value() const { return value_; }
    double log() const { return std::log(value_); }

private:
    double value_;
};

// Superposition over code prefixes of length `depth`, stored as one complex
// amplitude per prefix, indexed by prefix rank. The full one-hot register
// space has n(n+3)/2 slots but only the n! code-basis states are reachable,
// so this code-keyed table is an exact simulation of the register circuit.
struct WaveState {
    int depth = 0;
    std::vector<std::complex<double>> amps;  // size depth!

    double norm_sq() const;

    // Full-depth state concentrated on a single code (test fixture).
    static WaveState point_mass(const InsertionCode& code);
};

// Depth-1 state: the single prefix (1) with amplitude 1.
WaveState initial_state();

// Splits every depth-t prefix into t+1 equal-probability children.
WaveState apply_uniform_gate(const WaveState& state, int limit = kEnumerationLimit);

// Splits every depth-t prefix into t+1 children with probabilities
// proportional to alpha^(-increment) for inserting point t+1 at each
// position. Norm is preserved; amplitudes stay real nonnegative.
WaveState apply_weighted_gate(const WaveState& state, const NormalizedInstance& inst,
                              Alpha alpha);
// Serial reference implementation; bitwise-identical output.
WaveState apply_weighted_gate_ref(const WaveState& state, const NormalizedInstance& inst,
                                  Alpha alpha);

// initial_state followed by n-1 uniform gates: every code at 1/n!.
WaveState prepare_uniform(int n, int limit = kEnumerationLimit);

// initial_state followed by n-1 weighted gates.
WaveState prepare_weighted(const NormalizedInstance& inst, Alpha alpha,
                           int limit = kEnumerationLimit);
WaveState prepare_weighted_ref(const NormalizedInstance& inst, Alpha alpha,
                               int limit = kEnumerationLimit);

// Samples one full-depth code with probability |amplitude|^2.
InsertionCode measure(const WaveState& state, int n, Rng& rng);

double probability_of(const WaveState& state, const InsertionCode& code);

// |amplitude|^2 per rank.
std::vector<double> probabilities(const WaveState& state);

// One-hot register picture: register i has i+1 slots, slot 1 is the
// "value undecided" marker, value a_i occupies slot a_i + 1.
std::vector<std::vector<int>> render_registers(const InsertionCode& code);

// Debug dump, one row per rank: rank,code,probability (code field quoted).
void dump_wave_csv(const WaveState& state, std::ostream& out);

}  // namespace qtsp
