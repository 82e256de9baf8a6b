#include "qtsp/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtsp/distsim.hpp"
#include "qtsp/errors.hpp"
#include "qtsp/geometry.hpp"
#include "qtsp/io.hpp"
#include "qtsp/oracle.hpp"
#include "qtsp/permcode.hpp"
#include "qtsp/rng.hpp"
#include "qtsp/solver.hpp"
#include "qtsp/wavesim.hpp"

namespace qtsp {

namespace {

using Json = nlohmann::ordered_json;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Options shared by every subcommand. Reports are byte-identical for equal
// configs: fixed field order, no timestamps, shortest-round-trip doubles.
struct Common {
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--seed", c.seed, "Random seed")->capture_default_str();
    sub->add_option("--format", c.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output", c.output, "Write the report to this file instead of stdout");
}

Json base_config(const std::string& command, const Common& c) {
    Json config;
    config["command"] = command;
    config["seed"] = c.seed;
    config["format"] = c.format;
    config["output"] = c.output.empty() ? "-" : c.output;
    return config;
}

void write_report(const std::string& text, const Common& c, std::ostream& out) {
    if (c.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(c.output, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + c.output);
    file << text;
}

void emit_json(const Json& report, const Common& c, std::ostream& out) {
    write_report(report.dump(2) + "\n", c, out);
}

// Config echo for CSV reports: one comment line per resolved parameter.
std::string csv_comments(const Json& config) {
    std::string s;
    for (const auto& [key, value] : config.items())
        s += "# " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump()) +
             "\n";
    return s;
}

void require_json(const Common& c, const std::string& command) {
    if (c.format != "json")
        throw UsageError(command + " has no CSV schema; use --format json");
}

struct LoadedInstance {
    EuclideanInstance raw;
    NormalizedInstance norm;
};

LoadedInstance load_normalized(const std::string& path) {
    LoadedInstance li;
    li.raw = load_instance(path);
    li.norm = normalize(li.raw);
    return li;
}

Json tour_json(const Permutation& perm) {
    Json arr = Json::array();
    for (int v : perm.order) arr.push_back(v);
    return arr;
}

Json solve_report(Json config, const SolveResult& result, bool with_bin) {
    Json report;
    report["config"] = std::move(config);
    report["tour"] = tour_json(result.tour);
    report["length"] = result.length;
    report["opt"] = result.opt ? Json(*result.opt) : Json(nullptr);
    report["opt_gap"] = result.opt_gap ? Json(*result.opt_gap) : Json(nullptr);
    report["samples_used"] = result.samples_used;
    report["oracle_calls"] = result.oracle_calls;
    report["seed"] = result.seed;
    if (with_bin) report["i_0"] = *result.bin_index;
    return report;
}

InsertionCode uniform_code(int n, Rng& rng) {
    InsertionCode code;
    code.entries.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        code.entries.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(i))));
    return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Insertion-code tour laboratory: wave simulation, length "
                 "distributions, range oracles, and samplers for small TSP instances",
                 "qtsp"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Generate an instance (JSON on stdout or --output)");
    Common gen_c;
    std::string gen_kind;
    int gen_n = 0;
    std::string gen_name;
    add_common(gen, gen_c);
    gen->add_option("--kind", gen_kind, "uniform | two-corner | collinear")->required();
    gen->add_option("--n", gen_n, "Number of points")->required();
    gen->add_option("--name", gen_name, "Override the generated instance name");
    gen->callback([&] {
        EuclideanInstance inst = generate(parse_instance_kind(gen_kind), gen_n, gen_c.seed);
        if (!gen_name.empty()) inst.name = gen_name;
        Json config = base_config("gen", gen_c);
        config["kind"] = gen_kind;
        config["n"] = gen_n;
        config["name"] = inst.name;
        if (gen_c.format == "csv") {
            std::string text = csv_comments(config) + "x,y\n";
            for (const Point& p : inst.points) text += fmt(p.x) + "," + fmt(p.y) + "\n";
            write_report(text, gen_c, out);
            return;
        }
        Json report;
        report["name"] = inst.name;
        report["points"] = Json::array();
        for (const Point& p : inst.points) report["points"].push_back({p.x, p.y});
        report["config"] = std::move(config);
        emit_json(report, gen_c, out);
    });

    // encode
    auto* enc = app.add_subcommand("encode", "Permutation to insertion code");
    Common enc_c;
    std::string enc_perm;
    add_common(enc, enc_c);
    enc->add_option("--perm", enc_perm, "Permutation, e.g. 2,3,1")->required();
    enc->callback([&] {
        require_json(enc_c, "encode");
        const Permutation perm = parse_permutation(enc_perm);
        Json config = base_config("encode", enc_c);
        config["perm"] = enc_perm;
        Json report;
        report["config"] = std::move(config);
        report["perm"] = to_string(perm);
        report["code"] = to_string(encode(perm));
        emit_json(report, enc_c, out);
    });

    // decode
    auto* dec = app.add_subcommand("decode", "Insertion code to permutation");
    Common dec_c;
    std::string dec_code;
    add_common(dec, dec_c);
    dec->add_option("--code", dec_code, "Insertion code, e.g. 1,1,2")->required();
    dec->callback([&] {
        require_json(dec_c, "decode");
        const InsertionCode code = parse_code(dec_code);
        Json config = base_config("decode", dec_c);
        config["code"] = dec_code;
        Json report;
        report["config"] = std::move(config);
        report["code"] = to_string(code);
        report["perm"] = to_string(decode(code));
        emit_json(report, dec_c, out);
    });

    // wave
    auto* wave = app.add_subcommand(
        "wave", "Prepare a uniform (--n) or tilted (--instance --alpha) wave and dump it");
    Common wave_c;
    int wave_n = 0;
    std::string wave_instance;
    double wave_alpha = 0.0;
    add_common(wave, wave_c);
    auto* wave_n_opt = wave->add_option("--n", wave_n, "Uniform wave over codes of this length");
    auto* wave_inst_opt = wave->add_option("--instance", wave_instance, "Instance file");
    wave->add_option("--alpha", wave_alpha, "Tilt base (> 1)")->needs(wave_inst_opt);
    wave_n_opt->excludes(wave_inst_opt);
    wave->callback([&] {
        Json config = base_config("wave", wave_c);
        WaveState state;
        if (!wave_instance.empty()) {
            if (wave->count("--alpha") == 0)
                throw UsageError("wave --instance requires --alpha");
            const LoadedInstance li = load_normalized(wave_instance);
            state = prepare_weighted(li.norm, Alpha(wave_alpha));
            config["instance"] = wave_instance;
            config["alpha"] = wave_alpha;
            config["n"] = li.norm.size();
            config["scale"] = li.norm.scale;
        } else if (wave->count("--n") > 0) {
            state = prepare_uniform(wave_n);
            config["n"] = wave_n;
        } else {
            throw UsageError("wave needs --n or --instance");
        }
        if (wave_c.format == "csv") {
            std::ostringstream rows;
            dump_wave_csv(state, rows);
            write_report(csv_comments(config) + rows.str(), wave_c, out);
            return;
        }
        Json report;
        report["config"] = std::move(config);
        report["size"] = state.amps.size();
        report["norm"] = state.norm_sq();
        Json rows = Json::array();
        for (std::size_t r = 0; r < state.amps.size(); ++r) {
            Json row;
            row["rank"] = r;
            row["code"] = to_string(unrank(r, state.depth));
            row["probability"] = std::norm(state.amps[r]);
            rows.push_back(std::move(row));
        }
        report["rows"] = std::move(rows);
        emit_json(report, wave_c, out);
    });

    // sample
    auto* smp = app.add_subcommand("sample", "Measure a prepared wave repeatedly");
    Common smp_c;
    int smp_n = 0;
    std::string smp_instance;
    double smp_alpha = 0.0;
    std::uint64_t smp_trials = 1000;
    add_common(smp, smp_c);
    auto* smp_n_opt = smp->add_option("--n", smp_n, "Uniform wave over codes of this length");
    auto* smp_inst_opt = smp->add_option("--instance", smp_instance, "Instance file");
    smp->add_option("--alpha", smp_alpha, "Tilt base (> 1)")->needs(smp_inst_opt);
    smp->add_option("--trials", smp_trials, "Number of measurements")->capture_default_str();
    smp_n_opt->excludes(smp_inst_opt);
    smp->callback([&] {
        Json config = base_config("sample", smp_c);
        WaveState state;
        std::optional<NormalizedInstance> norm;
        if (!smp_instance.empty()) {
            if (smp->count("--alpha") == 0)
                throw UsageError("sample --instance requires --alpha");
            const LoadedInstance li = load_normalized(smp_instance);
            norm = li.norm;
            state = prepare_weighted(li.norm, Alpha(smp_alpha));
            config["instance"] = smp_instance;
            config["alpha"] = smp_alpha;
            config["n"] = li.norm.size();
            config["scale"] = li.norm.scale;
        } else if (smp->count("--n") > 0) {
            state = prepare_uniform(smp_n);
            config["n"] = smp_n;
        } else {
            throw UsageError("sample needs --n or --instance");
        }
        config["trials"] = smp_trials;
        const int n = state.depth;
        Rng rng(smp_c.seed);
        if (smp_c.format == "csv") {
            std::string text = csv_comments(config) + "draw,rank,code\n";
            for (std::uint64_t i = 1; i <= smp_trials; ++i) {
                const InsertionCode code = measure(state, n, rng);
                text += std::to_string(i) + "," + std::to_string(rank(code)) + ",\"" +
                        to_string(code) + "\"\n";
            }
            write_report(text, smp_c, out);
            return;
        }
        Json report;
        report["config"] = std::move(config);
        Json rows = Json::array();
        for (std::uint64_t i = 1; i <= smp_trials; ++i) {
            const InsertionCode code = measure(state, n, rng);
            Json row;
            row["draw"] = i;
            row["rank"] = rank(code);
            row["code"] = to_string(code);
            if (norm) row["length"] = tour_length(*norm, decode(code));
            rows.push_back(std::move(row));
        }
        report["rows"] = std::move(rows);
        emit_json(report, smp_c, out);
    });

    // dist
    auto* dst = app.add_subcommand(
        "dist", "Exhaustive tour-length distribution: histogram, or full table with --table");
    Common dst_c;
    std::string dst_instance;
    int dst_bins = 20;
    double dst_alpha = 0.0;
    bool dst_table = false;
    add_common(dst, dst_c);
    dst->add_option("--instance", dst_instance, "Instance file")->required();
    dst->add_option("--bins", dst_bins, "Histogram bin count")->capture_default_str();
    auto* dst_alpha_opt = dst->add_option("--alpha", dst_alpha, "Tilt base for --table");
    dst->add_flag("--table", dst_table, "Dump the per-code target table (needs --alpha)")
        ->needs(dst_alpha_opt);
    dst->callback([&] {
        const LoadedInstance li = load_normalized(dst_instance);
        const LengthDistribution ld = enumerate_lengths(li.norm);
        Json config = base_config("dist", dst_c);
        config["instance"] = dst_instance;
        config["n"] = li.norm.size();
        config["scale"] = li.norm.scale;
        if (dst_table) {
            config["alpha"] = dst_alpha;
            const CodeTable table = boltzmann_exact(ld, Alpha(dst_alpha));
            if (dst_c.format == "csv") {
                std::string text = csv_comments(config) + "rank,code,probability\n";
                for (std::size_t r = 0; r < table.p.size(); ++r)
                    text += std::to_string(r) + ",\"" + to_string(unrank(r, ld.n)) + "\"," +
                            fmt(table.p[r]) + "\n";
                write_report(text, dst_c, out);
                return;
            }
            Json report;
            report["config"] = std::move(config);
            Json rows = Json::array();
            for (std::size_t r = 0; r < table.p.size(); ++r) {
                Json row;
                row["rank"] = r;
                row["code"] = to_string(unrank(r, ld.n));
                row["probability"] = table.p[r];
                rows.push_back(std::move(row));
            }
            report["rows"] = std::move(rows);
            emit_json(report, dst_c, out);
            return;
        }
        config["bins"] = dst_bins;
        const auto hist = histogram(ld.lengths, dst_bins);
        if (dst_c.format == "csv") {
            std::string text = csv_comments(config) + "bin_lo,bin_hi,count\n";
            for (const HistogramBin& b : hist)
                text += fmt(b.lo) + "," + fmt(b.hi) + "," + std::to_string(b.count) + "\n";
            write_report(text, dst_c, out);
            return;
        }
        Json report;
        report["config"] = std::move(config);
        report["count"] = ld.lengths.size();
        report["min_length"] = ld.min_length();
        report["max_length"] = ld.max_length();
        Json rows = Json::array();
        for (const HistogramBin& b : hist) {
            Json row;
            row["bin_lo"] = b.lo;
            row["bin_hi"] = b.hi;
            row["count"] = b.count;
            rows.push_back(std::move(row));
        }
        report["bins"] = std::move(rows);
        emit_json(report, dst_c, out);
    });

    // fit
    auto* fit = app.add_subcommand(
        "fit", "Fit the tour-length Gaussian from uniform samples; report tilt diagnostics");
    Common fit_c;
    std::string fit_instance;
    std::uint64_t fit_trials = 10000;
    double fit_alpha = 0.0;
    double fit_eps = 0.0;
    add_common(fit, fit_c);
    fit->add_option("--instance", fit_instance, "Instance file")->required();
    fit->add_option("--trials", fit_trials, "Uniform pilot draws")->capture_default_str();
    fit->add_option("--alpha", fit_alpha, "Tilt base; fitted from the sample when omitted");
    fit->add_option("--epsilon", fit_eps, "Relative window for the mass-ratio diagnostics");
    fit->callback([&] {
        require_json(fit_c, "fit");
        if (fit_trials < 2) throw UsageError("fit needs at least 2 trials");
        const LoadedInstance li = load_normalized(fit_instance);
        Rng rng(fit_c.seed);
        std::vector<double> lengths;
        lengths.reserve(fit_trials);
        const int n = li.norm.size();
        for (std::uint64_t i = 0; i < fit_trials; ++i)
            lengths.push_back(tour_length(li.norm, decode(uniform_code(n, rng))));
        const GaussianFit gf = gaussian_fit(lengths);
        const double nn = nearest_neighbor_length(li.norm);
        double x_min = nn, x_max = lengths[0];
        for (double v : lengths) {
            x_min = std::min(x_min, v);
            x_max = std::max(x_max, v);
        }

        Json config = base_config("fit", fit_c);
        config["instance"] = fit_instance;
        config["n"] = n;
        config["scale"] = li.norm.scale;
        config["trials"] = fit_trials;
        config["alpha"] = fit->count("--alpha") ? Json(fit_alpha) : Json(nullptr);
        config["epsilon"] = fit->count("--epsilon") ? Json(fit_eps) : Json(nullptr);

        Json report;
        report["config"] = std::move(config);
        report["mu"] = gf.mu;
        report["sigma"] = gf.sigma;
        report["sample_count"] = gf.sample_count;
        report["x_min"] = x_min;
        report["x_max"] = x_max;
        report["nn_length"] = nn;
        const double implied_log = (gf.mu - x_min) / (gf.sigma * gf.sigma);
        report["implied_alpha"] = std::exp(implied_log);
        if (fit->count("--epsilon") > 0) {
            if (!(fit_eps > 0.0)) throw UsageError("--epsilon must be positive");
            const Alpha alpha = fit->count("--alpha") ? Alpha(fit_alpha)
                                                      : Alpha::from_log(implied_log);
            report["sigma_ratio"] = sigma_ratio(gf, x_min, x_max, alpha, fit_eps);
            report["h"] = h_function(0.0, fit_eps * x_min / gf.sigma, (x_max - x_min) / gf.sigma);
        }
        emit_json(report, fit_c, out);
    });

    // oracle
    auto* orc = app.add_subcommand(
        "oracle", "Range-oracle formula vs empirical false rate for m hits out of N");
    Common orc_c;
    std::uint64_t orc_m = 0, orc_total = 0, orc_trials = 10000;
    add_common(orc, orc_c);
    orc->add_option("--m", orc_m, "Tours inside the range")->required();
    orc->add_option("--n-total", orc_total, "Total tours")->required();
    orc->add_option("--trials", orc_trials, "Empirical runs")->capture_default_str();
    orc->callback([&] {
        if (orc_trials == 0) throw UsageError("oracle needs at least 1 trial");
        const double formula_p = both_zero_probability(orc_m, orc_total);
        Rng rng(orc_c.seed);
        std::uint64_t falses = 0;
        for (std::uint64_t i = 0; i < orc_trials; ++i)
            if (!oracle_sample(orc_m, orc_total, rng)) ++falses;
        const double empirical_p =
            static_cast<double>(falses) / static_cast<double>(orc_trials);
        Json config = base_config("oracle", orc_c);
        config["m"] = orc_m;
        config["n_total"] = orc_total;
        config["trials"] = orc_trials;
        if (orc_c.format == "csv") {
            write_report(csv_comments(config) + "m,N,formula_p,empirical_p,trials\n" +
                             std::to_string(orc_m) + "," + std::to_string(orc_total) + "," +
                             fmt(formula_p) + "," + fmt(empirical_p) + "," +
                             std::to_string(orc_trials) + "\n",
                         orc_c, out);
            return;
        }
        Json report;
        report["config"] = std::move(config);
        report["m"] = orc_m;
        report["N"] = orc_total;
        report["formula_p"] = formula_p;
        report["empirical_p"] = empirical_p;
        report["trials"] = orc_trials;
        emit_json(report, orc_c, out);
    });

    // solve-gaussian
    auto* sg = app.add_subcommand("solve-gaussian",
                                  "Tilted-sampling solver (pilot fit, then best of K draws)");
    Common sg_c;
    std::string sg_instance;
    double sg_eps = 0.0, sg_alpha = 0.0;
    std::uint64_t sg_pilot = 10000, sg_reps = 0;
    bool sg_baseline = false;
    add_common(sg, sg_c);
    sg->add_option("--instance", sg_instance, "Instance file")->required();
    sg->add_option("--epsilon", sg_eps, "Target relative gap")->required();
    sg->add_option("--alpha", sg_alpha, "Tilt base; fitted from the pilot when omitted");
    sg->add_option("--pilot", sg_pilot, "Pilot draws for the fit")->capture_default_str();
    sg->add_option("--trials", sg_reps, "Override the fitted sample count K");
    sg->add_flag("--baseline", sg_baseline, "Also compute the exact optimum (opt, opt_gap)");
    sg->callback([&] {
        require_json(sg_c, "solve-gaussian");
        const LoadedInstance li = load_normalized(sg_instance);
        GaussianParams params;
        if (sg->count("--alpha") > 0) params.alpha = sg_alpha;
        if (sg->count("--trials") > 0) params.repetitions = sg_reps;
        params.pilot = sg_pilot;
        Rng rng(sg_c.seed);
        SolveResult result = solve_gaussian(li.norm, sg_eps, params, rng);
        if (sg_baseline) attach_baseline(result, li.norm);
        Json config = base_config("solve-gaussian", sg_c);
        config["instance"] = sg_instance;
        config["n"] = li.norm.size();
        config["scale"] = li.norm.scale;
        config["epsilon"] = sg_eps;
        config["alpha"] = sg->count("--alpha") ? Json(sg_alpha) : Json(nullptr);
        config["pilot"] = params.pilot;
        config["trials"] = sg->count("--trials") ? Json(sg_reps) : Json(nullptr);
        config["c"] = params.c;
        config["fail"] = params.fail;
        config["baseline"] = sg_baseline;
        emit_json(solve_report(std::move(config), result, false), sg_c, out);
    });

    // solve-oracle
    auto* so = app.add_subcommand("solve-oracle",
                                  "Range-scan solver over tour-length bins of width epsilon");
    Common so_c;
    std::string so_instance, so_mode = "exact", so_policy = "strict";
    double so_eps = 0.0;
    std::uint64_t so_trials = 101;
    bool so_baseline = false;
    add_common(so, so_c);
    so->add_option("--instance", so_instance, "Instance file")->required();
    so->add_option("--epsilon", so_eps, "Bin width")->required();
    so->add_option("--mode", so_mode, "exact | sampled")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
    so->add_option("--trials", so_trials, "Majority-vote runs per bin (sampled mode, odd)")
        ->capture_default_str();
    so->add_option("--policy", so_policy, "strict | permissive slack handling")
        ->check(CLI::IsMember({"strict", "permissive"}))
        ->capture_default_str();
    so->add_flag("--baseline", so_baseline, "Also compute the exact optimum (opt, opt_gap)");
    so->callback([&] {
        require_json(so_c, "solve-oracle");
        const bool sampled = so_mode == "sampled";
        if (!sampled && so->count("--trials") > 0)
            throw UsageError("--trials applies to sampled mode only");
        const LoadedInstance li = load_normalized(so_instance);
        OracleSolveOptions options;
        if (sampled) options.sampled_trials = so_trials;
        options.policy =
            so_policy == "strict" ? SlackPolicy::strict : SlackPolicy::permissive;
        Rng rng(so_c.seed);
        SolveResult result = solve_oracle(li.norm, so_eps, options, rng);
        if (so_baseline) attach_baseline(result, li.norm);
        Json config = base_config("solve-oracle", so_c);
        config["instance"] = so_instance;
        config["n"] = li.norm.size();
        config["scale"] = li.norm.scale;
        config["epsilon"] = so_eps;
        config["mode"] = so_mode;
        config["trials"] = sampled ? Json(so_trials) : Json(nullptr);
        config["policy"] = so_policy;
        config["baseline"] = so_baseline;
        emit_json(solve_report(std::move(config), result, true), so_c, out);
    });

    // exact
    auto* ex = app.add_subcommand("exact", "Exact optimum by dynamic programming or enumeration");
    Common ex_c;
    std::string ex_instance, ex_method = "held-karp";
    add_common(ex, ex_c);
    ex->add_option("--instance", ex_instance, "Instance file")->required();
    ex->add_option("--method", ex_method, "held-karp | brute-force")
        ->check(CLI::IsMember({"held-karp", "brute-force"}))
        ->capture_default_str();
    ex->callback([&] {
        require_json(ex_c, "exact");
        const LoadedInstance li = load_normalized(ex_instance);
        const ExactResult result =
            ex_method == "held-karp" ? held_karp(li.norm) : brute_force(li.norm);
        Json config = base_config("exact", ex_c);
        config["instance"] = ex_instance;
        config["n"] = li.norm.size();
        config["scale"] = li.norm.scale;
        config["method"] = ex_method;
        Json report;
        report["config"] = std::move(config);
        report["length"] = result.length;
        report["tour"] = tour_json(result.tour);
        emit_json(report, ex_c, out);
    });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedFormatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInstanceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const SearchFailureError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const DegenerateFitError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        // Remaining domain errors are bad parameter values.
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qtsp
