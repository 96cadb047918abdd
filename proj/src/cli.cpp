#include "corrsens/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "corrsens/csv.hpp"
#include "corrsens/datagen.hpp"
#include "corrsens/engine.hpp"
#include "corrsens/oracle.hpp"
#include "corrsens/serialize.hpp"

namespace corrsens {

namespace {

std::uint64_t default_seed() {
    const char* env = std::getenv("SENS_SEED");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    std::uint64_t seed = 0;
    const std::string_view text(env);
    const auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), seed);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("SENS_SEED is not an unsigned integer: '" +
                         std::string(text) + "'");
    }
    return seed;
}

FeasibleRegion parse_bounds_literal(const std::string& bounds) {
    std::array<double, 4> v{};
    std::size_t field = 0;
    std::stringstream ss(bounds);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (field >= v.size()) {
            throw InputError("bounds: expected lx,ux,ly,uy");
        }
        const auto [ptr, ec] =
            std::from_chars(token.data(), token.data() + token.size(), v[field]);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InputError("bounds: not a number: '" + token + "'");
        }
        ++field;
    }
    if (field != v.size()) {
        throw InputError("bounds: expected lx,ux,ly,uy");
    }
    FeasibleRegion f{v[0], v[1], v[2], v[3]};
    f.require_valid();
    return f;
}

FeasibleRegion resolve_bounds(const std::string& bounds,
                              std::span<const Point2> points) {
    if (bounds == "auto") {
        return bounding_box(points);
    }
    return parse_bounds_literal(bounds);
}

class InputSource {
public:
    InputSource(const std::string& path, std::istream& fallback) {
        if (path == "-") {
            stream_ = &fallback;
            return;
        }
        file_.open(path);
        if (!file_) {
            throw InputError("cannot open input file: " + path);
        }
        stream_ = &file_;
    }

    std::istream& get() { return *stream_; }

private:
    std::ifstream file_;
    std::istream* stream_ = nullptr;
};

void note_small_dataset(std::ostream& err, std::uint64_t count) {
    if (count < 5) {
        err << "note: with fewer than 5 points, p-values move in coarse "
               "steps; small delta_p values are at the edge of numerical "
               "resolution\n";
    }
}

struct CommonOpts {
    std::string input = "-";
    std::string bounds = "auto";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_bounds = true) {
    cmd->add_option("-i,--input", opts.input,
                    "input CSV path, or '-' for standard input");
    if (with_bounds) {
        cmd->add_option("-b,--bounds", opts.bounds,
                        "feasible region: 'auto' (bounding box) or lx,ux,ly,uy");
    }
    cmd->add_option("-f,--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

int cmd_analyze(const CommonOpts& opts, bool allow_reduced, std::istream& in,
                std::ostream& out, std::ostream& err) {
    InputSource source(opts.input, in);
    const std::vector<Point2> points = read_points_csv(source.get());
    const FeasibleRegion region = resolve_bounds(opts.bounds, points);
    const MomentSummary summary = summarize(from_dataset(points));
    const SensitivityReport rep =
        primary_sensitivities(summary, region, allow_reduced);
    note_small_dataset(err, summary.count);
    if (opts.format == "json") {
        out << to_json(rep).dump(2) << '\n';
    } else {
        write_csv(out, rep);
    }
    return 0;
}

int cmd_stream(const CommonOpts& opts, std::uint32_t warmup, std::istream& in,
               std::ostream& out, std::ostream& err) {
    if (warmup < 3) {
        throw InputError("stream warmup must be >= 3 points");
    }
    InputSource source(opts.input, in);
    CsvPointReader reader(source.get());

    std::vector<Point2> head;
    head.reserve(warmup);
    while (head.size() < warmup) {
        auto p = reader.next();
        if (!p) {
            throw InputError("stream ended before the " +
                             std::to_string(warmup) + "-point warmup");
        }
        head.push_back(*p);
    }
    const FeasibleRegion region = resolve_bounds(opts.bounds, head);
    OnlineMoments state = from_dataset(head);
    note_small_dataset(err, state.count);

    bool first = true;
    while (auto p = reader.next()) {
        auto [record, next] = stream_step(state, *p, region);
        state = next;
        if (opts.format == "json") {
            out << to_json(record).dump() << '\n';
        } else {
            write_csv_row(out, record, first);
        }
        out.flush();  // records appear before end-of-stream
        first = false;
    }
    return 0;
}

int cmd_oracle(const CommonOpts& opts, std::uint32_t resolution,
               std::istream& in, std::ostream& out, std::ostream& err) {
    InputSource source(opts.input, in);
    const std::vector<Point2> points = read_points_csv(source.get());
    const FeasibleRegion region = resolve_bounds(opts.bounds, points);
    const OracleReport rep = grid_sensitivities(points, region, resolution);
    note_small_dataset(err, points.size());
    if (opts.format == "json") {
        out << to_json(rep).dump(2) << '\n';
    } else {
        write_csv(out, rep);
    }
    return 0;
}

int cmd_synth(const DistributionSpec& spec, std::ostream& out) {
    write_points_csv(out, sample(spec));
    return 0;
}

int cmd_bench(std::uint32_t trials, const std::vector<std::uint32_t>& sizes,
              std::uint32_t grid, double tol, std::uint64_t seed,
              const std::string& format, std::ostream& out) {
    const BenchReport rep = run_benchmark(trials, sizes, grid, tol, seed);
    if (format == "json") {
        out << to_json(rep).dump(2) << '\n';
    } else {
        write_csv(out, rep);
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    try {
        CLI::App app{
            "Worst-case one-point sensitivity of the Pearson correlation "
            "and its p-value over a bounded region"};
        app.name("corrsens");
        app.require_subcommand(1);

        CommonOpts analyze_opts;
        bool allow_reduced = false;
        CLI::App* analyze =
            app.add_subcommand("analyze", "one-shot sensitivity report");
        add_common(analyze, analyze_opts);
        analyze->add_flag("--allow-reduced", allow_reduced,
                          "accept 2-point datasets (r side only)");

        CommonOpts stream_opts;
        std::uint32_t warmup = 3;
        CLI::App* stream = app.add_subcommand(
            "stream", "per-row monitoring records (NDJSON or CSV rows)");
        add_common(stream, stream_opts);
        stream->add_option("--warmup", warmup,
                           "rows absorbed before records begin (>= 3)");

        CommonOpts oracle_opts;
        std::uint32_t resolution = 101;
        CLI::App* oracle = app.add_subcommand(
            "oracle", "grid-search cross-check of the closed form");
        add_common(oracle, oracle_opts);
        oracle->add_option("-g,--grid", resolution,
                           "lattice points per axis (>= 2)");

        std::string synth_kind = "uniform";
        std::uint32_t synth_n = 0;
        std::uint64_t synth_seed = default_seed();
        CLI::App* synth =
            app.add_subcommand("synth", "emit a synthetic dataset as CSV");
        synth
            ->add_option("-k,--kind", synth_kind, "distribution family")
            ->check(CLI::IsMember(
                {"uniform", "gaussian", "dirichlet", "contaminated"}));
        synth->add_option("-n,--n", synth_n, "number of points")->required();
        synth->add_option("-s,--seed", synth_seed, "RNG seed");

        std::uint32_t bench_trials = 100;
        std::vector<std::uint32_t> bench_sizes = {10, 50, 100};
        std::uint32_t bench_grid = 10;
        double bench_tol = 1e-5;
        std::uint64_t bench_seed = default_seed();
        std::string bench_format = "json";
        CLI::App* bench = app.add_subcommand(
            "bench", "closed form vs. grid agreement benchmark");
        bench->add_option("-t,--trials", bench_trials, "trials per cell");
        bench->add_option("--sizes", bench_sizes, "dataset sizes")
            ->delimiter(',');
        bench->add_option("-g,--grid", bench_grid, "lattice points per axis");
        bench->add_option("--tol", bench_tol, "relative agreement tolerance");
        bench->add_option("-s,--seed", bench_seed, "RNG seed");
        bench->add_option("-f,--format", bench_format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e, out, err);
            return code == 0 ? 0 : 1;
        }

        if (analyze->parsed()) {
            return cmd_analyze(analyze_opts, allow_reduced, in, out, err);
        }
        if (stream->parsed()) {
            return cmd_stream(stream_opts, warmup, in, out, err);
        }
        if (oracle->parsed()) {
            return cmd_oracle(oracle_opts, resolution, in, out, err);
        }
        if (synth->parsed()) {
            return cmd_synth({dist_kind_from_string(synth_kind), synth_n,
                              synth_seed},
                             out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_trials, bench_sizes, bench_grid, bench_tol,
                             bench_seed, bench_format, out);
        }
        err << "error: no command given\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace corrsens
