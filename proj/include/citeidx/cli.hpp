#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "citeidx/bounds.hpp"
#include "citeidx/dataset.hpp"
#include "citeidx/errors.hpp"
#include "citeidx/random_profiles.hpp"
#include "citeidx/report.hpp"

namespace citeidx::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violations = 1;
inline constexpr int exit_usage = 2;

struct InputOptions {
    std::string input;
    std::string fixture;
    bool positive_only = false;
};

struct OutputOptions {
    std::string format = "md";
    int precision = 3;
};

namespace detail {

inline void add_input_options(CLI::App& sub, InputOptions& in, bool required = true) {
    auto* input = sub.add_option("--input", in.input, "CSV (name,citations) or JSON (name -> counts) file");
    auto* fixture = sub.add_option("--fixture", in.fixture, "bundled data set id (see `fixtures`)");
    input->excludes(fixture);
    fixture->excludes(input);
    sub.add_flag("--positive-only", in.positive_only, "drop zero-cited papers before computing");
    if (required) {
        sub.callback([&in, &sub] {
            if (in.input.empty() && in.fixture.empty()) {
                throw CLI::ValidationError(sub.get_name(), "one of --input or --fixture is required");
            }
        });
    }
}

inline void add_output_options(CLI::App& sub, OutputOptions& out) {
    sub.add_option("--format", out.format, "md, csv or json")->check(CLI::IsMember({"md", "csv", "json"}));
    sub.add_option("--precision", out.precision, "decimals for real values")->check(CLI::Range(0, 12));
}

[[nodiscard]] inline CountingMode mode_of(const InputOptions& in) {
    return in.positive_only ? CountingMode::positive_only : CountingMode::all_records;
}

[[nodiscard]] inline FixtureData load(const InputOptions& in) {
    if (!in.fixture.empty()) return load_fixture(in.fixture, mode_of(in));
    return read_corpus_file(in.input, mode_of(in));
}

[[nodiscard]] inline Corpus load_corpus(const InputOptions& in, std::string_view command) {
    FixtureData data = load(in);
    if (auto* corpus = std::get_if<Corpus>(&data)) return std::move(*corpus);
    throw UsageError("fixture '" + in.fixture + "' holds published (h, g, R) records without citation counts; `" +
                     std::string(command) + "` needs profiles, only `compute` accepts it");
}

[[nodiscard]] inline std::vector<EntryReport> reports_for(const Corpus& corpus) {
    return build_reports(corpus, is_published_fixture(corpus));
}

[[nodiscard]] inline std::vector<std::string> split_keys(const std::string& text) {
    std::vector<std::string> keys;
    std::stringstream ss(text);
    std::string key;
    while (std::getline(ss, key, ',')) {
        if (!key.empty()) keys.push_back(key);
    }
    return keys;
}

inline void print_violations(const ViolationReport& report, std::ostream& out) {
    for (const auto& v : report.violations) {
        out << report.profile_id << ": [" << v.relation_id << "] " << v.check << ": " << v.left << ' ' << v.relation
            << ' ' << v.right << '\n';
    }
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 when `verify` finds violations and 2 on usage, input or parse errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Citation-impact indices: h, g, the g_d family, order r, g_bar, H and the A-K family"};
    app.name("citeidx");
    app.require_subcommand(1);

    InputOptions in;
    OutputOptions fmt;
    RenderOptions render_opts;
    std::string rank_by;
    std::string gfun_name;
    int ratio_table = 0;
    long long random_count = 0;
    std::uint64_t seed = 1;

    auto* compute = app.add_subcommand("compute", "index table for every entry");
    detail::add_input_options(*compute, in);
    detail::add_output_options(*compute, fmt);
    compute->add_option("--max-gd", render_opts.max_g_d, "highest d shown as a g_d column in md/csv")
        ->check(CLI::Range(2, 100000));

    auto* rank_cmd = app.add_subcommand("rank", "tie-aware rankings");
    detail::add_input_options(*rank_cmd, in);
    detail::add_output_options(*rank_cmd, fmt);
    rank_cmd->add_option("--by", rank_by, "comma-separated index keys")->required();

    auto* ratios = app.add_subcommand("ratios", "ratio bundles between the indices");
    detail::add_input_options(*ratios, in);
    detail::add_output_options(*ratios, fmt);
    ratios->add_option("--table", ratio_table, "1, 3, 5 or 7 selects one bundle; all by default")
        ->check(CLI::IsMember({1, 3, 5, 7}));

    auto* gfun = app.add_subcommand("gfun", "pieces of the threshold function G(x) for one entry");
    detail::add_input_options(*gfun, in);
    detail::add_output_options(*gfun, fmt);
    gfun->add_option("--name", gfun_name, "entry name")->required();

    auto* bounds = app.add_subcommand("bounds", "brackets on r, h, l and H");
    detail::add_input_options(*bounds, in);
    detail::add_output_options(*bounds, fmt);

    auto* verify = app.add_subcommand("verify", "check every proved relation on the given or random profiles");
    detail::add_input_options(*verify, in, false);
    verify->add_option("--random", random_count, "number of pseudo-random profiles")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "seed for --random");

    auto* fixtures_cmd = app.add_subcommand("fixtures", "list bundled data set ids");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        render_opts.precision = fmt.precision;
        const Format format = parse_format(fmt.format);

        if (*fixtures_cmd) {
            for (auto id : fixture_ids) out << id << '\n';
            return exit_ok;
        }
        if (*compute) {
            FixtureData data = detail::load(in);
            if (auto* legacy = std::get_if<std::vector<LegacyRecord>>(&data)) {
                out << render_legacy(*legacy, format, fmt.precision);
            } else {
                const Corpus& corpus = std::get<Corpus>(data);
                out << render(detail::reports_for(corpus), Layout::indices, format, render_opts);
            }
            return exit_ok;
        }
        if (*rank_cmd) {
            const Corpus corpus = detail::load_corpus(in, "rank");
            render_opts.rank_keys = detail::split_keys(rank_by);
            if (render_opts.rank_keys.empty()) throw UsageError("--by needs at least one key");
            out << render(detail::reports_for(corpus), Layout::ranking, format, render_opts);
            return exit_ok;
        }
        if (*ratios) {
            const Corpus corpus = detail::load_corpus(in, "ratios");
            render_opts.ratio_table = ratio_table;
            out << render(detail::reports_for(corpus), Layout::ratios, format, render_opts);
            return exit_ok;
        }
        if (*gfun) {
            const Corpus corpus = detail::load_corpus(in, "gfun");
            const CorpusEntry& entry = corpus.at(gfun_name);
            out << render_breakpoints(g_breakpoints(entry.profile), format, fmt.precision);
            return exit_ok;
        }
        if (*bounds) {
            const Corpus corpus = detail::load_corpus(in, "bounds");
            out << render(detail::reports_for(corpus), Layout::bounds, format, render_opts);
            return exit_ok;
        }
        if (*verify) {
            if (in.input.empty() && in.fixture.empty() && random_count == 0) {
                throw UsageError("verify needs --input, --fixture or --random");
            }
            std::size_t profiles = 0;
            std::size_t violations = 0;
            if (!in.input.empty() || !in.fixture.empty()) {
                const Corpus corpus = detail::load_corpus(in, "verify");
                for (const auto& e : corpus.entries) {
                    const ViolationReport report = validate(e.profile, e.name);
                    detail::print_violations(report, out);
                    violations += report.violations.size();
                    ++profiles;
                }
            }
            ProfileGenerator gen(seed);
            for (long long i = 0; i < random_count; ++i) {
                const CitationProfile p = gen.next();
                const ViolationReport report =
                    validate(p, "random#" + std::to_string(i) + " (" + std::string(gen.last_shape()) + ")");
                detail::print_violations(report, out);
                violations += report.violations.size();
                ++profiles;
            }
            out << "checked " << profiles << " profiles\n" << violations << " violations\n";
            return violations == 0 ? exit_ok : exit_violations;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args), out, err);
}

}  // namespace citeidx::cli
