/*
   Copyright 2026 The slowseq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <slowseq/slowseq.h>

#include "bfile.hpp"

namespace slowseq::cli {

namespace {

    class UsageError : public std::runtime_error {
      public:
        using std::runtime_error::runtime_error;
    };

    struct SpecDeleter {
        void operator()(slowseq_spec* p) const { slowseq_spec_free(p); }
    };
    struct TraceDeleter {
        void operator()(slowseq_trace* p) const { slowseq_trace_free(p); }
    };
    struct ReportDeleter {
        void operator()(slowseq_report* p) const { slowseq_report_free(p); }
    };
    using SpecPtr = std::unique_ptr<slowseq_spec, SpecDeleter>;
    using TracePtr = std::unique_ptr<slowseq_trace, TraceDeleter>;
    using ReportPtr = std::unique_ptr<slowseq_report, ReportDeleter>;

    // Non-OK status from a library call becomes a UsageError.
    void check(slowseq_status status, const std::string& what) {
        if (status != SLOWSEQ_OK) {
            throw UsageError(what + ": " + slowseq_last_error());
        }
    }

    std::vector<std::int64_t> parse_list(const std::string& text) {
        std::vector<std::int64_t> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) {
                parse_range(item, out);
            }
        }
        return out;
    }

    std::vector<std::int64_t> parse_lists(const std::vector<std::string>& items) {
        std::vector<std::int64_t> out;
        for (const auto& item : items) {
            const auto part = parse_list(item);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }

    struct SpecOptions {
        std::string preset;
        std::string k;
        std::string n_init;
        std::string params;
        std::string offsets;
        std::string shifts;
        std::string init;

        void add_to(CLI::App& cmd) {
            cmd.add_option("--preset", preset, "Named recurrence: Q, Qrs, V, W, Qrst, conolly, B, bk, bprime");
            cmd.add_option("--k", k, "Number of terms for the bk preset");
            cmd.add_option("--n-init", n_init, "Identity initial-condition length for the bk preset");
            cmd.add_option("--params", params, "Comma-separated preset parameters (Qrs: r,s; Qrst: r,s,t[,N])");
            cmd.add_option("--offsets", offsets, "Inner offsets o_j of a custom recurrence");
            cmd.add_option("--shifts", shifts, "Outer shifts e_j of a custom recurrence (default all 0)");
            cmd.add_option("--init", init, "Initial condition of a custom recurrence");
        }

        [[nodiscard]] bool given() const { return !preset.empty() || !offsets.empty(); }

        [[nodiscard]] SpecPtr build() const {
            slowseq_spec* raw = nullptr;
            if (!preset.empty()) {
                if (!offsets.empty() || !init.empty() || !shifts.empty()) {
                    throw UsageError("--preset cannot be combined with --offsets/--shifts/--init");
                }
                std::vector<std::int64_t> p = parse_list(params);
                if (!k.empty() || !n_init.empty()) {
                    if (k.empty() || n_init.empty()) {
                        throw UsageError("--k and --n-init go together");
                    }
                    p = {parse_integer(k), parse_integer(n_init)};
                }
                check(slowseq_spec_preset(preset.c_str(), p.data(), p.size(), &raw), "preset");
                return SpecPtr(raw);
            }
            if (offsets.empty() || init.empty()) {
                throw UsageError("need --preset, or --offsets with --init");
            }
            const auto o = parse_list(offsets);
            auto e = shifts.empty() ? std::vector<std::int64_t>(o.size(), 0) : parse_list(shifts);
            const auto i = parse_list(init);
            if (e.size() != o.size()) {
                throw UsageError("--shifts and --offsets differ in length");
            }
            check(slowseq_spec_custom(e.data(), o.data(), o.size(), i.data(), i.size(), &raw), "recurrence");
            return SpecPtr(raw);
        }
    };

    TracePtr generate(const slowseq_spec* spec, std::int64_t count) {
        slowseq_trace* raw = nullptr;
        check(slowseq_generate(spec, count, &raw), "generate");
        return TracePtr(raw);
    }

    std::int64_t fast_b(std::int64_t n) {
        std::int64_t v = 0;
        check(slowseq_fast_b(n, &v), "fastb " + std::to_string(n));
        return v;
    }

    int print_report(std::ostream& out, const std::string& title, const slowseq_report* report) {
        std::int64_t lo = 0;
        std::int64_t hi = 0;
        slowseq_report_range(report, &lo, &hi);
        const bool passed = slowseq_report_passed(report) != 0;
        out << title << ": " << (passed ? "PASS" : "FAIL") << " (range " << lo << ".." << hi << ")\n";
        const std::size_t n_viol = slowseq_report_violation_count(report);
        constexpr std::size_t kShown = 20;
        for (std::size_t j = 0; j < n_viol && j < kShown; ++j) {
            const char* where = nullptr;
            std::int64_t expected = 0;
            std::int64_t actual = 0;
            slowseq_report_violation(report, j, &where, &expected, &actual);
            out << "  violation " << where << ": expected " << expected << ", got " << actual << '\n';
        }
        if (n_viol > kShown) {
            out << "  ... " << (n_viol - kShown) << " more violations\n";
        }
        for (std::size_t j = 0; j < slowseq_report_finding_count(report); ++j) {
            out << "  finding: " << slowseq_report_finding(report, j) << '\n';
        }
        return passed ? kExitOk : kExitViolation;
    }

    template <class F>
    int run_report(std::ostream& out, const std::string& title, F&& call) {
        slowseq_report* raw = nullptr;
        const slowseq_status status = call(&raw);
        if (status == SLOWSEQ_ERR_ORACLE_DIED) {
            out << title << ": FAIL (" << slowseq_last_error() << ")\n";
            return kExitViolation;
        }
        check(status, title);
        ReportPtr report(raw);
        return print_report(out, title, report.get());
    }

    int worst(int a, int b) { return a > b ? a : b; }

    // ---- gen ----

    struct GenOptions {
        SpecOptions spec;
        std::string count;
        std::string output;
        std::string format = "bfile";
    };

    int cmd_gen(const GenOptions& opt, std::ostream& out) {
        const auto spec = opt.spec.build();
        const std::int64_t count = parse_integer(opt.count);
        if (count < 1) {
            throw UsageError("--count must be >= 1");
        }
        const auto trace = generate(spec.get(), count);

        std::ofstream file;
        std::ostream* sink = &out;
        if (!opt.output.empty()) {
            file.open(opt.output);
            if (!file) {
                throw UsageError("cannot write '" + opt.output + "'");
            }
            sink = &file;
        }
        const auto format = opt.format == "csv" ? Format::csv : Format::bfile;
        write_terms(*sink, {slowseq_trace_terms(trace.get()), slowseq_trace_length(trace.get())}, format);

        std::int64_t at = 0;
        std::int64_t arg = 0;
        if (slowseq_trace_died(trace.get(), &at, &arg)) {
            *sink << "# died at index " << at << " (argument " << arg << ")\n";
            return kExitDied;
        }
        return kExitOk;
    }

    // ---- fastb ----

    int cmd_fastb(const std::vector<std::string>& items, std::ostream& out) {
        const auto points = parse_lists(items);
        if (points.empty()) {
            throw UsageError("fastb needs at least one index");
        }
        for (std::int64_t n : points) {
            out << n << '\t' << fast_b(n) << '\n';
        }
        return kExitOk;
    }

    // ---- verify ----

    struct VerifyOptions {
        std::string suite;
        std::string limit;
        std::string k;
        std::string k_max = "6";
        std::string horizon = "10000";
    };

    std::int64_t limit_or(const VerifyOptions& opt, std::int64_t fallback) {
        return opt.limit.empty() ? fallback : parse_integer(opt.limit);
    }

    int verify_density(std::int64_t limit, std::ostream& out) {
        std::vector<std::int64_t> points;
        for (std::int64_t n = 1000; n <= limit; n *= 10) {
            points.push_back(n);
            if (n > std::numeric_limits<std::int64_t>::max() / 10) {
                break;
            }
        }
        if (points.empty()) {
            throw UsageError("density needs --limit >= 1000");
        }
        std::vector<slowseq_density_point> profile(points.size());
        check(slowseq_density_profile(points.data(), points.size(), profile.data()), "density");

        bool passed = true;
        for (std::size_t j = 0; j < profile.size(); ++j) {
            const auto& p = profile[j];
            out << "  n=" << p.n << " B(n)=" << p.b_of_n << " ratio=" << p.ratio_num << '/' << p.ratio_den
                << " deviation=" << p.deviation_num << '/' << p.deviation_den << '\n';
            // deviation < 1/1000 once n reaches 10^6
            if (p.n >= 1000000 && static_cast<__int128>(p.deviation_num) * 1000 >= p.deviation_den) {
                out << "  violation n=" << p.n << ": deviation not below 1/1000\n";
                passed = false;
            }
            if (j > 0) {
                const auto& q = profile[j - 1];
                if (static_cast<__int128>(q.deviation_num) * p.deviation_den <
                    static_cast<__int128>(p.deviation_num) * q.deviation_den) {
                    out << "  violation n=" << p.n << ": deviation increased\n";
                    passed = false;
                }
            }
        }
        out << "density: " << (passed ? "PASS" : "FAIL") << '\n';
        return passed ? kExitOk : kExitViolation;
    }

    int verify_jump(std::int64_t k, std::ostream& out) {
        const std::string tag = "k=" + std::to_string(k);
        int rc = run_report(out, "step-value " + tag, [&](slowseq_report** r) { return slowseq_verify_step_value(k, r); });
        rc = worst(rc, run_report(out, "plateau " + tag, [&](slowseq_report** r) { return slowseq_verify_plateau(k, r); }));
        slowseq_jump jump{};
        rc = worst(rc, run_report(out, "jump " + tag, [&](slowseq_report** r) { return slowseq_verify_jump(k, &jump, r); }));
        out << "  jump index " << jump.jump_index << ": B(" << jump.jump_index - 1 << ")=" << jump.value_before << " B("
            << jump.jump_index << ")=" << jump.value_at << " difference " << jump.difference << '\n';
        return rc;
    }

    int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
        if (opt.suite == "structure") {
            const auto limit = limit_or(opt, 100000);
            if (limit < 6) {
                throw UsageError("structure needs --limit >= 6");
            }
            return run_report(out, "structure", [&](slowseq_report** r) { return slowseq_verify_structure(limit, r); });
        }
        if (opt.suite == "lemmas") {
            const auto uniq = limit_or(opt, 1000000);
            const auto ident = limit_or(opt, 100000);
            if (ident < 6) {
                throw UsageError("lemmas needs --limit >= 6");
            }
            int rc = run_report(out, "lemma uniqueness",
                                [&](slowseq_report** r) { return slowseq_verify_lemma_uniqueness(uniq, r); });
            return worst(rc, run_report(out, "R identities",
                                        [&](slowseq_report** r) { return slowseq_verify_r_identities(ident, r); }));
        }
        if (opt.suite == "density") {
            return verify_density(limit_or(opt, 1000000), out);
        }
        if (opt.suite == "jump") {
            if (!opt.k.empty()) {
                const auto k = parse_integer(opt.k);
                if (k < 4) {
                    throw UsageError("jump needs --k >= 4");
                }
                return verify_jump(k, out);
            }
            int rc = kExitOk;
            for (std::int64_t k = 4; k <= 8; ++k) {
                rc = worst(rc, verify_jump(k, out));
            }
            return rc;
        }
        if (opt.suite == "only-slow") {
            const auto k_max = parse_integer(opt.k_max);
            const auto horizon = parse_integer(opt.horizon);
            return run_report(out, "only-slow", [&](slowseq_report** r) { return slowseq_scan_only_slow(k_max, horizon, r); });
        }
        throw UsageError("unknown suite '" + opt.suite + "'");
    }

    // ---- compare ----

    struct CompareOptions {
        std::string path;
        SpecOptions spec;
        bool fastb = false;
    };

    int cmd_compare(const CompareOptions& opt, std::ostream& out) {
        if (opt.fastb == opt.spec.given()) {
            throw UsageError("compare needs exactly one of --fastb or a recurrence (--preset/--offsets)");
        }
        std::vector<BFileRecord> records;
        try {
            records = read_bfile_path(opt.path);
        } catch (const ParseError& e) {
            throw UsageError(opt.path + ": " + e.what());
        }
        if (records.empty()) {
            throw UsageError(opt.path + ": no records");
        }
        if (records.front().index < 1) {
            throw UsageError(opt.path + ": indices must start at 1 or later");
        }

        TracePtr trace;
        if (!opt.fastb) {
            const auto spec = opt.spec.build();
            trace = generate(spec.get(), records.back().index);
        }
        const std::int64_t available = trace ? static_cast<std::int64_t>(slowseq_trace_length(trace.get())) : 0;
        for (const auto& rec : records) {
            if (trace && rec.index > available) {
                out << "mismatch at n=" << rec.index << ": file " << rec.value << ", sequence died after " << available
                    << " terms\n";
                return kExitViolation;
            }
            const std::int64_t computed = trace ? slowseq_trace_terms(trace.get())[rec.index - 1] : fast_b(rec.index);
            if (computed != rec.value) {
                out << "mismatch at n=" << rec.index << ": file " << rec.value << ", computed " << computed << '\n';
                return kExitViolation;
            }
        }
        out << "match: " << records.size() << " records (n=" << records.front().index << ".." << records.back().index
            << ")\n";
        return kExitOk;
    }

    // ---- bench ----

    struct BenchOptions {
        std::vector<std::string> points;
        std::string naive_limit = "1000000";
    };

    int cmd_bench(const BenchOptions& opt, std::ostream& out) {
        using Clock = std::chrono::steady_clock;
        auto points = parse_lists(opt.points);
        if (points.empty()) {
            points = {1000, 1000000, 1000000000, 1000000000000};
        }
        const std::int64_t naive_limit = parse_integer(opt.naive_limit);

        std::int64_t naive_max = 0;
        for (std::int64_t n : points) {
            if (n <= naive_limit) {
                naive_max = std::max(naive_max, n);
            }
        }

        struct Row {
            std::int64_t n;
            std::int64_t value;
            std::string naive;
            double fast_ns;
        };
        std::vector<Row> rows;
        int rc = kExitOk;

        TracePtr naive;
        double naive_ms = 0.0;
        if (naive_max > 0) {
            SpecPtr spec;
            slowseq_spec* raw = nullptr;
            check(slowseq_spec_preset("B", nullptr, 0, &raw), "preset");
            spec.reset(raw);
            const auto t0 = Clock::now();
            naive = generate(spec.get(), naive_max);
            naive_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        }

        for (std::int64_t n : points) {
            const std::int64_t value = fast_b(n);
            std::int64_t reps = 0;
            const auto t0 = Clock::now();
            auto elapsed = Clock::duration::zero();
            do {
                volatile std::int64_t sink = fast_b(n);
                (void)sink;
                ++reps;
                elapsed = Clock::now() - t0;
            } while (reps < 1000 && elapsed < std::chrono::milliseconds(5));
            const double ns = std::chrono::duration<double, std::nano>(elapsed).count() / static_cast<double>(reps);

            std::string naive_cell = "skipped";
            if (naive && n <= naive_max) {
                const bool agree = slowseq_trace_terms(naive.get())[n - 1] == value;
                naive_cell = agree ? "agree" : "DISAGREE";
                if (!agree) {
                    rc = kExitViolation;
                }
            }
            rows.push_back({n, value, naive_cell, ns});
        }

        for (const auto& r : rows) {
            out << r.n << '\t' << r.value << '\t' << r.naive << '\n';
        }
        out << "# timing (not deterministic)\n";
        for (const auto& r : rows) {
            out << "# fast_b n=" << r.n << " mean_ns=" << static_cast<std::int64_t>(r.fast_ns) << '\n';
        }
        if (naive) {
            out << "# naive n=" << naive_max << " total_ms=" << static_cast<std::int64_t>(naive_ms) << '\n';
        }
        return rc;
    }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nested-recurrence toolkit: generate, evaluate, and verify slow Hofstadter-like sequences", "slowseq"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate terms as an OEIS b-file");
    gen.spec.add_to(*gen_cmd);
    gen_cmd->add_option("--count", gen.count, "Number of terms")->required();
    gen_cmd->add_option("--output", gen.output, "Output file (default stdout)");
    gen_cmd->add_option("--format", gen.format, "bfile or csv")->check(CLI::IsMember({"bfile", "csv"}));

    std::vector<std::string> fastb_items;
    auto* fastb_cmd = app.add_subcommand("fastb", "Evaluate B(n) with the closed-form binary search");
    fastb_cmd->add_option("n", fastb_items, "Indices or ranges a..b (comma-separated allowed)")->required();

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", verify.suite, "structure | lemmas | density | jump | only-slow")
        ->required()
        ->check(CLI::IsMember({"structure", "lemmas", "density", "jump", "only-slow"}));
    verify_cmd->add_option("--limit", verify.limit, "Value/index limit of the suite");
    verify_cmd->add_option("--k", verify.k, "k for the jump suite (default 4..8)");
    verify_cmd->add_option("--k-max", verify.k_max, "Largest k for only-slow");
    verify_cmd->add_option("--horizon", verify.horizon, "Trace length for only-slow");

    CompareOptions compare;
    auto* compare_cmd = app.add_subcommand("compare", "Diff a b-file against computed values");
    compare_cmd->add_option("path", compare.path, "b-file to check")->required();
    compare.spec.add_to(*compare_cmd);
    compare_cmd->add_flag("--fastb", compare.fastb, "Compare against the closed-form B evaluator");

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time fast_b against the naive recurrence");
    bench_cmd->add_option("points", bench.points, "Indices (e.g. 1e3,1e6,1e9,1e12)");
    bench_cmd->add_option("--naive-limit", bench.naive_limit, "Largest n evaluated naively");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*fastb_cmd) return cmd_fastb(fastb_items, out);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*compare_cmd) return cmd_compare(compare, out);
        if (*bench_cmd) return cmd_bench(bench, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace slowseq::cli
