// Command-line front end: exact analytics, Monte Carlo verification, and the
// order-comparability randomness test battery.

#include "simplexorder/identities.hpp"
#include "simplexorder/max_coordinate.hpp"
#include "simplexorder/mc.hpp"
#include "simplexorder/orders.hpp"
#include "simplexorder/report_io.hpp"
#include "simplexorder/rng_test.hpp"
#include "simplexorder/simplex.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace simplexorder;

std::string rational_with_decimal(const Rational& q) {
    return to_fraction_string(q) + " (" + format_decimal(to_double(q)) + ")";
}

void print_mc(const MCEstimate& est, int workers, const std::string& target) {
    std::cout << "estimate  " << format_decimal(est.estimate) << "\n"
              << "std_error " << format_decimal(est.std_error) << "\n"
              << "samples   " << est.samples << "\n"
              << "seed      " << est.seed.value << "\n"
              << "workers   " << workers << "\n"
              << "generator " << est.generator << "\n"
              << "target    " << target << "\n";
}

std::string describe_source(const StreamSource& s) {
    std::string out{stream_kind_name(s.kind)};
    switch (s.kind) {
    case StreamKind::FileText:
    case StreamKind::FileBinary:
        out += " " + s.path;
        break;
    case StreamKind::GenAr:
        out += " alpha=" + format_decimal(s.alpha) + " seed=" + std::to_string(s.seed.value);
        break;
    case StreamKind::GenUniform:
        out += " seed=" + std::to_string(s.seed.value);
        break;
    }
    return out;
}

//! Source flags shared by the `test` subcommands.
struct SourceFlags {
    std::string input;
    bool binary = false;
    std::string generator = "uniform";
    double alpha = 0.1;
    std::uint64_t seed = 0;
    CLI::Option* alpha_opt = nullptr;
    CLI::Option* seed_opt = nullptr;

    void attach(CLI::App* cmd) {
        auto* in = cmd->add_option("--input", input, "read the stream from FILE");
        cmd->add_flag("--binary", binary,
                      "input file holds little-endian IEEE-754 doubles")
            ->needs(in);
        cmd->add_option("--generator", generator, "built-in stream: uniform or ar")
            ->check(CLI::IsMember({"uniform", "ar"}))
            ->excludes(in);
        alpha_opt = cmd->add_option("--alpha", alpha, "AR coefficient in [0,1)")
                        ->excludes(in);
        seed_opt = cmd->add_option("--seed", seed, "generator seed (default 0)")
                       ->excludes(in);
    }

    StreamSource make() const {
        if (!input.empty())
            return binary ? StreamSource::binary_file(input)
                          : StreamSource::text_file(input);
        if (generator == "ar")
            return StreamSource::autoregressive(alpha, Seed{seed});
        if (alpha_opt != nullptr && alpha_opt->count() > 0)
            throw std::domain_error("--alpha applies only to --generator ar");
        return StreamSource::uniform(Seed{seed});
    }
};

void emit_order_report(const OrderTestReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(r).dump() << "\n";
    } else if (format == "csv") {
        std::cout << order_report_csv_header() << "\n" << to_csv_row(r) << "\n";
    } else {
        std::cout << "order     " << order_name(r.order) << "\n"
                  << "n         " << r.group_size_n << "\n"
                  << "pairs     " << r.pairs << "\n"
                  << "successes " << r.successes << "\n"
                  << "p0        " << rational_with_decimal(r.p0) << "\n"
                  << "p_value   " << format_decimal(r.p_value) << "\n"
                  << "source    " << describe_source(r.source) << "\n";
    }
}

void emit_table1(const Table1Summary& s, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(s).dump() << "\n";
    } else if (format == "csv") {
        std::cout << table1_csv_header() << "\n" << to_csv_rows(s);
    } else {
        std::cout << "n=" << s.group_size_n << " pairs=" << s.pairs
                  << " alpha=" << format_decimal(s.alpha) << " reps=" << s.reps
                  << " seed=" << s.seed.value << "\n";
        for (const auto& c : s.cells)
            std::cout << c.model << "\t" << order_name(c.order) << "\t"
                      << format_decimal(c.mean_p_value) << " +- "
                      << format_decimal(c.std_p_value) << "\n";
    }
}

void emit_max_mean(const MaxMeanReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(r).dump() << "\n";
    } else if (format == "csv") {
        std::cout << "n,groups,sample_mean,analytic_mean,std_error,z\n"
                  << r.group_size_n << "," << r.groups << ","
                  << format_decimal(r.sample_mean) << ","
                  << format_decimal(r.analytic_mean) << ","
                  << format_decimal(r.std_error) << "," << format_decimal(r.z)
                  << "\n";
    } else {
        std::cout << "n             " << r.group_size_n << "\n"
                  << "groups        " << r.groups << "\n"
                  << "sample_mean   " << format_decimal(r.sample_mean) << "\n"
                  << "analytic_mean " << format_decimal(r.analytic_mean) << "\n"
                  << "std_error     " << format_decimal(r.std_error) << "\n"
                  << "z             " << format_decimal(r.z) << "\n"
                  << "source        " << describe_source(r.source) << "\n";
    }
}

void build_analytics(CLI::App& app) {
    auto* analytics = app.add_subcommand("analytics", "exact and closed-form values");
    analytics->require_subcommand(1);

    {
        auto* cmd = analytics->add_subcommand("restrictiveness",
                                              "P(Theta <= Theta') for an order");
        auto order = std::make_shared<std::string>("st");
        auto n = std::make_shared<int>(2);
        cmd->add_option("--order", *order, "st, hr, or lr")->required();
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->callback([order, n] {
            std::cout << rational_with_decimal(
                             restrictiveness_constant(parse_order(*order), *n))
                      << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand("cdf", "P(max(Theta) <= b)");
        auto n = std::make_shared<int>(2);
        auto u = std::make_shared<double>(1.0);
        auto b = std::make_shared<double>(0.5);
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->add_option("--b", *b, "threshold")->required();
        cmd->callback([n, u, b] {
            if (*n > 30)
                std::cerr << "warning: alternating sum is numerically fragile for n > 30\n";
            std::cout << format_decimal(whitworth_cdf(MaxDistParams(*n, *u), *b)) << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand("moment", "E[max(Theta)^t]");
        auto n = std::make_shared<int>(2);
        auto u = std::make_shared<double>(1.0);
        auto t = std::make_shared<int>(1);
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->add_option("--t", *t, "moment order")->required();
        cmd->callback([n, u, t] {
            if (*u == 1.0)
                std::cout << rational_with_decimal(moment_rational(*n, *t)) << "\n";
            else
                std::cout << format_decimal(moment(MaxDistParams(*n, *u), *t)) << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand("variance", "Var(max(Theta))");
        auto n = std::make_shared<int>(2);
        auto u = std::make_shared<double>(1.0);
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->callback([n, u] {
            if (*u == 1.0)
                std::cout << rational_with_decimal(variance_rational(*n)) << "\n";
            else
                std::cout << format_decimal(variance(MaxDistParams(*n, *u))) << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand(
            "jointcdf", "P(Theta_1 <= theta_1, ..., Theta_n <= theta_n)");
        auto theta = std::make_shared<std::vector<double>>();
        auto u = std::make_shared<double>(1.0);
        cmd->add_option("--theta", *theta, "coordinates (repeat per coordinate)")
            ->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->callback([theta, u] {
            std::cout << format_decimal(joint_cdf(*theta, *u)) << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand(
            "tailprob", "P(Theta_1 > theta_1, ..., Theta_n > theta_n)");
        auto theta = std::make_shared<std::vector<double>>();
        auto u = std::make_shared<double>(1.0);
        cmd->add_option("--theta", *theta, "coordinates (repeat per coordinate)")
            ->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->callback([theta, u] {
            std::cout << format_decimal(tail_prob(*theta, *u)) << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand("hrupper",
                                              "P(Theta >=hr theta) for fixed theta");
        auto theta = std::make_shared<std::vector<double>>();
        auto u = std::make_shared<double>(1.0);
        cmd->add_option("--theta", *theta, "simplex point (repeat per coordinate)")
            ->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->callback([theta, u] {
            std::cout << format_decimal(hr_upper_prob(SimplexVector(*theta, *u)))
                      << "\n";
        });
    }
    {
        auto* cmd = analytics->add_subcommand(
            "fnt", "f(n,t) = sum (-1)^(k-1) C(n,k) / k^t");
        auto n = std::make_shared<int>(1);
        auto t = std::make_shared<int>(0);
        cmd->add_option("--n", *n)->required();
        cmd->add_option("--t", *t)->required();
        cmd->callback(
            [n, t] { std::cout << rational_with_decimal(f_nt(*n, *t)) << "\n"; });
    }
}

void build_mc(CLI::App& app) {
    auto* mc = app.add_subcommand("mc", "seeded Monte Carlo verification");
    mc->require_subcommand(1);

    {
        auto* cmd = mc->add_subcommand("restrictiveness",
                                       "estimate P(Theta <= Theta')");
        auto order = std::make_shared<std::string>("st");
        auto n = std::make_shared<int>(2);
        auto samples = std::make_shared<std::int64_t>(1000000);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto threads = std::make_shared<int>(1);
        cmd->add_option("--order", *order, "st, hr, or lr")->required();
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->add_option("--samples", *samples, "sample pairs")->required();
        cmd->add_option("--seed", *seed, "seed (default 0)");
        cmd->add_option("--threads", *threads, "MC workers (default 1)");
        cmd->callback([order, n, samples, seed, threads] {
            const OrderKind kind = parse_order(*order);
            const MCEstimate est =
                mc_restrictiveness(kind, *n, *samples, Seed{*seed}, *threads);
            print_mc(est, *threads,
                     rational_with_decimal(restrictiveness_constant(kind, *n)));
        });
    }
    {
        auto* cmd = mc->add_subcommand("maxcdf", "empirical CDF of max(Theta)");
        auto n = std::make_shared<int>(2);
        auto u = std::make_shared<double>(1.0);
        auto samples = std::make_shared<std::int64_t>(1000000);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto bs = std::make_shared<std::vector<double>>();
        auto grid = std::make_shared<int>(0);
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->add_option("--samples", *samples, "draws")->required();
        cmd->add_option("--seed", *seed, "seed (default 0)");
        cmd->add_option("--b", *bs, "grid point (repeatable)");
        cmd->add_option("--grid", *grid, "G equispaced grid points on [u/n, u]");
        cmd->callback([n, u, samples, seed, bs, grid] {
            std::vector<double> points = *bs;
            if (points.empty()) {
                const int g = *grid > 0 ? *grid : 100;
                const double lo = *u / *n;
                for (int i = 0; i < g; ++i)
                    points.push_back(lo + (*u - lo) * i / (g - 1));
            }
            const auto ests = mc_max_cdf(*n, *u, points, *samples, Seed{*seed});
            std::cout << "b,empirical,std_error,analytic\n";
            for (std::size_t i = 0; i < points.size(); ++i)
                std::cout << format_decimal(points[i]) << ","
                          << format_decimal(ests[i].estimate) << ","
                          << format_decimal(ests[i].std_error) << ","
                          << format_decimal(
                                 whitworth_cdf(MaxDistParams(*n, *u), points[i]))
                          << "\n";
        });
    }
    {
        auto* cmd = mc->add_subcommand("moment", "estimate E[max(Theta)^t]");
        auto n = std::make_shared<int>(2);
        auto u = std::make_shared<double>(1.0);
        auto t = std::make_shared<int>(1);
        auto samples = std::make_shared<std::int64_t>(1000000);
        auto seed = std::make_shared<std::uint64_t>(0);
        cmd->add_option("--n", *n, "simplex dimension")->required();
        cmd->add_option("--u", *u, "simplex size (default 1)");
        cmd->add_option("--t", *t, "moment order")->required();
        cmd->add_option("--samples", *samples, "draws")->required();
        cmd->add_option("--seed", *seed, "seed (default 0)");
        cmd->callback([n, u, t, samples, seed] {
            const MCEstimate est = mc_moment(*n, *u, *t, *samples, Seed{*seed});
            std::string target;
            if (*u == 1.0)
                target = rational_with_decimal(moment_rational(*n, *t));
            else
                target = format_decimal(moment(MaxDistParams(*n, *u), *t));
            print_mc(est, 1, target);
        });
    }
}

void build_test(CLI::App& app) {
    auto* test = app.add_subcommand("test", "randomness test battery");
    test->require_subcommand(1);

    {
        auto* cmd = test->add_subcommand("order", "order-comparability binomial test");
        auto order = std::make_shared<std::string>("st");
        auto n = std::make_shared<int>(2);
        auto pairs = std::make_shared<std::int64_t>(10000);
        auto format = std::make_shared<std::string>("json");
        auto src = std::make_shared<SourceFlags>();
        cmd->add_option("--order", *order, "st, hr, or lr")->required();
        cmd->add_option("--n", *n, "stream values per group (default 2)");
        cmd->add_option("--pairs", *pairs, "number of point pairs")->required();
        cmd->add_option("--format", *format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        src->attach(cmd);
        cmd->callback([order, n, pairs, format, src] {
            emit_order_report(
                run_order_test(src->make(), parse_order(*order), *n, *pairs),
                *format);
        });
    }
    {
        auto* cmd = test->add_subcommand("maxmean", "max-coordinate mean test");
        auto n = std::make_shared<int>(2);
        auto groups = std::make_shared<std::int64_t>(100000);
        auto format = std::make_shared<std::string>("text");
        auto src = std::make_shared<SourceFlags>();
        cmd->add_option("--n", *n, "stream values per group (default 2)");
        cmd->add_option("--groups", *groups, "number of groups")->required();
        cmd->add_option("--format", *format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        src->attach(cmd);
        cmd->callback([n, groups, format, src] {
            emit_max_mean(max_mean_test(src->make(), *n, *groups), *format);
        });
    }
    {
        auto* cmd = test->add_subcommand(
            "table1", "repeated experiment over {uniform, ar} x {st, hr, lr}");
        auto reps = std::make_shared<int>(100);
        auto n = std::make_shared<int>(2);
        auto pairs = std::make_shared<std::int64_t>(10000);
        auto alpha = std::make_shared<double>(0.1);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto format = std::make_shared<std::string>("text");
        cmd->add_option("--reps", *reps, "repetitions per cell (default 100)");
        cmd->add_option("--n", *n, "stream values per group (default 2)");
        cmd->add_option("--pairs", *pairs, "pairs per test (default 10000)");
        cmd->add_option("--alpha", *alpha, "AR coefficient (default 0.1)");
        cmd->add_option("--seed", *seed, "master seed (default 0)");
        cmd->add_option("--format", *format, "text, json, or csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->callback([reps, n, pairs, alpha, seed, format] {
            emit_table1(table1_experiment(*reps, *n, *pairs, *alpha, Seed{*seed}),
                        *format);
        });
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniform simplex vectors: exact distribution theory, Monte Carlo "
                 "verification, and an order-based randomness test battery"};
    app.require_subcommand(1);
    build_analytics(app);
    build_mc(app);
    build_test(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const simplexorder::StreamDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const simplexorder::StreamTruncationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
