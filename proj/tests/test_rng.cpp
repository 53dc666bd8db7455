#include "simplexorder/rng_test.hpp"

#include "simplexorder/report_io.hpp"
#include "support/binomial_oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

using namespace simplexorder;
using Catch::Approx;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("simplexorder_test_" + name);
}

std::filesystem::path write_text(const std::string& name, const std::string& body) {
    const auto path = temp_file(name);
    std::ofstream out(path, std::ios::binary);
    out << body;
    return path;
}

std::filesystem::path write_doubles(const std::string& name,
                                    const std::vector<double>& values,
                                    std::size_t truncate_bytes = 0) {
    const auto path = temp_file(name);
    std::ofstream out(path, std::ios::binary);
    std::string bytes;
    for (double v : values) {
        const auto word = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i)
            bytes.push_back(static_cast<char>((word >> (8 * i)) & 0xFF));
    }
    if (truncate_bytes > 0)
        bytes.resize(bytes.size() - truncate_bytes);
    out.write(bytes.data(), std::streamsize(bytes.size()));
    return path;
}

} // namespace

TEST_CASE("text streams parse decimals, CRLF included") {
    const auto path = write_text("ok.txt", "0.5\n0.25\r\n.75\n0\n");
    const auto vals = read_stream(StreamSource::text_file(path.string()), 4);
    REQUIRE(vals == std::vector<double>{0.5, 0.25, 0.75, 0.0});
    // extra trailing data is fine when fewer values are requested
    CHECK(read_stream(StreamSource::text_file(path.string()), 2).size() == 2);
    std::filesystem::remove(path);
}

TEST_CASE("text stream range violation names the line") {
    const auto path = write_text("range.txt", "0.5\n1.5\n");
    try {
        read_stream(StreamSource::text_file(path.string()), 2);
        FAIL("expected StreamDataError");
    } catch (const StreamDataError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    // 1.0 is excluded: the interval is half-open
    const auto one = write_text("one.txt", "1.0\n");
    CHECK_THROWS_AS(read_stream(StreamSource::text_file(one.string()), 1),
                    StreamDataError);
    const auto bad = write_text("bad.txt", "0.5\nnot-a-number\n");
    CHECK_THROWS_AS(read_stream(StreamSource::text_file(bad.string()), 2),
                    StreamDataError);
    std::filesystem::remove(path);
    std::filesystem::remove(one);
    std::filesystem::remove(bad);
}

TEST_CASE("text stream truncation reports the count read") {
    const auto path = write_text("short.txt", "0.5\n");
    try {
        read_stream(StreamSource::text_file(path.string()), 3);
        FAIL("expected StreamTruncationError");
    } catch (const StreamTruncationError& e) {
        CHECK(e.read_count() == 1);
    }
    std::filesystem::remove(path);
}

TEST_CASE("binary streams are little-endian doubles") {
    const std::vector<double> vals{0.125, 0.0, 0.999, 0.5};
    const auto path = write_doubles("ok.bin", vals);
    CHECK(read_stream(StreamSource::binary_file(path.string()), 4) == vals);

    const auto cut = write_doubles("cut.bin", vals, 3);
    try {
        read_stream(StreamSource::binary_file(cut.string()), 4);
        FAIL("expected StreamTruncationError");
    } catch (const StreamTruncationError& e) {
        CHECK(e.read_count() == 3);
    }

    const auto range = write_doubles("range.bin", {0.5, 1.25});
    try {
        read_stream(StreamSource::binary_file(range.string()), 2);
        FAIL("expected StreamDataError");
    } catch (const StreamDataError& e) {
        CHECK(std::string(e.what()).find("element 1") != std::string::npos);
    }
    std::filesystem::remove(path);
    std::filesystem::remove(cut);
    std::filesystem::remove(range);
}

TEST_CASE("missing stream file is a domain error, not a crash") {
    CHECK_THROWS_AS(read_stream(StreamSource::text_file("/nonexistent/x.txt"), 1),
                    std::domain_error);
}

TEST_CASE("generator streams are deterministic and in range") {
    const auto a = read_stream(StreamSource::uniform(Seed{3}), 1000);
    const auto b = read_stream(StreamSource::uniform(Seed{3}), 1000);
    CHECK(a == b);
    for (double v : a)
        CHECK((v >= 0.0 && v < 1.0));

    const auto ar = read_stream(StreamSource::autoregressive(0.3, Seed{3}), 1000);
    for (double v : ar)
        CHECK((v >= 0.0 && v < 1.0));

    // alpha = 0 degenerates to the iid uniform stream
    const auto ar0 = read_stream(StreamSource::autoregressive(0.0, Seed{3}), 1000);
    CHECK(ar0 == a);

    CHECK_THROWS_AS(StreamSource::autoregressive(1.0, Seed{0}), std::domain_error);
    CHECK_THROWS_AS(StreamSource::autoregressive(-0.1, Seed{0}), std::domain_error);
    CHECK_THROWS_AS(read_stream(StreamSource::uniform(Seed{0}), 0), std::domain_error);
}

TEST_CASE("exact binomial test reference values") {
    CHECK(exact_binomial_test(5, 10, Rational(1, 2)) == 1.0);
    CHECK(exact_binomial_test(0, 2, Rational(1, 2)) == Approx(0.5).margin(1e-12));
    CHECK(exact_binomial_test(10, 10, Rational(1, 2)) ==
          Approx(2.0 / 1024).epsilon(1e-10));
    CHECK(exact_binomial_test(0, 0, Rational(1, 2)) == 1.0);
    CHECK_THROWS_AS(exact_binomial_test(1, 10, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(exact_binomial_test(1, 10, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(exact_binomial_test(11, 10, Rational(1, 2)), std::domain_error);
}

TEST_CASE("exact binomial test matches full enumeration") {
    const Rational p0s[] = {Rational(1, 6), Rational(1, 4), Rational(1, 3),
                            Rational(1, 2)};
    for (std::int64_t n = 1; n <= 12; ++n)
        for (const auto& p0 : p0s)
            for (std::int64_t k = 0; k <= n; ++k)
                REQUIRE(exact_binomial_test(k, n, p0) ==
                        Approx(test_support::binomial_test_oracle(k, n, p0))
                            .margin(1e-9));
}

TEST_CASE("run_order_test wires p0, successes, and determinism together") {
    const auto src = StreamSource::uniform(Seed{42});
    const auto report = run_order_test(src, OrderKind::HR, 2, 512);
    CHECK(report.p0 == restrictiveness_constant(OrderKind::HR, 3));
    CHECK(report.p0 == Rational(1, 4));
    CHECK(report.pairs == 512);
    CHECK(report.successes >= 0);
    CHECK(report.successes <= 512);
    CHECK(report.group_size_n == 2);

    const auto again = run_order_test(src, OrderKind::HR, 2, 512);
    CHECK(report.successes == again.successes);
    CHECK(report.p_value == again.p_value);

    for (int n : {1, 3}) {
        const auto r = run_order_test(src, OrderKind::LR, n, 64);
        CHECK(r.p0 == restrictiveness_constant(OrderKind::LR, n + 1));
    }
    CHECK_THROWS_AS(run_order_test(src, OrderKind::ST, 0, 10), std::domain_error);
    CHECK_THROWS_AS(run_order_test(src, OrderKind::ST, 2, 0), std::domain_error);
}

TEST_CASE("file-backed and generator-backed tests agree") {
    const auto values = read_stream(StreamSource::uniform(Seed{77}), 4 * 300);
    std::string body;
    char buf[64];
    for (double v : values) {
        std::snprintf(buf, sizeof(buf), "%.17g\n", v);
        body += buf;
    }
    const auto path = write_text("stream.txt", body);
    const auto from_file =
        run_order_test(StreamSource::text_file(path.string()), OrderKind::ST, 2, 300);
    const auto from_gen =
        run_order_test(StreamSource::uniform(Seed{77}), OrderKind::ST, 2, 300);
    CHECK(from_file.successes == from_gen.successes);
    CHECK(from_file.p_value == from_gen.p_value);
    std::filesystem::remove(path);
}

TEST_CASE("success fraction converges to the Bernoulli parameter") {
    const std::int64_t pairs = 100000;
    const auto report =
        run_order_test(StreamSource::uniform(Seed{7}), OrderKind::ST, 2, pairs);
    const double p0 = 1.0 / 3;
    const double frac = static_cast<double>(report.successes) / pairs;
    CHECK(std::abs(frac - p0) <= 4.0 * std::sqrt(p0 * (1 - p0) / pairs));
}

TEST_CASE("order test under truncated stream surfaces the error") {
    const auto path = write_text("few.txt", "0.5\n0.25\n0.75\n");
    CHECK_THROWS_AS(
        run_order_test(StreamSource::text_file(path.string()), OrderKind::ST, 2, 100),
        StreamTruncationError);
    std::filesystem::remove(path);
}

TEST_CASE("max mean test under the null keeps |z| small") {
    const auto report =
        max_mean_test(StreamSource::uniform(Seed{8}), 2, 20000);
    CHECK(report.analytic_mean == Approx(11.0 / 18).margin(1e-15));
    CHECK(std::abs(report.z) <= 4.0);
    CHECK_THROWS_AS(max_mean_test(StreamSource::uniform(Seed{8}), 0, 10),
                    std::domain_error);

    const auto ar = max_mean_test(StreamSource::autoregressive(0.1, Seed{8}), 2, 20000);
    CHECK(std::isfinite(ar.z)); // recorded, no pass/fail asserted
}

TEST_CASE("table1 summary structure and determinism") {
    const auto s = table1_experiment(3, 2, 200, 0.1, Seed{99});
    REQUIRE(s.cells.size() == 6);
    CHECK(s.cells[0].model == "uniform");
    CHECK(s.cells[3].model == "ar");
    CHECK(s.cells[0].order == OrderKind::ST);
    CHECK(s.cells[2].order == OrderKind::LR);
    for (const auto& c : s.cells) {
        CHECK(c.mean_p_value >= 0.0);
        CHECK(c.mean_p_value <= 1.0);
        CHECK(c.std_p_value >= 0.0);
        CHECK(c.reps == 3);
    }
    const auto again = table1_experiment(3, 2, 200, 0.1, Seed{99});
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(s.cells[i].mean_p_value == again.cells[i].mean_p_value);

    const auto single = table1_experiment(1, 2, 100, 0.1, Seed{5});
    for (const auto& c : single.cells)
        CHECK(c.std_p_value == 0.0);
}

TEST_CASE("rejection rate under the null is near the nominal level") {
    int rejections = 0;
    const int runs = 60;
    for (int r = 0; r < runs; ++r) {
        const auto report = run_order_test(
            StreamSource::uniform(Seed{derive_stream(Seed{123}, unsigned(r))}),
            OrderKind::LR, 2, 2000);
        if (report.p_value < 0.05)
            ++rejections;
    }
    CHECK(static_cast<double>(rejections) / runs <= 0.15);
}

TEST_CASE("order report serializes to the pinned JSON schema") {
    const auto report =
        run_order_test(StreamSource::uniform(Seed{1}), OrderKind::HR, 2, 64);
    const auto j = to_json(report);
    REQUIRE(j.size() == 7);
    CHECK(j.at("order") == "hr");
    CHECK(j.at("n") == 2);
    CHECK(j.at("pairs") == 64);
    CHECK(j.at("p0_num") == 1);
    CHECK(j.at("p0_den") == 4);
    CHECK(j.contains("successes"));
    CHECK(j.contains("p_value"));
    // round-trip: parse then re-serialize, byte-identical
    const std::string dumped = j.dump();
    CHECK(nlohmann::json::parse(dumped).dump() == dumped);

    const std::string csv = to_csv_row(report);
    CHECK(csv.rfind("hr,2,64,", 0) == 0);
    CHECK(order_report_csv_header() ==
          "order,n,pairs,successes,p0_num,p0_den,p_value");
}

TEST_CASE("table1 summary serializes to JSON and CSV") {
    const auto s = table1_experiment(2, 2, 100, 0.1, Seed{1});
    const auto j = to_json(s);
    CHECK(j.at("cells").size() == 6);
    const std::string dumped = j.dump();
    CHECK(nlohmann::json::parse(dumped).dump() == dumped);
    const auto csv = to_csv_rows(s);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
