// End-to-end checks of the installed command surface, driven as a subprocess.

#include <doctest.h>

#include <string>

#include "splitlink/io.hpp"
#include "support/subprocess.hpp"

using namespace splitlink;
using splitlink::testing::run_process;
using splitlink::testing::write_temp_file;

namespace {

const std::string kCli = SPLITLINK_CLI_PATH;

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze wwbar table shows six half-probability rows and hopf3") {
    const auto result = run_process(kCli + " analyze wwbar --format table");
    REQUIRE(result.exit_code == 0);
    CHECK(contains(result.out, "analogue: HOPF3"));
    std::size_t rows = 0, pos = 0;
    while ((pos = result.out.find("0.5000 ", pos)) != std::string::npos) {
        ++rows;
        ++pos;
    }
    CHECK(rows == 6);
}

TEST_CASE("analyze star json re-parses, is byte-stable, and names center C") {
    const auto result = run_process(kCli + " analyze star --format json");
    REQUIRE(result.exit_code == 0);
    const ReportDocument doc = parse_report(result.out);
    CHECK(doc.state_label == "star");
    CHECK(doc.classification.primary_analogue == Analogue::Chain3);
    REQUIRE(doc.classification.center.has_value());
    CHECK(*doc.classification.center == 2);
    CHECK(doc.classification.borromean_outcomes ==
          std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
    CHECK(contains(result.out, "\"center\": \"C\""));
    CHECK(contains(result.out, "\"borromean_outcomes\""));
    CHECK(render_report(doc, ReportFormat::Json) == result.out);

    const auto again = run_process(kCli + " analyze star --format json");
    CHECK(again.out == result.out);
}

TEST_CASE("analyze csv carries the star rows") {
    const auto result = run_process(kCli + " analyze star --format csv");
    REQUIRE(result.exit_code == 0);
    CHECK(contains(result.out, "A,1,0.75,2"));
    CHECK(contains(result.out, "B,1,0.25,1"));
}

TEST_CASE("analyze respects the semantics flag") {
    const auto possibilistic = run_process(kCli + " analyze star");
    CHECK(contains(possibilistic.out,
                   "consistency with CHAIN3 (center C) under possibilistic "
                   "semantics: true"));
    const auto necessitarian =
        run_process(kCli + " analyze star --semantics necessitarian");
    CHECK(contains(necessitarian.out,
                   "consistency with CHAIN3 (center C) under necessitarian "
                   "semantics: false"));
}

TEST_CASE("analyze from a state file") {
    const auto path = write_temp_file(
        "cli_state.json",
        R"({"num_qubits": 3, "amplitudes": [[0.5,0],[0,0],[0,0],[0,0],[0.5,0],[0.5,0],[0,0],[0.5,0]]})");
    const auto result =
        run_process(kCli + " analyze --file " + path.string() + " --format json");
    REQUIRE(result.exit_code == 0);
    const ReportDocument doc = parse_report(result.out);
    CHECK(doc.classification.primary_analogue == Analogue::Chain3);
}

TEST_CASE("analyze outside three qubits still renders the profile") {
    const auto bell = run_process(kCli + " analyze bell --format json");
    REQUIRE(bell.exit_code == 0);
    const ReportDocument doc = parse_report(bell.out);
    CHECK(doc.profile.num_qubits == 2);
    CHECK(doc.profile.entries.size() == 4);
    CHECK(doc.classification.primary_analogue == Analogue::Unclassified);

    const auto dicke = run_process(kCli + " analyze dicke42 --format csv");
    REQUIRE(dicke.exit_code == 0);
    CHECK(contains(dicke.out, "D,1,0.500000000000000"));
}

TEST_CASE("missing and malformed files exit 1 with a diagnostic") {
    const auto missing = run_process(kCli + " analyze --file missing.json");
    CHECK(missing.exit_code == 1);
    CHECK(contains(missing.err, "missing.json"));
    CHECK(missing.out.empty());

    const auto path = write_temp_file("cli_bad.json", "{broken");
    const auto malformed = run_process(kCli + " analyze --file " + path.string());
    CHECK(malformed.exit_code == 1);
    CHECK_FALSE(malformed.err.empty());
}

TEST_CASE("selector must be exactly one of name or file") {
    CHECK(run_process(kCli + " analyze").exit_code == 2);
    CHECK(run_process(kCli + " analyze star --file x.json").exit_code == 2);
    CHECK(run_process(kCli + " analyze nosuchstate").exit_code == 2);
}

TEST_CASE("measure prints the record") {
    auto probability_of = [](const std::string& out) {
        const auto pos = out.find("probability: ");
        REQUIRE(pos != std::string::npos);
        return std::stod(out.substr(pos + 13));
    };

    const auto star = run_process(kCli + " measure star --qubit 2 --outcome 0");
    REQUIRE(star.exit_code == 0);
    CHECK(probability_of(star.out) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(contains(star.out, "0.707107|00> + 0.707107|10>"));

    const auto ghz = run_process(kCli + " measure ghz --qubit 0 --outcome 1");
    REQUIRE(ghz.exit_code == 0);
    CHECK(probability_of(ghz.out) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(contains(ghz.out, "1|11>"));
}

TEST_CASE("measure rejects an out-of-range qubit with exit 2") {
    const auto result = run_process(kCli + " measure wwbar --qubit 5 --outcome 0");
    CHECK(result.exit_code == 2);
    CHECK_FALSE(result.err.empty());
}

TEST_CASE("schmidt subcommand reports rank, spectrum and maximality") {
    const auto ghz = run_process(kCli + " schmidt ghz --left 0 --right 1,2");
    REQUIRE(ghz.exit_code == 0);
    CHECK(contains(ghz.out, "schmidt rank: 2"));
    CHECK(contains(ghz.out, "maximally entangled: true"));
    CHECK(contains(ghz.out, "0.49999999999999") != false);

    // frozen oracle values (2 +- sqrt 2)/4 for star across A | BC
    const auto star = run_process(kCli + " schmidt star --left 0 --right 1,2");
    REQUIRE(star.exit_code == 0);
    CHECK(contains(star.out, "schmidt rank: 2"));
    CHECK(contains(star.out, "0.85355339059327"));
    CHECK(contains(star.out, "0.14644660940672"));

    const auto bell = run_process(kCli + " schmidt bell --left 0 --right 1");
    REQUIRE(bell.exit_code == 0);
    CHECK(contains(bell.out, "maximally entangled: true"));
}

TEST_CASE("schmidt rejects invalid partitions with exit 2") {
    CHECK(run_process(kCli + " schmidt ghz --left 0 --right 1").exit_code == 2);
    CHECK(run_process(kCli + " schmidt ghz --left 0,1 --right 1,2").exit_code == 2);
    CHECK(run_process(kCli + " schmidt ghz --left a --right 1,2").exit_code == 2);
}

TEST_CASE("states catalogue lists every canonical state") {
    const auto result = run_process(kCli + " states");
    REQUIRE(result.exit_code == 0);
    CHECK(contains(result.out, "star = 1/2(|000>+|100>+|101>+|111>)"));
    CHECK(contains(result.out, "ghz = "));
    CHECK(contains(result.out, "w = "));
    std::size_t lines = 0;
    for (char c : result.out) lines += (c == '\n');
    CHECK(lines >= 7);
}

TEST_CASE("usage errors exit 2, never abort") {
    CHECK(run_process(kCli).exit_code == 2);
    CHECK(run_process(kCli + " nosuchcommand").exit_code == 2);
    CHECK(run_process(kCli + " analyze star --format yaml").exit_code == 2);
    CHECK(run_process(kCli + " measure star --qubit 0 --outcome 7").exit_code == 2);
    CHECK(run_process(kCli + " --help").exit_code == 0);
}

}  // TEST_SUITE
