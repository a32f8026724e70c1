#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charseq/experiments.hpp"

#include <json.hpp>

#include <stdexcept>

using namespace charseq;

TEST_CASE("figure names round trip") {
    for (Figure f : {Figure::Aaron, Figure::Edward, Figure::Boris, Figure::Edith, Figure::Cecilia}) {
        CHECK(parse_figure(figure_name(f)) == f);
    }
    CHECK_THROWS_AS(parse_figure("zelda"), std::invalid_argument);
    CHECK_THROWS_AS(parse_figure(""), std::invalid_argument);
}

TEST_CASE("real formatting and CSV layout") {
    CHECK(format_real(0.5) == "0.5");
    CHECK(format_real(1.0 / 3.0) == "0.333333333");
    CHECK(format_real(13.0) == "13");
    Table t;
    t.header = {"a", "b"};
    t.rows = {{1.0, 0.25}, {2.0, -1.5}};
    CHECK(to_csv(t) == "a,b\n1,0.25\n2,-1.5\n");
    CHECK(t.column("b") == 1);
    CHECK_THROWS_AS(t.column("c"), std::out_of_range);
}

TEST_CASE("prime lists") {
    const auto primes = figure_primes(100);
    CHECK(primes == std::vector<std::uint32_t>{13, 17, 29, 37, 41, 53, 61, 73, 89, 97});
    CHECK(figure_primes(2000).size() == 146);
    const auto c = cecilia_primes(100);
    CHECK(std::vector<std::uint32_t>(c.begin(), c.begin() + 10) ==
          std::vector<std::uint32_t>{5, 17, 37, 101, 197, 257, 401, 577, 677, 1297});
    CHECK(c.back() == 746497);
}

TEST_CASE("edith table at a small bound") {
    ExperimentConfig cfg;
    cfg.figure = Figure::Edith;
    cfg.p_max = 100;
    const Table t = run_figure(cfg);
    CHECK(t.rows.size() == 10);
    CHECK(t.header.size() == 8);
    const std::size_t col = t.column("asym_df_h");
    for (const auto& row : t.rows) CHECK(row[col] == t.rows.front()[col]);
    CHECK(t.rows.front()[col] == doctest::Approx(0.157677).epsilon(1e-5));
    CHECK(t.rows.front()[t.column("asym_cdf_fh")] == doctest::Approx(1.005977).epsilon(1e-5));
}

TEST_CASE("figure tables are deterministic across job counts") {
    ExperimentConfig one;
    one.figure = Figure::Aaron;
    one.p_max = 300;
    ExperimentConfig many = one;
    many.jobs = 4;
    CHECK(to_csv(run_figure(one)) == to_csv(run_figure(many)));
}

TEST_CASE("figure configuration errors") {
    ExperimentConfig cfg;
    cfg.p_max = 12;
    CHECK_THROWS_AS(run_figure(cfg), std::invalid_argument);
    cfg.p_max = 100;
    cfg.jobs = 0;
    CHECK_THROWS_AS(run_figure(cfg), std::invalid_argument);
    cfg.jobs = 1;
    cfg.figure = Figure::Boris;
    cfg.lambda = -1.0;
    CHECK_THROWS_AS(run_figure(cfg), std::invalid_argument);
}

TEST_CASE("pair report") {
    PairRequest req;
    req.p = 13;
    req.left = Family::F;
    req.right = Family::G;
    const PairReport r = run_pair(req);
    CHECK(r.shift == 3);
    CHECK(r.length == 13);
    CHECK(r.direct.s == doctest::Approx(-4.0 / 13.0));
    CHECK(r.table.s == doctest::Approx(-4.0 / 13.0));
    CHECK(r.mean_square_residual < 1e-9);
    CHECK(r.quadruple_residual < 1e-8);

    const auto j = nlohmann::json::parse(pair_report_json(r));
    CHECK(j["p"] == 13);
    CHECK(j["left"] == "f");
    CHECK(j["mode"] == "natural");
    CHECK(j["params_direct"]["U"].get<double>() == doctest::Approx(0.0));
    CHECK(j["merit"]["cdf"].get<double>() == doctest::Approx(r.merit.cdf));
    CHECK(pair_report_text(r).find("psc ") != std::string::npos);

    req.mode = ParamMode::Explicit;
    req.shift = -5;
    req.length = 40;
    const PairReport e = run_pair(req);
    CHECK(e.shift == -5);
    CHECK(e.length == 40);

    req.length = 0;
    CHECK_THROWS_AS(run_pair(req), std::invalid_argument);
    req.p = 15;
    CHECK_THROWS_AS(run_pair(req), std::invalid_argument);
    req.p = 7;
    req.mode = ParamMode::Natural;
    CHECK_THROWS_AS(run_pair(req), std::domain_error);
}

TEST_CASE("constants table") {
    const auto cs = run_constants();
    CHECK(cs.front().name == "df_min");
    const std::string csv = constants_csv(cs);
    CHECK(csv.rfind("name,value\n", 0) == 0);
    CHECK(csv.find("mf_max,6.34206") != std::string::npos);
}
