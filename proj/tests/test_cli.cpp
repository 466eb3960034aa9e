#include "mcenter/central.hpp"
#include "mcenter/generators.hpp"
#include "mcenter/io.hpp"
#include "mcenter/report.hpp"

#include "support.hpp"

using namespace mcenter;
using namespace mcenter::test;
using nlohmann::json;

TEST_SUITE("cli") {
  TEST_CASE("generators") {
    FiniteMetricSpace g = grid_space(3);
    CHECK(g.matrix() == RationalMatrix{vec({"0", "1/2", "1"}), vec({"1/2", "0", "1/2"}), vec({"1", "1/2", "0"})});
    CHECK(g.labels() == std::vector<std::string>{"0", "1/2", "1"});
    CHECK(grid_space(1).size() == 1);

    FiniteMetricSpace c = cycle_space(4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(c.distance(i, (i + 1) % 4) == q("1/4"));
      CHECK(c.distance(i, (i + 2) % 4) == q("1/2"));
    }
    CHECK(random_space(4, 7).matrix() == random_space(4, 7).matrix());
    CHECK_FALSE(random_space(6, 7).matrix() == random_space(6, 8).matrix());
    CHECK_THROWS_AS(grid_space(0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_space(2), std::invalid_argument);
    CHECK_THROWS_AS(random_space(30, 1, 1, 4), std::invalid_argument);
  }

  TEST_CASE("group word metrics") {
    FiniteMetricSpace z5 = cyclic_group_space(5);
    FiniteMetricSpace c5 = cycle_space(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) CHECK(z5.distance(i, j) == 5 * c5.distance(i, j));

    FiniteMetricSpace s3 = symmetric_group_space(3);
    CHECK(s3.size() == 6);
    CHECK(diameter(s3) == 2);
    CHECK(s3.labels().front() == "012");

    CayleyTable z4 = cyclic_group_table(4);
    CHECK_THROWS_AS(group_space(z4, {{1, q("1")}}), std::invalid_argument);             // w(1) without w(3)
    CHECK_THROWS_AS(group_space(z4, {{1, q("1")}, {3, q("2")}}), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS(group_space(z4, {{2, q("1")}}), std::invalid_argument);             // generates only {0, 2}
    CHECK_THROWS_AS(group_space({{0, 0}, {1, 1}}, {}), std::invalid_argument);          // not a group table
    FiniteMetricSpace weighted = group_space(z4, {{1, q("1")}, {3, q("1")}, {2, q("3/2")}});
    CHECK(weighted.distance(0, 2) == q("3/2"));
  }

  TEST_CASE("generator dispatch") {
    CHECK(generate("grid", {"3"}, 0).matrix() == grid_space(3).matrix());
    CHECK(generate("random", {"4"}, 7).matrix() == random_space(4, 7).matrix());
    CHECK(generate("group", {"symmetric:3"}, 0).matrix() == symmetric_group_space(3).matrix());
    CHECK_THROWS_AS(generate("grid", {"x"}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("grid", {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate("torus", {"3"}, 0), std::invalid_argument);
  }

  TEST_CASE("space files") {
    FiniteMetricSpace j = read_space_json(R"({"labels": ["a", "b", "c"],
                                               "matrix": [["0", "0.25", 1], ["1/4", "0", "3/4"], [1, "0.75", "0"]]})");
    FiniteMetricSpace c = read_space_csv("a,b,c\n0,0.25,1\n1/4,0,3/4\n1,0.75,0\n");
    CHECK(j.matrix() == c.matrix());
    CHECK(j.labels() == c.labels());
    CHECK(j.distance(0, 1) == q("1/4"));
    CHECK(read_space_csv(space_to_csv(j)).matrix() == j.matrix());
    CHECK(read_space_json(space_to_json(j).dump()).matrix() == j.matrix());
    CHECK(space_digest(j) == space_digest(c));

    CHECK_THROWS_AS(read_space_json(R"({"matrix": [[0, 0.5], [0.5, 0]]})"), std::invalid_argument);
    CHECK_THROWS_AS(read_space_csv("a,b\n0,1\n2,0\n"), MetricError);
    CHECK(parse_rational("-2.5e-1") == q("-1/4"));
    CHECK(parse_rational_list("1/2, 0.5") == vec({"1/2", "1/2"}));
  }

  TEST_CASE("reports for the named examples") {
    Report iso = run("iso", grid_space(3));
    CHECK(iso.result["order"] == 2);
    CHECK(iso.ok());

    Report lambda = run("lambda", grid_space(3));
    CHECK(lambda.result["measure"] == json{"1/4", "1/2", "1/4"});

    RunOptions dirac;
    dirac.mu = "1,0";
    dirac.nu = "0,1";
    Report k = run("kantorovich", two_point(), dirac);
    CHECK(k.result["value"] == "1");
    CHECK(k.ok());
  }

  TEST_CASE("every command passes its assertions on small spaces") {
    RunOptions options;
    options.mu = "uniform";
    options.nu = "dirac:0";
    for (const auto& x : {grid_space(3), grid_space(5), cycle_space(4), path3(), random_space(5, 3)})
      for (const auto& command : commands()) {
        if (command == "explore-interval") continue;
        if (command == "lambda" && !quotient_tower(x).quasi_nilpotent) continue;
        Report r = run(command, x, options);
        CHECK_MESSAGE(r.ok(), command);
        CHECK(r.input_digest == space_digest(x));
      }
  }

  TEST_CASE("reports are deterministic and carry no timing by default") {
    for (const auto& command : {"central", "canonical", "tower"}) {
      std::string a = run(command, random_space(5, 11)).to_json().dump();
      std::string b = run(command, random_space(5, 11)).to_json().dump();
      CHECK(a == b);
      CHECK(a.find("seconds") == std::string::npos);
    }
    RunOptions timed;
    timed.timing = true;
    CHECK(run("validate", two_point(), timed).to_json().contains("seconds"));
  }

  TEST_CASE("explore-interval emits exact distances and no verdict") {
    Report a = run("explore-interval", std::nullopt);
    Report b = run("explore-interval", std::nullopt);
    CHECK(a.to_json().dump() == b.to_json().dump());
    CHECK(a.result["note"] == "evidence, not proof");
    REQUIRE(a.result["grids"].size() == 3);
    for (const auto& row : a.result["grids"]) CHECK(row["w_to_uniform"].is_string());
    CHECK(a.assertions_failed.empty());

    RunOptions big;
    big.explore_sizes = {9};
    CHECK_THROWS_AS(run("explore-interval", std::nullopt, big), std::invalid_argument);
  }

  TEST_CASE("errors become payloads") {
    CHECK_THROWS_AS(run("nonsense", two_point()), std::invalid_argument);
    CHECK_THROWS_AS(run("iso", std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(run("kantorovich", two_point()), std::invalid_argument);
    try {
      read_space_csv("a,b\n0,1\n2,0\n");
    } catch (const std::exception& e) {
      json payload = error_payload("validate", e);
      CHECK(payload["error"]["type"] == "metric_error");
      CHECK(payload["error"]["kind"] == to_string(MetricError::Kind::asymmetric));
    }
    try {
      lambda_measure(generic_space(4, 0));
    } catch (const std::exception& e) {
      CHECK(error_payload("lambda", e)["error"]["type"] == "not_quasi_nilpotent");
    }
  }
}
