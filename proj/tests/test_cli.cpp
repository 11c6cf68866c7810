#include <doctest.h>

#include <sstream>

#include "ggt/experiments.hpp"

using namespace ggt;

TEST_CASE("config json round trip") {
    ExperimentConfig c;
    c.subcommand = "packing";
    c.group = "poly:2:2,1;1,1";
    c.subgroup = "t";
    c.r_values = {2.0, 3.0};
    c.ball_radius = 8;
    c.ball_radius2 = 10;
    c.seed = 42;
    c.format = "csv";
    c.out_path = "packing.csv";
    ExperimentConfig back = config_from_json(config_to_json(c));
    CHECK(back == c);
}

TEST_CASE("validation") {
    ExperimentConfig c;
    c.subcommand = "nope";
    CHECK(!validate(c).empty());

    c.subcommand = "packing";
    c.group = "poly:2:2,1;1,1";
    c.subgroup = "t";
    c.ball_radius = 6;
    c.r_values = {3.0};
    CHECK(validate(c).empty());

    // r > R rejected.
    c.r_values = {9.0};
    CHECK(!validate(c).empty());
    c.r_values = {3.0};

    // Missing seed on a sampled experiment.
    ExperimentConfig s;
    s.subcommand = "sol";
    s.matrix = "2,1;1,1";
    s.trials = 5;
    CHECK(!validate(s).empty());
    s.seed = 7;
    CHECK(validate(s).empty());
}

TEST_CASE("determinism: identical config gives byte-identical output") {
    ExperimentConfig c;
    c.subcommand = "sol";
    c.matrix = "2,1;1,1";
    c.trials = 10;
    c.seed = 4242;
    std::ostringstream a, b;
    RunResult ra = run_experiment(c, a);
    RunResult rb = run_experiment(c, b);
    CHECK(ra.exit_code == rb.exit_code);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("pair,lower,upper,ratio") != std::string::npos);

    ExperimentConfig p;
    p.subcommand = "packing";
    p.group = "poly:2:2,1;1,1";
    p.subgroup = "t";
    p.r_values = {2.0, 3.0};
    p.ball_radius = 6;
    std::ostringstream pa, pb;
    run_experiment(p, pa);
    run_experiment(p, pb);
    CHECK(pa.str() == pb.str());
}

TEST_CASE("validation exit code and json format") {
    ExperimentConfig c;
    c.subcommand = "growth";  // missing group/ball
    std::ostringstream out;
    RunResult r = run_experiment(c, out);
    CHECK(r.exit_code == 2);

    ExperimentConfig j;
    j.subcommand = "dynamics";
    j.matrix = "2,1;1,1";
    j.op = "hyperbolic";
    j.format = "json";
    std::ostringstream jo;
    RunResult rj = run_experiment(j, jo);
    CHECK(rj.exit_code == 0);
    CHECK(jo.str().find("\"hyperbolic\"") != std::string::npos);
    CHECK(jo.str().find("\"config\"") != std::string::npos);
}

TEST_CASE("dynamics op coverage through the dispatcher") {
    auto run_op = [](const std::string& op, auto&& mutate) {
        ExperimentConfig c;
        c.subcommand = "dynamics";
        c.matrix = "2,1;1,1";
        c.op = op;
        mutate(c);
        std::ostringstream out;
        RunResult r = run_experiment(c, out);
        return std::pair<int, std::string>(r.exit_code, out.str());
    };
    auto [c1, s1] = run_op("spectrum", [](ExperimentConfig&) {});
    CHECK(c1 == 0);
    CHECK(s1.find("spectral_radius") != std::string::npos);

    auto [c2, s2] = run_op("orbit", [](ExperimentConfig& c) {
        c.elements = "1,0";
        c.window = 3;
    });
    CHECK(c2 == 0);
    CHECK(s2.find("2;1") != std::string::npos);

    auto [c3, s3] = run_op("intersections", [](ExperimentConfig& c) {
        c.elements = "1,0;1,0;0,1";
        c.window = 20;
    });
    CHECK(c3 == 0);
    CHECK(s3.find("count") != std::string::npos);

    auto [c4, s4] = run_op("packing-bound", [](ExperimentConfig& c) { c.d_bound = 1.0; });
    CHECK(c4 == 0);
    CHECK(s4.find("50") != std::string::npos);

    auto [c5, s5] = run_op("invariant-lattice", [](ExperimentConfig&) {});
    CHECK(c5 == 0);
    (void)s5;
}
