#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "advect/driver.hpp"

using namespace advect;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("advect_test_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("config parsing") {
    std::istringstream in(
        "# experiment\n"
        "scheme = beam-warming\n"
        "a=-2   # speed\n"
        "cfl=0.5\n"
        "n = 64\n"
        "t_final=1.5\n"
        "ic=bump\n"
        "eps=1e-8\n"
        "tv-tol=1e-4\n"
        "stride=10\n"
        "plot-script=yes\n"
        "n-list=32, 64,128\n");
    const RunConfig c = parse_config(in);
    CHECK(c.scheme == "beam-warming");
    CHECK(c.a == -2.0);
    CHECK(c.cfl == 0.5);
    CHECK(c.n_cells == 64);
    CHECK(c.t_final == 1.5);
    CHECK(c.ic == "bump");
    CHECK(c.tol.eps_rel == 1e-8);
    CHECK(c.tol.tv_tol_rel == 1e-4);
    CHECK(c.snapshot_stride == 10);
    CHECK(c.plot_script);
    CHECK(c.n_list == std::vector<std::size_t>{32, 64, 128});
    CHECK_NOTHROW(c.validate());

    SUBCASE("errors") {
        RunConfig d;
        CHECK_THROWS_AS(apply_setting(d, "colour", "red"), std::invalid_argument);
        CHECK_THROWS_AS(apply_setting(d, "cfl", "fast"), std::invalid_argument);
        CHECK_THROWS_AS(apply_setting(d, "n", "10.5"), std::invalid_argument);
        CHECK_THROWS_AS(apply_setting(d, "plot-script", "maybe"), std::invalid_argument);
        std::istringstream bad("scheme lax-wendroff\n");
        CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
        d.scheme = "nope";
        CHECK_THROWS_AS(d.validate(), std::invalid_argument);
        CHECK_THROWS_AS(load_config("/nonexistent/advect.cfg"), std::invalid_argument);
    }
}

TEST_CASE("step planning") {
    const StepPlan exact = plan_steps(6.0, 0.016);
    CHECK(exact.full_steps == 375);
    CHECK(exact.last_step == 0.0);
    CHECK(exact.total_steps() == 375);

    const StepPlan partial = plan_steps(1.0, 0.3);
    CHECK(partial.full_steps == 3);
    CHECK(partial.last_step == doctest::Approx(0.1));
    CHECK(partial.total_steps() == 4);

    CHECK(plan_steps(0.0, 0.1).total_steps() == 0);
    CHECK_THROWS_AS(plan_steps(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("run") {
    SUBCASE("default run reproduces the clean sine case") {
        const RunResult r = run(RunConfig{});
        CHECK(r.report.verdict == Verdict::Clean);
        CHECK(r.final_state.step_index == 375);
        CHECK(r.final_state.time == 6.0);
        CHECK(exit_code(r.report.verdict) == 0);
    }
    SUBCASE("bump data oscillates") {
        RunConfig c;
        c.ic = "bump";
        const RunResult r = run(c);
        CHECK(r.report.verdict == Verdict::Oscillatory);
        CHECK(exit_code(r.report.verdict) == 2);
    }
    SUBCASE("t_final = 0 returns the initial sample") {
        RunConfig c;
        c.t_final = 0.0;
        const RunResult r = run(c);
        CHECK(r.final_state.step_index == 0);
        CHECK(r.report.errors.l1 == 0.0);
        CHECK(r.report.errors.linf == 0.0);
    }
    SUBCASE("a shortened final step lands exactly on t_final") {
        RunConfig c;
        c.t_final = 0.1;  // k = 0.016, 6 full steps + 0.004
        const RunResult r = run(c);
        CHECK(r.final_state.step_index == 7);
        CHECK(r.final_state.time == 0.1);
        CHECK(r.report.final_lambda == doctest::Approx(0.2).epsilon(1e-9));
        CHECK(r.report.steps[6].time == doctest::Approx(6 * 0.016));
    }
    SUBCASE("FTCS is reported as diverged eventually") {
        RunConfig c;
        c.scheme = "ftcs";
        c.t_final = 200.0;
        const RunResult r = run(c);
        CHECK(r.report.verdict == Verdict::Diverged);
        CHECK(exit_code(r.report.verdict) == 3);
    }
    SUBCASE("negative speed") {
        RunConfig c;
        c.a = -1.0;
        c.scheme = "two-point-upwind";
        c.cfl = 1.0;
        c.t_final = 0.5;
        const RunResult r = run(c);
        CHECK(r.report.errors.linf <= 1e-14);
    }
}

TEST_CASE("run output files") {
    const fs::path dir = scratch_dir("files");
    RunConfig c;
    c.t_final = 0.5;
    c.snapshot_stride = 10;
    c.plot_script = true;
    c.out_dir = dir.string();
    const RunResult r = run(c);
    // k = 0.016: 31 full steps plus a partial one
    CHECK(r.final_state.step_index == 32);
    for (const char* f : {"snapshot_000000.csv", "snapshot_000010.csv", "snapshot_000030.csv", "snapshot_000032.csv",
                          "steps.csv", "report.csv", "plot.gp"})
        CHECK_MESSAGE(fs::exists(dir / f), f);

    SUBCASE("initial snapshot holds the sampled data") {
        const Grid1D g = make_run_grid(c);
        const State s0 = sample_initial(g, make_initial_data(c));
        CHECK(slurp(dir / "snapshot_000000.csv") == snapshot_csv(g, s0, s0));
    }
    SUBCASE("report content") {
        const std::string report = slurp(dir / "report.csv");
        CHECK(report.find("verdict,clean\n") != std::string::npos);
        CHECK(report.find("steps,32\n") != std::string::npos);
    }
    SUBCASE("no temporary files left behind") {
        for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() != ".tmp");
    }
}

TEST_CASE("runs are bit-for-bit reproducible") {
    const fs::path d1 = scratch_dir("repro1"), d2 = scratch_dir("repro2");
    RunConfig c;
    c.ic = "bump";
    c.t_final = 1.0;
    c.out_dir = d1.string();
    run(c);
    c.out_dir = d2.string();
    run(c);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(d1)) {
        ++files;
        CHECK(slurp(e.path()) == slurp(d2 / e.path().filename()));
    }
    CHECK(files > 3);
}

TEST_CASE("initial data from a table file") {
    const fs::path dir = scratch_dir("table");
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "u0.txt");
        out << "# values\n0\n1\n0.5\n0\n";
    }
    RunConfig c;
    c.ic_table = (dir / "u0.txt").string();
    c.n_cells = 4;
    c.t_final = 0.0;
    const RunResult r = run(c);
    CHECK(r.final_state.values == std::vector<double>{0, 1, 0.5, 0});
    c.n_cells = 5;
    CHECK_THROWS_AS(run(c), std::invalid_argument);
}

TEST_CASE("scan") {
    SUBCASE("bump at t = 0 violates at the support edge") {
        RunConfig c;
        c.ic = "bump";
        c.t_final = 0.0;
        const fs::path dir = scratch_dir("scan");
        c.out_dir = dir.string();
        const ScanResult s = scan(c);
        REQUIRE(s.rows.size() == 3);
        CHECK(s.rows[0].index == 1);
        CHECK(s.rows[2].index == 3);
        CHECK(s.rows[0].step == 0);
        CHECK(s.rows[0].interval.find("theta+_{i}") == 0);
        CHECK(fs::exists(dir / "dds_violations.csv"));
    }
    SUBCASE("sine at t = 0 has no violations") {
        RunConfig c;
        c.t_final = 0.0;
        CHECK(scan(c).rows.empty());
    }
    SUBCASE("constant data has none at any time") {
        RunConfig c;
        c.ic = "constant";
        c.t_final = 1.0;
        const ScanResult s = scan(c);
        CHECK(s.rows.empty());
        CHECK(s.report.verdict == Verdict::Clean);
    }
}

TEST_CASE("sweep convergence orders") {
    RunConfig c;
    c.t_final = 1.0;
    const std::vector<std::size_t> ns{50, 100, 200, 400};
    SUBCASE("first order upwind") {
        c.scheme = "two-point-upwind";
        const auto rows = sweep(c, ns);
        REQUIRE(rows.size() == 4);
        CHECK_FALSE(rows[0].eoc.has_value());
        for (std::size_t j = 1; j < rows.size(); ++j) CHECK(*rows[j].eoc == doctest::Approx(1.0).epsilon(0.2));
    }
    SUBCASE("second order schemes") {
        for (const char* name : {"lax-wendroff", "beam-warming"}) {
            c.scheme = name;
            const auto rows = sweep(c, ns);
            for (std::size_t j = 1; j < rows.size(); ++j) CHECK(*rows[j].eoc == doctest::Approx(2.0).epsilon(0.1));
        }
    }
    SUBCASE("eoc.csv") {
        const fs::path dir = scratch_dir("sweep");
        c.out_dir = dir.string();
        sweep(c, {50, 100});
        const std::string csv = slurp(dir / "eoc.csv");
        CHECK(csv.rfind("n,l1_error,l2_error,linf_error,eoc_l1\n50,", 0) == 0);
    }
    CHECK_THROWS_AS(sweep(c, {}), std::invalid_argument);
}

TEST_CASE("describe_dds") {
    const auto up3 = describe_dds("three-point-upwind-2nd", 1.0, 0.5);
    REQUIRE(up3.interval.has_value());
    CHECK(up3.interval->describe() == "theta+_{i-1} in [-1, 3]");
    CHECK_FALSE(up3.uno);
    CHECK(up3.text().find("[-1, 3]") != std::string::npos);
    CHECK(up3.csv().find("lo,-1") != std::string::npos);

    const auto lxf = describe_dds("lax-friedrichs", 1.0, 0.5);
    CHECK(lxf.interval->describe() == "theta+_{i} in (-inf, -1] U [0.333333333333, inf)");

    const auto up = describe_dds("two-point-upwind", 1.0, 0.9);
    CHECK(up.uno);
    CHECK(up.text().find("UNO") != std::string::npos);

    const auto eno = describe_dds("eno2", 1.0, 0.4);
    CHECK_FALSE(eno.interval.has_value());
    CHECK(eno.uno);

    CHECK_THROWS_AS(describe_dds("lax-wendroff", 0.0, 0.5), std::invalid_argument);
}

TEST_CASE("exit codes") {
    CHECK(exit_code(Verdict::Clean) == 0);
    CHECK(exit_code(Verdict::Oscillatory) == 2);
    CHECK(exit_code(Verdict::Diverged) == 3);
}
