// Drives the installed binary end to end. LOWDISC_CLI_PATH is injected by the
// build; every test works inside its own temp directory.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "lowdisc/point_set.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

fs::path work_dir() {
    static fs::path p = [] {
        fs::path q = fs::temp_directory_path() / "lowdisc_cli_tests";
        fs::remove_all(q);
        fs::create_directories(q);
        return q;
    }();
    return p;
}

RunResult run(const std::string& args) {
    static int counter = 0;
    fs::path cap = work_dir() / ("stdout." + std::to_string(counter++));
    std::string cmd = std::string(LOWDISC_CLI_PATH) + " " + args + " > " +
                      cap.string() + " 2>&1";
    int raw = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::ifstream f(cap);
    std::stringstream ss;
    ss << f.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) {
    std::size_t n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("generate writes the set and a metadata sidecar") {
    fs::path out = work_dir() / "fib260.txt";
    RunResult r = run("generate fibonacci --n 260 -o " + out.string());
    REQUIRE(r.code == 0);

    std::string body = slurp(out);
    CHECK(count_lines(body) == 260);
    CHECK(body.substr(0, 4) == "0 0\n");

    json meta = json::parse(slurp(out.string() + ".meta.json"));
    CHECK(meta["generator"] == "fibonacci");
    CHECK(meta["n"] == 260);
    CHECK(meta["dimension"] == 2);

    // regenerating is byte-identical
    fs::path again = work_dir() / "fib260b.txt";
    REQUIRE(run("generate fibonacci --n 260 -o " + again.string()).code == 0);
    CHECK(slurp(again) == body);
}

TEST_CASE("generate covers every generator") {
    fs::path dir = work_dir();
    CHECK(run("generate kronecker --n 64 -o " + (dir / "kron.txt").string()).code == 0);
    CHECK(run("generate fibonacci-lattice --k 7 -o " + (dir / "fl.txt").string()).code ==
          0);
    CHECK(lowdisc::load_point_set(dir / "fl.txt").n == 13);

    REQUIRE(run("generate sobol --n 50 --d 3 -o " + (dir / "sob.txt").string()).code ==
            0);
    lowdisc::PointSet S = lowdisc::load_point_set(dir / "sob.txt");
    CHECK(S.n == 50);
    CHECK(S.d == 3);
    json meta = json::parse(slurp((dir / "sob.txt").string() + ".meta.json"));
    CHECK(meta["sobol_table_id"] == "joe-kuo-6.21201");

    REQUIRE(run("generate random --n 20 --d 2 --seed 7 -o " +
                (dir / "r1.txt").string()).code == 0);
    REQUIRE(run("generate random --n 20 --d 2 --seed 7 -o " +
                (dir / "r2.txt").string()).code == 0);
    REQUIRE(run("generate random --n 20 --d 2 --seed 8 -o " +
                (dir / "r3.txt").string()).code == 0);
    CHECK(slurp(dir / "r1.txt") == slurp(dir / "r2.txt"));
    CHECK(slurp(dir / "r1.txt") != slurp(dir / "r3.txt"));

    CHECK(run("generate trellis --n 4 -o " + (dir / "x.txt").string()).code == 2);
    CHECK(run("generate fibonacci --n 4").code == 2);  // -o is required
}

TEST_CASE("evaluate reports JSON with both default kinds") {
    fs::path set = work_dir() / "eval_fib260.txt";
    REQUIRE(run("generate fibonacci --n 260 -o " + set.string()).code == 0);
    RunResult r = run("evaluate " + set.string());
    REQUIRE(r.code == 0);
    json out = json::parse(r.out);
    CHECK(out["n"] == 260);
    CHECK(std::abs(double(out["results"]["l2-star"]["root"]) - 0.003438) < 1e-6);
    CHECK(out["results"]["linf-star"]["method"] == "sweep-2d");
    CHECK(std::abs(double(out["results"]["linf-star"]["value"]) - 0.0119970) < 1e-6);

    RunResult r3 = run("evaluate --kind l2-periodic --kind l2-extreme " + set.string());
    REQUIRE(r3.code == 0);
    json o3 = json::parse(r3.out);
    CHECK(o3["results"].contains("l2-periodic"));
    CHECK(o3["results"].contains("l2-extreme"));

    // d = 3 goes through the budgeted enumeration and reports its stats
    fs::path s3 = work_dir() / "eval_sob.txt";
    REQUIRE(run("generate sobol --n 50 --d 3 -o " + s3.string()).code == 0);
    RunResult rd3 = run("evaluate --kind linf-star " + s3.string());
    REQUIRE(rd3.code == 0);
    json od3 = json::parse(rd3.out);
    CHECK(od3["results"]["linf-star"]["method"] == "enumeration");
    CHECK(od3["results"]["linf-star"]["boxes_total"].get<std::uint64_t>() > 0);

    CHECK(run("evaluate --kind l3-star " + set.string()).code == 2);
    CHECK(run("evaluate " + (work_dir() / "missing.txt").string()).code == 2);
}

TEST_CASE("evaluate signals a blown enumeration budget") {
    fs::path big = work_dir() / "sob5.txt";
    REQUIRE(run("generate sobol --n 200 --d 5 -o " + big.string()).code == 0);
    RunResult r = run("evaluate --kind linf-star " + big.string());
    CHECK(r.code == 3);  // 201^5 corners is far past the default budget
}

TEST_CASE("optimize round trip, trajectory and metadata") {
    fs::path dir = work_dir();
    fs::path init = dir / "fib89.txt";
    REQUIRE(run("generate fibonacci --n 89 -o " + init.string()).code == 0);

    SUBCASE("steps must be positive") {
        CHECK(run("optimize " + init.string() + " --steps 0 -o " +
                  (dir / "o0.txt").string()).code == 2);
    }

    SUBCASE("an explicit zero learning rate is the identity") {
        fs::path out = dir / "frozen.txt";
        REQUIRE(run("optimize " + init.string() + " --steps 1 --alpha 0 -o " +
                    out.string()).code == 0);
        CHECK(lowdisc::load_point_set(out).coords ==
              lowdisc::load_point_set(init).coords);
        json meta = json::parse(slurp(out.string() + ".meta.json"));
        CHECK(meta["initial"]["loss_squared"] == meta["final"]["loss_squared"]);
        CHECK(meta["config"]["alpha"] == 0.0);

        std::string traj = slurp(out.string() + ".trajectory.csv");
        CHECK(traj.rfind("iteration,loss_squared,loss_root,tracked_metric_if_any\n",
                         0) == 0);
        CHECK(count_lines(traj) == 3);  // header + iterations 0 and 1
    }

    SUBCASE("tracked descent records the best iterate") {
        fs::path out = dir / "opt89.txt";
        RunResult r = run("optimize " + init.string() +
                          " --kind l2-star --steps 40 --track-linf -o " + out.string() +
                          " --best-out " + (dir / "best89.txt").string());
        REQUIRE(r.code == 0);
        json meta = json::parse(slurp(out.string() + ".meta.json"));
        CHECK(meta["config"]["alpha"] == 5e-4);  // n < 100 rule
        CHECK(meta["final"]["loss_squared"].get<double>() <
              meta["initial"]["loss_squared"].get<double>());
        REQUIRE(meta.contains("best"));
        CHECK(meta["best"]["metric"] == "linf-star");
        CHECK(fs::exists(dir / "best89.txt"));

        std::string traj = slurp(out.string() + ".trajectory.csv");
        CHECK(count_lines(traj) == 42);  // header + 41 iterations
        // d = 2 tracks every iteration: the last line carries a metric value
        auto lastline = traj.substr(traj.rfind("40,"));
        CHECK(lastline.find(",,") == std::string::npos);

        // unchanged inputs reproduce the same outputs byte for byte
        fs::path out2 = dir / "opt89b.txt";
        REQUIRE(run("optimize " + init.string() +
                    " --kind l2-star --steps 40 --track-linf -o " +
                    out2.string()).code == 0);
        CHECK(slurp(out2) == slurp(out));
    }

    SUBCASE("restart metadata lists every round") {
        fs::path out = dir / "optr.txt";
        REQUIRE(run("optimize " + init.string() +
                    " --steps 20 --restarts 2 --seed 5 -o " + out.string()).code == 0);
        json meta = json::parse(slurp(out.string() + ".meta.json"));
        REQUIRE(meta.contains("restarts"));
        CHECK(meta["restarts"]["finals_squared"].size() == 3);
        CHECK(meta["restarts"]["rng"] == "splitmix64");
        CHECK(meta["restarts"]["best_run"].get<std::size_t>() <= 2);
    }

    SUBCASE("linf is not a descent target") {
        CHECK(run("optimize " + init.string() + " --kind linf-star -o " +
                  (dir / "x.txt").string()).code == 2);
    }

    SUBCASE("the positional file and --init-file are aliases") {
        fs::path out = dir / "alias.txt";
        CHECK(run("optimize --init-file " + init.string() +
                  " --steps 1 --alpha 0 -o " + out.string()).code == 0);
        CHECK(run("optimize --steps 1 -o " + out.string()).code == 2);  // no input
    }
}

TEST_CASE("reproduce runs a benchmark id and writes both CSV shapes") {
    fs::path dir = work_dir() / "rep";
    RunResult r = run("reproduce fig3 --n 60 --outdir " + dir.string());
    REQUIRE(r.code == 0);
    CHECK(r.out.find("wrote") != std::string::npos);

    std::string wide = slurp(dir / "fig3.csv");
    CHECK(count_lines(wide) == 202);  // header + iterations 0..200

    std::string cells = slurp(dir / "fig3.cells.csv");
    CHECK(cells.rfind("table,row,col,value,source,status,reference", 0) == 0);
    CHECK(cells.find("deviation") == std::string::npos);

    RunResult bad = run("reproduce table99 --outdir " + dir.string());
    CHECK(bad.code == 2);
    CHECK(bad.out.find("known ids:") != std::string::npos);
    CHECK(bad.out.find("table-periodic") != std::string::npos);
}
