#include "fpqs/io.hpp"
#include "test_util.hpp"

using namespace fpqs;

// Only the fast suites run here; the acceptance binary runs all of them.

TEST(Suites, RegistryAndUnknownId) {
    const auto ids = suite_ids();
    EXPECT_EQ(ids.size(), 15u);
    try {
        run_suite("lemma99");
        FAIL();
    } catch (const std::invalid_argument& e) {
        for (const auto& id : ids) EXPECT_NE(std::string(e.what()).find(id), std::string::npos) << id;
    }
}

TEST(Suites, FastSuitesPass) {
    for (const char* id : {"quadrature_closed_form", "geometry", "operator_algebra", "area_carleson"}) {
        const SuiteReport r = run_suite(id);
        EXPECT_EQ(r.suite_id, id);
        EXPECT_FALSE(r.cases.empty());
        for (const auto& c : r.cases) EXPECT_TRUE(c.pass) << id << ": " << c.description << " " << c.diagnostics;
        EXPECT_TRUE(r.pass());
    }
}

TEST(Suites, PassIffMeasuredInBracket) {
    const SuiteReport r = run_suite("quadrature_closed_form");
    for (const auto& c : r.cases)
        if (c.trend.empty()) EXPECT_EQ(c.pass, c.converged && c.measured >= c.lo && c.measured <= c.hi) << c.description;
}

TEST(Suites, DeterministicAcrossRunsAndThreadCounts) {
    set_thread_count(1);
    const std::string a = io::dump(io::to_json(std::vector<SuiteReport>{run_suite("area_carleson")}));
    set_thread_count(3);
    const std::string b = io::dump(io::to_json(std::vector<SuiteReport>{run_suite("area_carleson")}));
    set_thread_count(0);
    const std::string c = io::dump(io::to_json(std::vector<SuiteReport>{run_suite("area_carleson")}));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a, c);
}

TEST(Suites, IndependentWhenRunConcurrently) {
    const std::vector<std::string> ids = {"geometry", "operator_algebra", "quadrature_closed_form"};
    std::vector<std::string> serial;
    for (const auto& id : ids) serial.push_back(io::dump(io::to_json(run_suite(id))));
    auto par = parallel_map<std::string>(ids.size(), [&](std::size_t i) { return io::dump(io::to_json(run_suite(ids[i]))); });
    EXPECT_EQ(serial, par);
}
