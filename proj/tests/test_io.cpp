#include "fpqs/io.hpp"
#include "test_util.hpp"

using namespace fpqs;

TEST(ParseComplex, Literals) {
    EXPECT_EQ(io::parse_complex("0.5"), cplx(0.5));
    EXPECT_EQ(io::parse_complex("-0.25+0.5i"), cplx(-0.25, 0.5));
    EXPECT_EQ(io::parse_complex("0.3-0.4i"), cplx(0.3, -0.4));
    EXPECT_EQ(io::parse_complex("2i"), cplx(0.0, 2.0));
    EXPECT_EQ(io::parse_complex("-i"), cplx(0.0, -1.0));
    EXPECT_EQ(io::parse_complex("1e-3+1e-3i"), cplx(1e-3, 1e-3));
    EXPECT_THROW(io::parse_complex("abc"), io::ParseError);
    EXPECT_THROW(io::parse_complex(""), io::ParseError);
}

TEST(ParseFunction, RoundTripsExactly) {
    const char* specs[] = {"poly:0,1",
                           "poly:1,-0.5+0.25i,0,3i",
                           "lemma8:0.5,2",
                           "log:0.9i",
                           "logsq:-0.9",
                           "power:0.95,0.3",
                           "h:0.3+0.4i,1.5",
                           "psi:-0.9i,1",
                           "sum(poly:0,1;log:0.5)",
                           "scale(2-1i;sum(poly:1;lemma8:0.1,0.7))"};
    for (const char* s : specs) {
        const AnalyticFunction f = io::parse_function(s);
        const std::string once = io::format_function(f);
        const AnalyticFunction g = io::parse_function(once);
        EXPECT_EQ(io::format_function(g), once) << s;
        for (cplx z : fpqs::testing::random_points(10, 0.9, 91)) ASSERT_EQ(f.eval(z), g.eval(z)) << s;
    }
    const double x = 0.1 + 0.2;  // not representable in few digits
    const AnalyticFunction f = polynomial({x, cplx(1.0 / 3.0, -2.0 / 7.0)});
    const AnalyticFunction g = io::parse_function(io::format_function(f));
    EXPECT_EQ(poly_coeffs(g), poly_coeffs(f));
}

TEST(ParseFunction, ErrorsNameTheValidSet) {
    try {
        io::parse_function("sinh:1");
        FAIL();
    } catch (const io::ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(io::kFunctionKinds), std::string::npos);
    }
    EXPECT_THROW(io::parse_function("log:1.5"), io::ParseError);
    EXPECT_THROW(io::parse_function("lemma8:0.5"), io::ParseError);
}

TEST(ParseMeasure, RoundTripsExactly) {
    const char* specs[] = {"power:2",
                           "logpower:1,2",
                           "area",
                           "zero",
                           "atomic:0.5,1,-0.3+0.2i,2.5",
                           "separable(power:0.5;cosine:0.8,0.1)",
                           "separable(logpower:0,2;cusp:0.5,0)",
                           "separable(power:1;uniform)",
                           "induced(log:0.9;2,1,1)",
                           "restrict(logpower:1,2;0.9)"};
    for (const char* s : specs) {
        const MeasureSpec mu = io::parse_measure(s);
        const std::string once = io::format_measure(mu);
        EXPECT_EQ(io::format_measure(io::parse_measure(once)), once) << s;
    }
    try {
        io::parse_measure("lebesgue");
        FAIL();
    } catch (const io::ParseError& e) {
        EXPECT_NE(std::string(e.what()).find(io::kMeasureKinds), std::string::npos);
    }
    EXPECT_THROW(io::parse_measure("atomic:0.5"), io::ParseError);
    EXPECT_THROW(io::parse_measure("restrict(area;1.5)"), io::ParseError);
}

TEST(Json, TwelveSignificantDigitsAndNull) {
    EXPECT_EQ(io::num(1.0 / 3.0).dump(), "0.333333333333");
    EXPECT_EQ(io::num(2.0).dump(), "2.0");
    EXPECT_TRUE(io::num(std::nan("")).is_null());
}

TEST(Json, ReparseIsByteIdentical) {
    std::vector<SuiteReport> rs{run_suite("geometry"), run_suite("operator_algebra")};
    const std::string a = io::dump(io::to_json(rs));
    const std::string b = io::dump(io::Json::parse(a));
    EXPECT_EQ(a, b);
    const ConstantReport c = carleson_constant(area_measure(), 2.0, 6);
    const std::string x = io::dump(io::to_json(c));
    EXPECT_EQ(io::dump(io::Json::parse(x)), x);
    const auto parsed = io::Json::parse(x);
    EXPECT_TRUE(parsed.contains("maximizer"));
    EXPECT_TRUE(parsed["maximizer"].contains("arc"));
}

TEST(Csv, SuiteTableHasHeaderAndOneRowPerCase) {
    std::vector<SuiteReport> rs{run_suite("geometry")};
    const std::string csv = io::suites_csv(rs);
    const auto lines = std::count(csv.begin(), csv.end(), '\n');
    EXPECT_EQ(std::size_t(lines), 1 + rs[0].cases.size());
    EXPECT_EQ(csv.rfind("suite_id,", 0), 0u);
}
