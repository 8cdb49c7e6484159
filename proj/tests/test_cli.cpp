#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "oracles.hpp"

using oracle::pi;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = gbessel::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> v;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            v.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    v.push_back(cur);
    return v;
}

// data rows of the first CSV block
std::vector<std::vector<std::string>> rows(const std::string& s) {
    std::vector<std::vector<std::string>> r;
    bool header = false;
    for (const auto& l : lines(s)) {
        if (l.rfind("#", 0) == 0) {
            if (header) break;
            continue;
        }
        if (!header) {
            header = true;
            continue;
        }
        r.push_back(split(l));
    }
    return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval matches the half-order closed form") {
    const Run r = run({"eval", "--nu", "0.5", "--alpha", "0.5235987755982988", "--x", "1,2,3"});
    CHECK(r.code == 0);
    const auto rs = rows(r.out);
    REQUIRE(rs.size() == 3);
    for (const auto& row : rs) {
        const double x = std::stod(row[0]);
        CHECK(std::fabs(std::stod(row[1]) - oracle::c_half(x, pi / 6)) < 1e-12);
        CHECK(row.back() == "ok");
    }
}

TEST_CASE("eval near the origin and at a zero") {
    const Run r = run({"eval", "--nu", "1.5", "--alpha", "0", "--x", "1e-8"});
    CHECK(r.code == 0);
    CHECK(std::fabs(std::stod(rows(r.out)[0][1])) < 1e-12);

    const Run z = run({"eval", "--nu", "0.5", "--alpha-pi", "1/6", "--x", "2.6179938779914944"});
    CHECK(z.code == 0);
    const auto row = rows(z.out)[0];
    CHECK(row[7].empty());
    CHECK(row[8] == "pole");
}

TEST_CASE("eval usage errors") {
    CHECK(run({"eval", "--nu", "0.5", "--x", "-1"}).code == 2);
    CHECK(run({"eval", "--nu", "0.5", "--alpha", "4", "--x", "1"}).code == 2);
    CHECK(run({"eval", "--nu", "0.5", "--alpha", "1", "--alpha-pi", "0.3", "--x", "1"}).code == 2);
    CHECK(run({"eval", "--x", "1"}).code == 2);
    CHECK(run({"eval", "--nu", "0.5", "--x", "1", "--precision", "3"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("eval failures flush completed rows") {
    const Run r = run({"eval", "--nu", "150", "--alpha-pi", "1/2", "--x", "100,1e-3"});
    CHECK(r.code == 1);
    const auto rs = rows(r.out);
    REQUIRE(rs.size() == 2);
    CHECK(rs[0].back() == "ok");
    CHECK(r.out.find("\"error: ") != std::string::npos);
    CHECK(!r.err.empty());
}

TEST_CASE("zeros") {
    const Run r = run({"zeros", "--nu", "0.5", "--alpha", "0.5235987755982988", "--count", "3"});
    CHECK(r.code == 0);
    const auto rs = rows(r.out);
    REQUIRE(rs.size() == 3);
    for (int n = 1; n <= 3; ++n) CHECK(std::fabs(std::stod(rs[n - 1][1]) - (n * pi - pi / 6)) < 1e-10);

    const Run e = run({"zeros", "--nu", "0.5", "--alpha", "0", "--count", "0"});
    CHECK(e.code == 0);
    CHECK(rows(e.out).empty());
    CHECK(e.out.find("n,abscissa,bracket_lo,bracket_hi,residual") != std::string::npos);

    const Run j = run({"zeros", "--nu", "0", "--alpha", "0", "--count", "1"});
    CHECK(std::fabs(std::stod(rows(j.out)[0][1]) - 2.40482555769577) < 1e-12);

    CHECK(run({"zeros", "--nu", "0.5", "--count", "2", "--x-max", "3"}).code == 2);
    CHECK(run({"zeros", "--nu", "0.5"}).code == 2);
    CHECK(rows(run({"zeros", "--nu", "0.5", "--alpha-pi", "1/6", "--x-max", "10"}).out).size() == 3);
}

TEST_CASE("crossover") {
    const Run r = run({"crossover", "--nu", "1.5", "--alpha-pi", "1/6"});
    CHECK(r.code == 0);
    const auto row = rows(r.out).at(0);
    const double xn = std::stod(row[2]);
    CHECK(xn < std::stod(row[9]));
    CHECK(xn < std::sqrt(3.75));
    CHECK(row[11] == "true");
    CHECK(row[12] == "true");

    const Run bad = run({"crossover", "--nu", "0.5", "--alpha-pi", "1/6"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("nu > 1") != std::string::npos);
    CHECK(run({"crossover", "--nu", "1.5", "--alpha", "0"}).code == 2);
    CHECK(run({"crossover", "--nu", "0.5", "--alpha-pi", "1/6", "--experimental"}).code != 2);
}

TEST_CASE("certify") {
    CHECK(run({"certify", "turan1"}).code == 0);
    const Run bad = run({"certify", "nosuch"});
    CHECK(bad.code == 2);
    const Run s = run({"certify", "all", "--strict", "--summary", "--samples", "40"});
    CHECK(s.code == 0);
    CHECK(s.out.find("# turan1.violations=0") != std::string::npos);
    CHECK(s.out.find("# theorem2_positivity.min_margin=") != std::string::npos);

    const Run j = run({"certify", "ratio_plain", "--nu", "1,2", "--samples", "10", "--format", "json"});
    CHECK(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["rows"].size() == 20);
    CHECK(doc["meta"]["ratio_plain.violations"] == 0);
    CHECK(doc["params"]["command"] == "certify");
}

TEST_CASE("series") {
    CHECK(run({"series", "--nu", "1.5", "--alpha-pi", "1/6", "--x", "1.0"}).code == 2);
    const Run r = run({"series", "--nu", "0.5", "--alpha", "0", "--x", "10"});
    CHECK(r.code == 0);
    const auto row = rows(r.out).at(0);
    CHECK(std::fabs(std::stod(row[10])) <= 1e-8);
    CHECK(std::stoi(row[4]) > 0);
    // no convergence for mixed alpha; reported as a computational failure
    const Run m = run({"series", "--nu", "1.5", "--alpha-pi", "1/6", "--x", "6", "--rel-tol", "1e-10"});
    CHECK(m.code == 1);
    CHECK(!m.err.empty());
}

TEST_CASE("figure") {
    const Run a = run({"figure"});
    const Run b = run({"figure"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto rs = rows(a.out);
    REQUIRE(rs.size() == 1000);
    CHECK(std::stod(rs.back()[0]) == 10.0);
    CHECK(std::stod(rs.front()[0]) == 0.01);
    const auto pos = a.out.find("# extrema\n");
    REQUIRE(pos != std::string::npos);
    const auto ex = rows(a.out.substr(pos + 10));
    int maxima = 0;
    for (const auto& e : ex) maxima += e[0] == "maximum";
    CHECK(maxima == 3);
    // Delta positive from the first maximum on
    const double first_max = 5 * pi / 6;
    for (const auto& row : rs) {
        if (std::stod(row[0]) >= first_max) CHECK(std::stod(row[1]) > 0.0);
    }
    CHECK(run({"figure", "--samples", "1"}).code == 2);
}

TEST_CASE("JSON and CSV agree to the declared precision") {
    const std::vector<std::string> base{"eval", "--nu", "2.5", "--alpha", "1.1", "--x", "0.3,4.4,17", "--precision", "9"};
    const Run c = run(base);
    auto jargs = base;
    jargs.insert(jargs.end(), {"--format", "json"});
    const Run j = run(jargs);
    const auto doc = nlohmann::json::parse(j.out);
    const auto rs = rows(c.out);
    REQUIRE(doc["rows"].size() == rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
        CHECK(std::stod(rs[i][1]) == doc["rows"][i]["c"].get<double>());
        CHECK(rs[i][1].size() <= 16);
    }
}

TEST_CASE("CSV values re-parse within the printed precision") {
    const Run c = run({"eval", "--nu", "3.3", "--alpha", "0.2", "--x", "0.7,5,33", "--precision", "17"});
    const Run d = run({"eval", "--nu", "3.3", "--alpha", "0.2", "--x", "0.7,5,33", "--precision", "8"});
    const auto full = rows(c.out), short_ = rows(d.out);
    for (std::size_t i = 0; i < full.size(); ++i) {
        for (std::size_t k = 1; k < 8; ++k) {
            if (full[i][k].empty()) continue;
            const double a = std::stod(full[i][k]);
            const double b = std::stod(short_[i][k]);
            CHECK(std::fabs(a - b) <= 0.5e-7 * std::fabs(a) * 1.0000001);
        }
    }
}

TEST_CASE("--out writes a file") {
    const std::string path = "gbessel_cli_test_out.csv";
    const Run r = run({"zeros", "--nu", "1", "--alpha", "0", "--count", "2", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(rows(ss.str()).size() == 2);
    std::remove(path.c_str());
}

}
