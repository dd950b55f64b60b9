#include "cli.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace floorgs;
using floorgs::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(FLOORGS_GOLDEN_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("polygon literals")
{
    using cli::parse_polygon_literal;
    CHECK(parse_polygon_literal("triangle:3") == trapezoid(1, 3, 0));
    CHECK(parse_polygon_literal("rect:3,2") == trapezoid(0, 3, 2));
    CHECK(parse_polygon_literal("trapezoid:2,2,1") == trapezoid(2, 2, 1));
    CHECK(parse_polygon_literal("vertices:0,0;3,0;0,3") == trapezoid(1, 3, 0));
    const LatticePolygon sheared = parse_polygon_literal("trapezoid:2,2,1@transform=1,0,1,1,0,0");
    CHECK(sheared == LatticePolygon::from_vertices(std::vector<Point>{{0, 0}, {5, 5}, {1, 3}, {0, 2}}));
    CHECK(parse_polygon_literal("vertices:1,1;4,1;1,4@transform=1,0,0,1,-1,-1") ==
          trapezoid(1, 3, 0));
    CHECK(cli::parse_transform("0,-1,1,0,0,0").m == LatticeTransform::rotation90().m);
}

TEST_CASE("syntax errors carry a position")
{
    using cli::parse_polygon_literal;
    auto pos = [](const char* text) -> std::size_t {
        try {
            parse_polygon_literal(text);
        } catch (const cli::SyntaxError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    CHECK(pos("trapezoid:1,x") == 12);
    CHECK(pos("triangle:3,") == 10);
    CHECK(pos("rect:3") == 6);
    CHECK(pos("circle:3") == 0);
    CHECK(pos("triangle3") == 9);
    CHECK(pos("triangle:3@rotate") == 10);
    CHECK(pos("triangle:3@transform=1,0,0,1,0") == 30);
    CHECK(pos("triangle:-1") == 9);
    CHECK_THROWS_AS(parse_polygon_literal("triangle:3@transform=2,0,0,1,0,0"), std::invalid_argument);
}

TEST_CASE("exit codes")
{
    CHECK(call({"invariant", "triangle:3", "-g", "0", "-s", "2"}).code == 0);
    const Result bad = call({"invariant", "trapezoid:1,x", "-g", "0"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("position 12") != std::string::npos);
    CHECK(call({}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"invariant", "triangle:3", "-g", "0", "-s", "9"}).code == 1);
    CHECK(call({"invariant", "triangle:3", "-g", "0", "--pairing", "8-9"}).code == 1);
    CHECK(call({"check", "nonsense", "triangle:3", "-g", "0"}).code == 1);
    CHECK(call({"--help"}).code == 0);
    const Result cut =
        call({"check", "corner-cut", "triangle:3", "-g", "0", "-s", "0", "--cut", "triangle:3"});
    CHECK(cut.code == 2);
    CHECK(cut.out.find("status=fail") != std::string::npos);
    CHECK(call({"polydata", "vertices:0,0;4000000000000000000,0;0,4000000000000000000"}).code == 3);
}

TEST_CASE("golden tables")
{
    CHECK(call({"polydata", "triangle:3"}).out == golden("polydata_triangle3.txt"));
    CHECK(call({"diagrams", "triangle:3", "-g", "0"}).out == golden("diagrams_triangle3_g0.txt"));
    CHECK(call({"table", "triangle:3", "-g", "0", "--smax", "4"}).out ==
          golden("table_triangle3_g0.txt"));
    CHECK(call({"table", "rect:3,2", "-g", "1"}).out == golden("table_rect32_g1.txt"));
    CHECK(call({"table", "triangle:3", "-g", "0", "--smax", "1", "--format", "records"}).out ==
          golden("table_triangle3_g0_records.txt"));
}

TEST_CASE("records are tab separated key value pairs")
{
    const Result r = call({"polydata", "vertices:0,0;2,0;4,1;4,3;3,4;2,4;0,2", "--format", "records"});
    REQUIRE(r.code == 0);
    for (const auto& l : lines(r.out))
        CHECK(std::count(l.begin(), l.end(), '\t') == 1);
    CHECK(r.out.find("a\t4\n") != std::string::npos);
    CHECK(r.out.find("y\t11\n") != std::string::npos);
    CHECK(r.out.find("chi\t7\n") != std::string::npos);
    CHECK(r.out.find("g_max\t8\n") != std::string::npos);
}

TEST_CASE("table totals agree with the invariant command")
{
    const Result t = call({"table", "rect:3,2", "-g", "0", "--format", "records"});
    REQUIRE(t.code == 0);
    for (int s = 0; s <= 4; ++s) {
        const Result i = call({"invariant", "rect:3,2", "-g", "0", "-s", std::to_string(s),
                               "--format", "records"});
        const std::string key = "total.s" + std::to_string(s) + "\t";
        const auto at = t.out.find(key);
        REQUIRE(at != std::string::npos);
        const std::string total = t.out.substr(at + key.size(), t.out.find('\n', at) - at - key.size());
        CHECK(i.out.find("invariant\t" + total + "\n") != std::string::npos);
        CHECK(i.out.find("half_integer_multiplicities\t0\n") != std::string::npos);
    }
}

TEST_CASE("output is deterministic across runs and worker counts")
{
    const std::vector<std::string> args = {"table", "trapezoid:2,2,1", "-g", "0"};
    const Result a = call(args);
    auto more = args;
    more.insert(more.end(), {"--jobs", "3"});
    CHECK(call(args).out == a.out);
    CHECK(call(more).out == a.out);

    const std::vector<std::string> check = {"check", "pairing-independence", "rect:3,2", "-g",
                                            "1", "-s", "1", "--trials", "5", "--seed", "7"};
    CHECK(call(check).out == call(check).out);
}

TEST_CASE("checks through the command line")
{
    const Result poly = call({"check", "polynomiality", "rect:3,2", "-g", "0", "-i", "2"});
    CHECK(poly.code == 0);
    CHECK(poly.out.find("status=outside-hypotheses  observed=pass") != std::string::npos);

    const Result lat = call({"check", "lattice-invariance", "rect:2,3", "-g", "1", "--other",
                             "rect:3,2"});
    CHECK(lat.code == 0);
    CHECK(lines(lat.out).size() == 6);

    const Result ab = call({"check", "ab-formula", "-a", "2", "-b", "0", "-g", "0", "-s", "1"});
    CHECK(ab.code == 0);
    CHECK(ab.out.rfind("check=ab-formula", 0) == 0);

    CHECK(call({"check", "lemma32"}).code == 0);
    CHECK(call({"check", "monotonicity", "triangle:3", "-g", "0"}).code == 0);
    CHECK(call({"check", "positivity", "triangle:3", "-g", "0", "--trials", "5"}).code == 0);
    const Result cut = call({"check", "corner-cut", "triangle:3", "-g", "0"});
    CHECK(cut.code == 0);
    CHECK(lines(cut.out).size() == 4);
}
