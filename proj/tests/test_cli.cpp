#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ufmvt/cli.hpp"

using ufmvt::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count command") {
    auto r = invoke({"count", "--n", "4", "--a", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "2\n");
    CHECK(invoke({"count", "--n", "4", "--a", "3", "--method", "brute"}).out == "2\n");
}

TEST_CASE("sum command, all methods agree") {
    auto r = invoke({"sum", "--N", "4", "--a", "3", "--kind", "S"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    for (const char* method : {"direct", "sieve", "chars"}) {
        CHECK(invoke({"sum", "--N", "1000", "--a", "12", "--method", method}).out ==
              invoke({"sum", "--N", "1000", "--a", "12"}).out);
    }
    CHECK(invoke({"sum", "--N", "100", "--a", "6", "--kind", "T"}).code == 0);
}

TEST_CASE("u command") {
    auto r = invoke({"u", "--N", "100"});
    CHECK(r.code == 0);
    CHECK(!r.out.empty());
}

TEST_CASE("constants document") {
    auto r = invoke({"constants"});
    CHECK(r.code == 0);
    CHECK(r.out.find("gamma=0.577215664902\n") != std::string::npos);
    CHECK(r.out.find("C=") != std::string::npos);
    auto with_a = invoke({"constants", "--a", "3"});
    CHECK(with_a.out.find("c1=") != std::string::npos);
}

TEST_CASE("residue command") {
    auto r = invoke({"residue", "--N", "1000", "--a", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("residue_principal=") != std::string::npos);
    CHECK(r.out.find("main_term_full=") != std::string::npos);
}

TEST_CASE("chars verify") {
    auto r = invoke({"chars", "--a", "12", "--verify"});
    CHECK(r.code == 0);
    CHECK(r.out == "ok\n");
}

TEST_CASE("rk command") {
    auto r = invoke({"rk", "--n", "1", "--a", "1", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("scan then fit round trip through files") {
    std::string path = "test_scan_tmp.csv";
    auto r = invoke({"scan", "--a", "1", "--grid", "pow2:8..14", "--output", path});
    REQUIRE(r.code == 0);
    auto f = invoke({"fit", "--input", path, "--degree", "2"});
    CHECK(f.code == 0);
    CHECK(f.out.find("coeff_L2=") != std::string::npos);
    CHECK(f.out.find("rms_residual=") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("byte-identical output on repeated invocations") {
    auto a = invoke({"scan", "--a", "3", "--grid", "64,256,1024"});
    auto b = invoke({"scan", "--a", "3", "--grid", "64,256,1024"});
    CHECK(a.out == b.out);
    CHECK(invoke({"constants"}).out == invoke({"constants"}).out);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"count", "--n", "4"}).code == 2);            // missing flag
    CHECK(invoke({"nonsense"}).code == 2);                     // unknown command
    CHECK(invoke({"count", "--n", "4", "--a", "3", "--bogus", "1"}).code == 2);
    CHECK(invoke({"sum", "--N", "20000000", "--a", "1", "--method", "direct"}).code == 3);
    CHECK(invoke({"u", "--N", "2000000"}).code == 3);
    CHECK(invoke({"--help"}).code == 0);
}
