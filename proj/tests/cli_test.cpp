#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdinText = "") {
    std::istringstream in(stdinText);
    std::ostringstream out;
    std::ostringstream err;
    const int code = ktr::cli::runCli(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kCycleFour = "PCA 4 8\n0 3 0 1\n2 5 0.5 0\n4 7 0 1\n6 1 0.5 0\n";
const char* kK22 = "BIP 2 2 4\n0 0\n0 1\n1 0\n1 1\n";

}  // namespace

TEST_CASE("formatProbability keeps twelve significant digits") {
    CHECK(ktr::cli::formatProbability(0.75) == "0.750000000000");
    CHECK(ktr::cli::formatProbability(1.0) == "1.00000000000");
    CHECK(ktr::cli::formatProbability(0.4375) == "0.437500000000");
}

TEST_CASE("exact") {
    const Run r = run({"exact"}, kCycleFour);
    CHECK(r.code == 0);
    CHECK(r.out == "KTR 0.750000000000\n");

    const Run stats = run({"exact", "--stats"}, kCycleFour);
    CHECK(stats.out.rfind("KTR 0.750000000000\nSTEPS ", 0) == 0);
}

TEST_CASE("exact reads and writes files") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto in = dir / "ktr_cli_test_c4.pca";
    const auto outPath = dir / "ktr_cli_test_c4.out";
    std::ofstream(in) << kCycleFour;
    const Run r = run({"exact", "-i", in.string(), "-o", outPath.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream result(outPath);
    std::string line;
    std::getline(result, line);
    CHECK(line == "KTR 0.750000000000");
    std::filesystem::remove(in);
    std::filesystem::remove(outPath);
}

TEST_CASE("brute, verify and mc") {
    CHECK(run({"brute"}, kCycleFour).out == "KTR 0.750000000000\n");

    const Run v = run({"verify"}, kCycleFour);
    CHECK(v.code == 0);
    CHECK(v.out.find("VERIFY PASS") != std::string::npos);

    const Run mc = run({"mc", "--samples", "1000", "--seed", "7"}, kCycleFour);
    CHECK(mc.code == 0);
    CHECK(mc.out.find("# RNG mt19937_64\nMC ") == 0);
    CHECK(mc.out.find(" 1000 7\n") != std::string::npos);
    CHECK(run({"mc", "--samples", "1000", "--seed", "7"}, kCycleFour).out == mc.out);
}

TEST_CASE("hardness commands") {
    CHECK(run({"covers"}, kK22).out == "COUNT 7\n");

    const Run id = run({"verify-reduction"}, kK22);
    CHECK(id.code == 0);
    CHECK(id.out == "COUNT 7\nSUCCESS 7\nKTR 0.437500000000\nIDENTITY PASS\n");

    const Run red = run({"reduce"}, kK22);
    CHECK(red.code == 0);
    CHECK(red.out.rfind("CHD 9 18\n", 0) == 0);
    CHECK(red.out.find("# ROLE 4 Z") != std::string::npos);
    // The emitted CHD is itself a valid input.
    CHECK(run({"brute"}, red.out).out == "KTR 0.437500000000\n");
}

TEST_CASE("gen output feeds the solvers") {
    const Run g = run({"gen", "--n", "8", "--k", "3", "--reach", "3", "--seed", "5"});
    CHECK(g.code == 0);
    CHECK(g.out.find("PCA 8 16\n") != std::string::npos);
    CHECK(run({"gen", "--n", "8", "--k", "3", "--reach", "3", "--seed", "5"}).out == g.out);
    CHECK(run({"verify"}, g.out).code == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"exact"}, "CHD 2 4\n0 2 0 1\n1 3 0 1\n").code == ktr::cli::kUnsupported);
    CHECK(run({"exact"}, kK22).code == ktr::cli::kUnsupported);
    CHECK(run({"exact"}, "PCA 1 2\n0 0 0 1\n").code == ktr::cli::kParseError);
    CHECK(run({"exact"}, "PCA 2 8\n0 5 0 1\n1 3 0 1\n").code == ktr::cli::kValidationError);
    CHECK(run({"brute"}, "PCA 2 8\n0 5 0 1\n1 3 0 1\n").code == 0);
    CHECK(run({"exact", "-i", "/nonexistent/file.pca"}).code == ktr::cli::kParseError);
    CHECK(run({"frobnicate"}).code == ktr::cli::kParseError);
    CHECK(run({}).code == ktr::cli::kParseError);

    std::string wide = "BIP 5 6 30\n";
    for (int u = 0; u < 5; ++u) {
        for (int v = 0; v < 6; ++v) wide += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    CHECK(run({"covers"}, wide).code == ktr::cli::kGuardExceeded);
}

TEST_CASE("imperfect targets: rejected unless coerced") {
    const char* text = "PCA 4 8\n0 3 0.2 1\n2 5 0.5 0\n4 7 0 1\n6 1 0.5 0\n";
    CHECK(run({"exact"}, text).code == ktr::cli::kValidationError);
    const Run r = run({"exact", "--zero-target-q"}, text);
    CHECK(r.code == 0);
    CHECK(r.out == "KTR 0.750000000000\n");
    CHECK(r.err.find("warning") != std::string::npos);
}
