#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ktr/errors.hpp"
#include "ktr/exact.hpp"
#include "ktr/generator.hpp"
#include "ktr/hardness.hpp"
#include "ktr/io.hpp"
#include "ktr/oracle.hpp"

namespace ktr::cli {

namespace {

constexpr double kVerifyTolerance = 1e-9;

struct Settings {
    std::string input;
    std::string output;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    Label n = 0;
    Label k = 2;
    Label reach = 1;
    Label minReach = 1;
    bool stats = false;
    bool zeroTargetQ = false;
};

std::string readInput(const Settings& s, std::istream& in) {
    if (s.input.empty() || s.input == "-") {
        return std::string(std::istreambuf_iterator<char>(in), {});
    }
    std::ifstream file(s.input, std::ios::binary);
    if (!file) throw ParseError(0, "cannot open input file '" + s.input + "'");
    return std::string(std::istreambuf_iterator<char>(file), {});
}

class Session {
public:
    Session(const Settings& settings, std::istream& in, std::ostream& out, std::ostream& err)
        : s_(settings), in_(in), out_(out), err_(err) {}

    void exact() {
        const ReliabilityInstance inst = loadInstance(true);
        const ExactResult result = ktrExact(inst);
        emit() << "KTR " << formatProbability(result.reliability) << '\n';
        if (s_.stats) emit() << "STEPS " << result.steps << '\n';
    }

    void brute() {
        const ReliabilityInstance inst = loadInstance(false);
        emit() << "KTR " << formatProbability(ktrBrute(inst)) << '\n';
    }

    void monteCarlo() {
        if (s_.samples == 0) throw ValidationError("--samples must be positive");
        const ReliabilityInstance inst = loadInstance(false);
        const MonteCarloEstimate mc = ktrMonteCarlo(inst, s_.samples, s_.seed);
        emit() << "# RNG " << kMonteCarloGenerator << '\n'
               << "MC " << formatProbability(mc.estimate) << ' '
               << formatProbability(mc.standardError) << ' ' << mc.samples << ' ' << mc.seed
               << '\n';
    }

    int verify() {
        const ReliabilityInstance inst = loadInstance(true);
        const double exactValue = ktrExact(inst).reliability;
        const double bruteValue = ktrBrute(inst);
        const double diff = std::abs(exactValue - bruteValue);
        const bool pass = diff <= kVerifyTolerance;
        emit() << "KTR " << formatProbability(exactValue) << '\n'
               << "BRUTE " << formatProbability(bruteValue) << '\n'
               << "DIFF " << formatProbability(diff) << '\n'
               << "VERIFY " << (pass ? "PASS" : "FAIL") << '\n';
        return pass ? kOk : kCheckFailed;
    }

    void reduce() { emit() << emitReduction(buildCircleRep(loadBipartite())); }

    void covers() { emit() << "COUNT " << countEdgeCovers(loadBipartite()) << '\n'; }

    int verifyReduction() {
        const IdentityReport report = verifyIdentity(loadBipartite());
        emit() << "COUNT " << report.edgeCovers << '\n'
               << "SUCCESS " << report.successSets << '\n'
               << "KTR " << formatProbability(report.reliability) << '\n'
               << "IDENTITY " << (report.pass ? "PASS" : "FAIL") << '\n';
        return report.pass ? kOk : kCheckFailed;
    }

    void generate() {
        const GeneratorOptions options{s_.n, s_.k, s_.reach, s_.seed, s_.minReach};
        emit() << "# generated n=" << s_.n << " k=" << s_.k << " reach=" << s_.reach
               << " min-reach=" << s_.minReach << " seed=" << s_.seed << '\n'
               << emitInstance(generateInstance(options));
    }

private:
    std::ostream& emit() {
        if (s_.output.empty() || s_.output == "-") return out_;
        if (!file_.is_open()) {
            file_.open(s_.output, std::ios::binary);
            if (!file_) throw ValidationError("cannot open output file '" + s_.output + "'");
        }
        return file_;
    }

    ReliabilityInstance loadInstance(bool requireProper) {
        std::size_t coerced = 0;
        ParseOptions options{s_.zeroTargetQ, &coerced};
        ReliabilityInstance inst = parseInstance(readInput(s_, in_), options);
        if (coerced > 0) {
            err_ << "warning: forced q = 0 on " << coerced << " target(s)\n";
        }
        if (requireProper) {
            if (!inst.isArcFamily()) {
                throw UnsupportedInput("this command needs a PCA (proper circular-arc) instance");
            }
            inst = validateInstance(std::move(inst), true);
        }
        return inst;
    }

    BipartiteGraph loadBipartite() { return parseBipartite(readInput(s_, in_)); }

    const Settings& s_;
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::ofstream file_;
};

}  // namespace

std::string formatProbability(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%#.12g", value);
    return buf;
}

int runCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
    Settings s;
    CLI::App app{"Exact and reference K-terminal reliability for circular-arc and circle graphs",
                 "ktr"};
    app.require_subcommand(1);

    auto addIo = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", s.input, "Input file (default: stdin)");
        cmd->add_option("-o,--output", s.output, "Output file (default: stdout)");
    };
    auto addInstanceFlags = [&](CLI::App* cmd) {
        addIo(cmd);
        cmd->add_flag("--zero-target-q", s.zeroTargetQ,
                      "Force q = 0 on targets instead of rejecting the instance");
    };

    auto* exactCmd = app.add_subcommand("exact", "Linear-time solver for proper circular-arc instances");
    addInstanceFlags(exactCmd);
    exactCmd->add_flag("--stats", s.stats, "Also print the STEPS counter");

    auto* bruteCmd = app.add_subcommand("brute", "Exhaustive solver over all non-target states");
    addInstanceFlags(bruteCmd);

    auto* mcCmd = app.add_subcommand("mc", "Crude Monte Carlo estimate");
    addInstanceFlags(mcCmd);
    mcCmd->add_option("--samples", s.samples, "Number of samples")->capture_default_str();
    mcCmd->add_option("--seed", s.seed, "Generator seed")->capture_default_str();

    auto* verifyCmd = app.add_subcommand("verify", "Compare the exact and brute-force solvers");
    addInstanceFlags(verifyCmd);

    auto* reduceCmd = app.add_subcommand("reduce", "Compile a BIP graph into a CHD instance");
    addIo(reduceCmd);
    auto* coversCmd = app.add_subcommand("covers", "Count edge covers of a BIP graph");
    addIo(coversCmd);
    auto* identityCmd = app.add_subcommand(
        "verify-reduction", "Check edge covers = success sets = KTR * 2^|E| for a BIP graph");
    addIo(identityCmd);

    auto* genCmd = app.add_subcommand("gen", "Generate a random proper circular-arc instance");
    addIo(genCmd);
    genCmd->add_option("--n", s.n, "Number of arcs")->required();
    genCmd->add_option("--k", s.k, "Number of targets")->capture_default_str();
    genCmd->add_option("--reach", s.reach, "Maximum reach D")->capture_default_str();
    genCmd->add_option("--min-reach", s.minReach, "Minimum reach (0 allows cuts)")
        ->capture_default_str();
    genCmd->add_option("--seed", s.seed, "Generator seed")->capture_default_str();

    std::vector<std::string> argvStore;
    argvStore.reserve(args.size() + 1);
    argvStore.emplace_back("ktr");
    argvStore.insert(argvStore.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argvStore) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kParseError;
    }

    Session session(s, in, out, err);
    try {
        if (*exactCmd) session.exact();
        else if (*bruteCmd) session.brute();
        else if (*mcCmd) session.monteCarlo();
        else if (*verifyCmd) return session.verify();
        else if (*reduceCmd) session.reduce();
        else if (*coversCmd) session.covers();
        else if (*identityCmd) return session.verifyReduction();
        else if (*genCmd) session.generate();
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidationError;
    } catch (const GenerationError& e) {
        err << "generation error: " << e.what() << '\n';
        return kValidationError;
    } catch (const UnsupportedInput& e) {
        err << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    } catch (const TooLarge& e) {
        err << "guard exceeded: " << e.what() << '\n';
        return kGuardExceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}

}  // namespace ktr::cli
