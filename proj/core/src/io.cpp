#include "ktr/io.hpp"

#include <charconv>
#include <cstdint>
#include <limits>
#include <type_traits>
#include <vector>

#include "ktr/errors.hpp"

namespace ktr {

namespace {

struct Token {
    std::string_view text;
    std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    std::size_t line = 1;
    std::size_t i = 0;
    auto isSpace = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; };
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (isSpace(c)) {
            ++i;
        } else {
            const std::size_t begin = i;
            while (i < text.size() && !isSpace(text[i]) && text[i] != '#') ++i;
            tokens.push_back({text.substr(begin, i - begin), line});
        }
    }
    return tokens;
}

class TokenReader {
public:
    explicit TokenReader(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    const Token& next(const char* what) {
        if (pos_ >= tokens_.size()) {
            const std::size_t line = tokens_.empty() ? 0 : tokens_.back().line;
            throw ParseError(line, std::string("unexpected end of input, expected ") + what);
        }
        return tokens_[pos_++];
    }

    std::int64_t integer(const char* what, std::int64_t lo, std::int64_t hi) {
        const Token& tok = next(what);
        std::int64_t value = 0;
        const char* end = tok.text.data() + tok.text.size();
        auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
        if (ec != std::errc() || ptr != end) {
            throw ParseError(tok.line, std::string("expected integer ") + what + ", got '" +
                                           std::string(tok.text) + "'");
        }
        if (value < lo || value > hi) {
            throw ParseError(tok.line, std::string(what) + " " + std::to_string(value) +
                                           " out of range [" + std::to_string(lo) + ", " +
                                           std::to_string(hi) + "]");
        }
        return value;
    }

    double probability() {
        const Token& tok = next("failure probability");
        double value = 0.0;
        const char* end = tok.text.data() + tok.text.size();
        auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
        if (ec != std::errc() || ptr != end) {
            throw ParseError(tok.line, "expected decimal failure probability, got '" +
                                           std::string(tok.text) + "'");
        }
        return value;
    }

    std::size_t lastLine() const { return pos_ ? tokens_[pos_ - 1].line : 0; }

    void expectEnd() const {
        if (pos_ < tokens_.size()) {
            throw ParseError(tokens_[pos_].line,
                             "trailing token '" + std::string(tokens_[pos_].text) + "'");
        }
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

constexpr std::int64_t kMaxCount = std::numeric_limits<Label>::max() / 2;
constexpr std::int64_t kMaxSlots = std::numeric_limits<std::int64_t>::max() / 4;

template <typename Family>
ReliabilityInstance readFamily(TokenReader& in, const ParseOptions& options) {
    const auto n = in.integer("element count", 0, kMaxCount);
    const auto slots = in.integer("slot count", 1, kMaxSlots);

    Family fam;
    fam.slots = slots;
    ReliabilityInstance inst;
    for (std::int64_t r = 0; r < n; ++r) {
        const Position a = in.integer("endpoint", 0, slots - 1);
        const Position b = in.integer("endpoint", 0, slots - 1);
        if (a == b) throw ParseError(in.lastLine(), "endpoints must differ");
        const double q = in.probability();
        const auto t = in.integer("target flag", 0, 1);
        if constexpr (std::is_same_v<Family, ArcFamily>) {
            fam.arcs.push_back(Arc{a, b});
        } else {
            fam.chords.push_back(Chord{a, b});
        }
        inst.q.push_back(q);
        if (t == 1) inst.targets.push_back(static_cast<Label>(r));
    }
    inst.family = std::move(fam);
    if (options.zeroTargetQ) {
        const std::size_t changed = coerceTargetFailures(inst);
        if (options.coercedTargets) *options.coercedTargets = changed;
    }
    return validateInstance(std::move(inst), false);
}

BipartiteGraph readBipartite(TokenReader& in) {
    BipartiteGraph graph;
    graph.nU = static_cast<int>(in.integer("|U|", 0, kMaxCount));
    graph.nV = static_cast<int>(in.integer("|V|", 0, kMaxCount));
    const auto m = in.integer("edge count", 0, kMaxCount);
    for (std::int64_t e = 0; e < m; ++e) {
        const int u = static_cast<int>(in.integer("u", 0, graph.nU - 1));
        const int v = static_cast<int>(in.integer("v", 0, graph.nV - 1));
        graph.edges.emplace_back(u, v);
    }
    validateBipartite(graph);
    return graph;
}

std::string formatDouble(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

}  // namespace

ParsedInput parseInput(std::string_view text, const ParseOptions& options) {
    TokenReader in(tokenize(text));
    const Token& header = in.next("header (PCA, CHD or BIP)");
    ParsedInput out;
    if (header.text == "PCA") {
        out = readFamily<ArcFamily>(in, options);
    } else if (header.text == "CHD") {
        out = readFamily<ChordFamily>(in, options);
    } else if (header.text == "BIP") {
        out = readBipartite(in);
    } else {
        throw ParseError(header.line, "unknown header '" + std::string(header.text) + "'");
    }
    in.expectEnd();
    return out;
}

ReliabilityInstance parseInstance(std::string_view text, const ParseOptions& options) {
    ParsedInput parsed = parseInput(text, options);
    if (auto* inst = std::get_if<ReliabilityInstance>(&parsed)) return std::move(*inst);
    throw UnsupportedInput("expected a PCA or CHD instance, got a BIP graph");
}

BipartiteGraph parseBipartite(std::string_view text) {
    ParsedInput parsed = parseInput(text);
    if (auto* graph = std::get_if<BipartiteGraph>(&parsed)) return std::move(*graph);
    throw UnsupportedInput("expected a BIP graph, got a reliability instance");
}

std::string emitInstance(const ReliabilityInstance& inst) {
    const std::vector<bool> isTarget = inst.targetMask();
    std::string out;
    auto record = [&](Label r, Position a, Position b) {
        out += std::to_string(a) + ' ' + std::to_string(b) + ' ' + formatDouble(inst.q[r]) + ' ' +
               (isTarget[r] ? '1' : '0') + '\n';
    };
    if (inst.isArcFamily()) {
        const ArcFamily& fam = inst.arcs();
        out = "PCA " + std::to_string(fam.size()) + ' ' + std::to_string(fam.slots) + '\n';
        for (Label r = 0; r < fam.size(); ++r) record(r, fam.arcs[r].start, fam.arcs[r].end);
    } else {
        const ChordFamily& fam = inst.chords();
        out = "CHD " + std::to_string(fam.size()) + ' ' + std::to_string(fam.slots) + '\n';
        for (Label r = 0; r < fam.size(); ++r) record(r, fam.chords[r].p1, fam.chords[r].p2);
    }
    return out;
}

std::string emitBipartite(const BipartiteGraph& graph) {
    std::string out = "BIP " + std::to_string(graph.nU) + ' ' + std::to_string(graph.nV) + ' ' +
                      std::to_string(graph.edges.size()) + '\n';
    for (const auto& [u, v] : graph.edges) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
    return out;
}

std::string emitReduction(const ReductionOutput& reduction) {
    std::string out = emitInstance(reduction.instance());
    for (Label r = 0; r < static_cast<Label>(reduction.roles.size()); ++r) {
        const ChordRole& role = reduction.roles[r];
        out += "# ROLE " + std::to_string(r) + ' ';
        switch (role.kind) {
            case ChordRole::Kind::X: out += "X " + std::to_string(role.u); break;
            case ChordRole::Kind::Y: out += "Y " + std::to_string(role.v); break;
            case ChordRole::Kind::Z: out += "Z"; break;
            case ChordRole::Kind::W:
                out += "W " + std::to_string(role.u) + ' ' + std::to_string(role.v);
                break;
        }
        out += '\n';
    }
    return out;
}

}  // namespace ktr
