#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "ktr/hardness.hpp"
#include "ktr/model.hpp"

namespace ktr {

using ParsedInput = std::variant<ReliabilityInstance, BipartiteGraph>;

struct ParseOptions {
    /// Force q = 0 on targets instead of rejecting a nonzero value.
    bool zeroTargetQ = false;
    /// When set, receives the number of targets that were forced to q = 0.
    std::size_t* coercedTargets = nullptr;
};

/// Reads a PCA, CHD or BIP document.
///
///     PCA <n> <P>       then n records  <start> <end> <q> <t>
///     CHD <n> <P>       then n records  <p1> <p2> <q> <t>
///     BIP <nU> <nV> <m> then m records  <u> <v>
///
/// `#` starts a comment running to the end of the line. Tokens are
/// whitespace separated. Instances come back validated (labeled, not
/// checked for properness). Malformed text throws ParseError carrying the
/// line number; well-formed but inconsistent content throws ValidationError.
ParsedInput parseInput(std::string_view text, const ParseOptions& options = {});

/// parseInput restricted to PCA/CHD; a BIP document throws UnsupportedInput.
ReliabilityInstance parseInstance(std::string_view text, const ParseOptions& options = {});

/// parseInput restricted to BIP; other documents throw UnsupportedInput.
BipartiteGraph parseBipartite(std::string_view text);

/// Writes the instance in label order; q uses the shortest round-trip form.
std::string emitInstance(const ReliabilityInstance& inst);
std::string emitBipartite(const BipartiteGraph& graph);

/// CHD document of the reduction followed by one `# ROLE <label> <role>` comment per chord.
std::string emitReduction(const ReductionOutput& reduction);

}  // namespace ktr
