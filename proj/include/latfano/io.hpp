// Text formats for polytopes, fans and reports, with line-exact parse errors.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latfano/suites.hpp"
#include "latfano/toric.hpp"

namespace latfano {

struct ParseError : std::runtime_error {
  int line;  // 1-based line of the offending token

  ParseError(int line_, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_) + ": " + message),
        line(line_) {}
};

/// Polytope file: header `v d` (vertex count, ambient dimension), then v
/// lines of d integers. `#` starts a comment anywhere. The parser hulls the
/// points, so any point list is accepted; the writer emits the canonical
/// vertex list, and parse(format(P)) == P bit-exactly.
Polytope parse_polytope(const std::string& text);
std::string format_polytope(const Polytope& P);

/// Fan file: `rays s d`, s lines of d integers, `cones t`, t lines of
/// 0-based ray indices, then optionally `divisor` and one line of s
/// integers aligned with the rays as written in the file.
std::pair<Fan, std::optional<TDivisor>> parse_fan(const std::string& text);
std::string format_fan(const Fan& F, const TDivisor* D = nullptr);

/// Concatenated vertex-matrix blocks in the classification-list convention:
/// header `r c`, then an r-by-c integer matrix; when r <= c the columns are
/// the vertices (dimension r), otherwise the rows are (dimension c). Only
/// dimensions 2 and 3 are accepted. Blank lines between blocks are fine.
std::vector<Polytope> parse_ks_blocks(const std::string& text);

/// One-line JSON object. stable=true zeroes elapsed_ms so outputs are
/// byte-comparable across runs.
std::string to_json(const CheckReport& r, bool stable);

/// JSON-lines stream: one CheckReport object per line, then the summary
/// object {"suite","seed","passed","failed"}.
std::string to_json_lines(const SuiteResult& s, bool stable);

}  // namespace latfano
