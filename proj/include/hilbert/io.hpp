#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hilbert/algebra.hpp"
#include "hilbert/lattice.hpp"
#include "hilbert/report.hpp"

namespace hilbert {

/// A table as read from disk, before any axiom is checked.
struct AlgebraFile {
  Element one = 0;
  std::vector<std::vector<Element>> table;
  std::vector<std::string> labels;
};

/// Accepts JSON {"size", "one", "labels", "table"} or the text format:
///
///   # comments run to end of line
///   labels 0 a 1
///   one 1
///   0 0 1 ...      one row per line, entries as indices or labels
///
/// Throws MalformedInput on syntax errors, duplicate labels, a size that
/// disagrees with the rows, or entries that are neither indices nor labels.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);

/// Validates and applies labels. Throws InvalidAlgebra or MalformedInput.
Algebra to_algebra(const AlgebraFile& file);
Algebra load_algebra(const std::string& path);

std::string to_json_text(const Algebra& a);
std::string to_plain_text(const Algebra& a);

/// Covering relation of `order` as a bottom-to-top DOT digraph.
std::string to_dot(std::string_view graph_name, const Poset& order, const std::vector<std::string>& labels);

/// Deterministic renderings: elapsed times appear only when `timing` is set.
std::string report_to_json(const VerificationReport& report, bool timing);
std::string report_to_text(const VerificationReport& report, bool timing);

}  // namespace hilbert
