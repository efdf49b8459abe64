#pragma once

// Canonical JSON and TSV rendering of the exact tables. Keys keep insertion
// order so that output is byte-deterministic.

#include <string>
#include <vector>

#include "json.hpp"
#include "orbimirror/cohomology.hpp"
#include "orbimirror/mirror.hpp"
#include "orbimirror/wdvv.hpp"

namespace orbimirror {

using Json = nlohmann::ordered_json;

/// One TSV table: a header row followed by data rows of the same width.
struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Output of a command in both formats.
struct Document {
  Json json;
  std::vector<Table> tables;
};

Json rational_json(const Rational& q);
/// {"gamma":"p/q","d":k}
Json element_json(const BasisClass& c);
/// Row-major array of rational strings.
Json matrix_json(const RationalMatrix& m);
/// Array of {"q":exponent,"c":coefficient}, by increasing exponent.
Json qpoly_json(const QPoly& p);
Json report_json(const Report& r);

/// A single table prints as header plus rows. Several tables are separated
/// by a blank line and each is introduced by a "# name" line.
std::string render_tsv(const std::vector<Table>& tables);
std::string render_json(const Json& j);

Document basis_document(const Weights& w);
Document cup_document(const Weights& w);
Document pairing_document(const Weights& w);
Document smallqc_document(const Weights& w);
Document bside_document(const Weights& w);
Document mirror_document(const Weights& w, const Report& classical, const Report& quantum);
Document reconstruct_document(const Potential& p);
Document selftest_document(const Weights& w, const Report& report);

}  // namespace orbimirror
