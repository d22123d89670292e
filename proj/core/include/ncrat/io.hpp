#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncrat/machine.hpp"
#include "ncrat/whitehead.hpp"

namespace ncrat::io {

// Structured file formats (JSON text). Elements are stored in their
// printed form, indeterminate words as "x1 x2" ("" for the empty word).
//
//   series          {"spec", "mu", "N", "entries": [[word, element], ...]}
//   series matrix   {"spec", "mu", "N", "matrix": [[entries, ...], ...]}
//   ring matrix     {"spec", "matrix": [[element, ...], ...]}
//   machine         {"spec", "mu", "n", "f": [element...],
//                    "s": [[[element...] per row] per indeterminate],
//                    "g": [element...]}
//   report          {"stage", "order", "pass", "chi_gap",
//                    "checks": [{"name", "pass", "detail"}]}
//
// Readers throw FormatError on malformed input and propagate ring errors.

std::string write_series(const TruncatedSeries& p);
TruncatedSeries read_series(std::string_view text);

std::string write_series_matrix(const SeriesMatrix& m);
SeriesMatrix read_series_matrix(std::string_view text);

std::string write_ring_matrix(const RingMatrix& m);
RingMatrix read_ring_matrix(std::string_view text);

std::string write_machine(const LinearMachine& m);
LinearMachine read_machine(std::string_view text);

std::string write_report(const ChainReport& r);

/// [{"degree": i, "value": "..."}] for i = 1..n.
std::string write_necklaces(const std::vector<NecklaceElement>& coefficients);

/// {"unit_part", "diagonal": [series], "ops": [{"kind","i","j","multiplier"}], "verified"}
std::string write_reduction(const GaussianReduction& r);

/// {"unit_part", "witt_part", "diagonal", "verified"}
std::string write_witt(const WittSplit& w);

} // namespace ncrat::io
