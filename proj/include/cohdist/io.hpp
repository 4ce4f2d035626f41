#pragma once

#include <string>
#include <vector>

#include "cohdist/complementarity.hpp"
#include "cohdist/matrix.hpp"
#include "cohdist/states.hpp"

namespace cohdist {

// Malformed content (bad JSON, wrong schema, broken CSV row), as opposed to
// plain I/O failure; the CLI maps this to its format-error exit code.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CSV schema (one row per sweep record, header mandatory):
// sample_id,d,channel,param,coherence,disturbance,extra_terms_json,residual,seed
// Doubles carry 17 significant digits so a round-trip is bit-exact; the JSON
// column is RFC 4180 quoted.
void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(const std::string& path);
std::string sweep_csv_string(const std::vector<SweepRecord>& records);

// Config echo + solver hyperparameters, written next to the CSV as
// <output>.meta.json.
void write_sweep_meta(const std::string& csv_path, const SweepConfig& cfg);

// Replayable violation dump: state (row-major re/im pairs), channel Kraus
// set, relation, lhs, bound.
void write_counterexample(const std::string& path, const CounterexampleError& err);

// Density matrix as JSON {"dim": d, "matrix": [[re, im], ...] row-major}.
// Throws std::runtime_error with a message on malformed content.
DensityMatrix read_density_json(const std::string& path);
void write_density_json(const std::string& path, const Mat& rho);

// Scatter of (coherence, disturbance) with the line D = bound - k*C overlaid
// per (bound, k) present in the records. Empty input yields axes only.
std::string render_scatter_svg(const std::vector<SweepRecord>& records);

std::string format_double(double v);  // shortest 17-significant-digit form

}  // namespace cohdist
