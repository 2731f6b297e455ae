#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzinfo/trial_engine.hpp"

// Text formats shared by the CLI and external consumers.
//
// Every file may open with `#`-prefixed manifest lines; readers skip them.
namespace mzinfo::formats {

/// Ordered key/value lines written as `# key: value`.
using Manifest = std::vector<std::pair<std::string, std::string>>;

void write_manifest(std::ostream& out, const Manifest& manifest);

/// Shortest decimal form of a double that reads back to the same value.
std::string format_double(double value);

/// Click log: header `trial_id,setup,x,outcome,choice`, one row per trial.
/// `setup` is `open` or `recombined`, `outcome` is 1 or 2 and `choice` is 1
/// when the setup was picked per trial.
void write_click_csv(std::ostream& out, const std::vector<ClickRecord>& records);
std::vector<ClickRecord> read_click_csv(std::istream& in);

/// Reads fit input from either a click log (Recombined rows are aggregated
/// by x) or any CSV whose header has `x`, `n1` and `n2` columns, such as the
/// output of the scan command. Throws ParseError naming the offending line.
std::vector<FitPoint> read_fit_points_csv(std::istream& in);

/// `key=value` lines: k_hat, stderr, loglik, multimodal, k_max.
void write_fit_report(std::ostream& out, const KEstimate& estimate);
std::map<std::string, std::string> read_key_values(std::istream& in);

}  // namespace mzinfo::formats
