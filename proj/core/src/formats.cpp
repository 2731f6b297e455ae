#include "mzinfo/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "mzinfo/errors.hpp"

namespace mzinfo::formats {

namespace {

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return fields;
}

double parse_double(const std::string& field, std::size_t line, const char* column) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size() || !std::isfinite(value)) {
    throw ParseError(std::string("bad number '") + field + "' in column " + column, line);
  }
  return value;
}

std::uint64_t parse_count(const std::string& field, std::size_t line, const char* column) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size()) {
    throw ParseError(std::string("bad count '") + field + "' in column " + column, line);
  }
  return value;
}

bool is_skippable(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t.front() == '#';
}

// Reads the first non-comment line as a header and returns its 1-based line number.
std::size_t read_header(std::istream& in, std::vector<std::string>& header) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (is_skippable(line)) continue;
    header = split_csv(line);
    return number;
  }
  throw ParseError("missing CSV header", number);
}

int column_index(const std::vector<std::string>& header, std::string_view name) {
  const auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

ClickRecord parse_click_row(const std::vector<std::string>& fields, std::size_t line) {
  if (fields.size() != 5) {
    throw ParseError("expected 5 fields, got " + std::to_string(fields.size()), line);
  }
  ClickRecord record{};
  record.trial_id = parse_count(fields[0], line, "trial_id");
  if (fields[1] == "open") {
    record.setup = SetupKind::OpenArms;
  } else if (fields[1] == "recombined") {
    record.setup = SetupKind::Recombined;
  } else {
    throw ParseError("unknown setup '" + fields[1] + "'", line);
  }
  record.x = parse_double(fields[2], line, "x");
  if (fields[3] == "1") {
    record.outcome = Detector::One;
  } else if (fields[3] == "2") {
    record.outcome = Detector::Two;
  } else {
    throw ParseError("outcome must be 1 or 2, got '" + fields[3] + "'", line);
  }
  if (fields[4] == "0" || fields[4].empty()) {
    record.delayed_choice = false;
  } else if (fields[4] == "1") {
    record.delayed_choice = true;
  } else {
    throw ParseError("choice flag must be 0 or 1, got '" + fields[4] + "'", line);
  }
  return record;
}

const std::vector<std::string> kClickHeader{"trial_id", "setup", "x", "outcome", "choice"};

}  // namespace

void write_manifest(std::ostream& out, const Manifest& manifest) {
  for (const auto& [key, value] : manifest) out << "# " << key << ": " << value << '\n';
}

std::string format_double(double value) {
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

void write_click_csv(std::ostream& out, const std::vector<ClickRecord>& records) {
  out << "trial_id,setup,x,outcome,choice\n";
  for (const ClickRecord& r : records) {
    out << r.trial_id << ',' << to_string(r.setup) << ',' << format_double(r.x) << ','
        << static_cast<int>(r.outcome) << ',' << (r.delayed_choice ? 1 : 0) << '\n';
  }
}

std::vector<ClickRecord> read_click_csv(std::istream& in) {
  std::vector<std::string> header;
  std::size_t number = read_header(in, header);
  if (header != kClickHeader) throw ParseError("not a click log header", number);

  std::vector<ClickRecord> records;
  std::string line;
  while (std::getline(in, line)) {
    ++number;
    if (is_skippable(line)) continue;
    records.push_back(parse_click_row(split_csv(line), number));
  }
  return records;
}

std::vector<FitPoint> read_fit_points_csv(std::istream& in) {
  std::vector<std::string> header;
  std::size_t number = read_header(in, header);

  std::vector<FitPoint> points;
  std::string line;
  if (header == kClickHeader) {
    // Aggregate Recombined clicks per distinct x, keeping first-seen order.
    while (std::getline(in, line)) {
      ++number;
      if (is_skippable(line)) continue;
      const ClickRecord r = parse_click_row(split_csv(line), number);
      if (r.setup != SetupKind::Recombined) continue;
      auto it = std::find_if(points.begin(), points.end(),
                             [&](const FitPoint& p) { return p.x == r.x; });
      if (it == points.end()) {
        points.push_back({r.x, 0, 0});
        it = points.end() - 1;
      }
      (r.outcome == Detector::One ? it->n1 : it->n2) += 1;
    }
    return points;
  }

  const int ix = column_index(header, "x");
  const int in1 = column_index(header, "n1");
  const int in2 = column_index(header, "n2");
  if (ix < 0 || in1 < 0 || in2 < 0) {
    throw ParseError("header needs x, n1 and n2 columns (or a click log header)", number);
  }
  while (std::getline(in, line)) {
    ++number;
    if (is_skippable(line)) continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != header.size()) {
      throw ParseError("expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       number);
    }
    points.push_back({parse_double(fields[ix], number, "x"), parse_count(fields[in1], number, "n1"),
                      parse_count(fields[in2], number, "n2")});
  }
  return points;
}

void write_fit_report(std::ostream& out, const KEstimate& estimate) {
  out << "k_hat=" << format_double(estimate.k_hat) << '\n'
      << "stderr=" << format_double(estimate.stderr_k) << '\n'
      << "loglik=" << format_double(estimate.log_likelihood) << '\n'
      << "multimodal=" << (estimate.multimodal ? 1 : 0) << '\n'
      << "k_max=" << format_double(estimate.k_max) << '\n';
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> values;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (is_skippable(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", number);
    values[trim(std::string_view(line).substr(0, eq))] = trim(std::string_view(line).substr(eq + 1));
  }
  return values;
}

}  // namespace mzinfo::formats
