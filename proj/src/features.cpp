#include "crowdsense/features.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "crowdsense/session_io.hpp"

namespace crowdsense {

FeatureVector extract_features(const SensorSession& session) {
  if (session.samples.empty()) raise(ErrorKind::EmptySession, session.session_id);

  std::array<std::vector<double>, kChannelCount> channels;
  for (auto& c : channels) c.reserve(session.samples.size());
  for (const SensorSample& s : session.samples) {
    channels[0].push_back(s.ax);
    channels[1].push_back(s.ay);
    channels[2].push_back(s.az);
    if (s.gps) {
      channels[3].push_back(s.gps->lat);
      channels[4].push_back(s.gps->lon);
      channels[5].push_back(s.gps->speed);
    }
  }

  FeatureVector fv;
  fv.gps_missing = channels[3].empty();
  for (int c = 0; c < kChannelCount; ++c) {
    if (channels[static_cast<std::size_t>(c)].empty()) continue;  // zero-filled GPS block
    const auto stats = summarize(channels[static_cast<std::size_t>(c)]).as_array();
    for (int s = 0; s < kStatsPerChannel; ++s)
      fv.values[static_cast<std::size_t>(c * kStatsPerChannel + s)] = stats[static_cast<std::size_t>(s)];
  }
  return fv;
}

FeatureRow feature_row(const SensorSession& session) {
  FeatureRow row;
  row.session_id = session.session_id;
  if (session.label) row.label_class = class_token(*session.label);
  row.features = extract_features(session);
  return row;
}

namespace {

std::string feature_header() {
  std::string header = "session_id,label_class";
  for (int i = 0; i < kFeatureCount; ++i) {
    char cell[8];
    std::snprintf(cell, sizeof(cell), ",f%02d", i);
    header += cell;
  }
  header += ",gps_missing";
  return header;
}

}  // namespace

void write_feature_csv(std::ostream& out, std::span<const FeatureRow> rows) {
  out << feature_header() << '\n';
  for (const FeatureRow& row : rows) {
    out << row.session_id << ',' << row.label_class;
    for (double v : row.features.values) out << ',' << format_double(v);
    out << ',' << (row.features.gps_missing ? '1' : '0') << '\n';
  }
}

std::vector<FeatureRow> read_feature_csv(std::istream& in) {
  std::vector<FeatureRow> rows;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) return rows;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != feature_header())
    raise(ErrorKind::MalformedRecord, "line 1: unexpected feature csv header");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    FeatureRow row;
    std::size_t start = 0;
    int column = 0;
    const int n_columns = 2 + kFeatureCount + 1;
    while (column < n_columns) {
      const std::size_t comma = line.find(',', start);
      const bool last = comma == std::string::npos;
      if (last != (column == n_columns - 1))
        raise(ErrorKind::MalformedRecord,
              "line " + std::to_string(line_no) + ": expected " + std::to_string(n_columns) +
                  " columns");
      const std::string cell = line.substr(start, last ? std::string::npos : comma - start);
      if (column == 0) {
        row.session_id = cell;
      } else if (column == 1) {
        row.label_class = cell;
        if (!cell.empty() && !parse_class_token(cell))
          raise(ErrorKind::UnknownLabelToken,
                "line " + std::to_string(line_no) + ": '" + cell + "'");
      } else if (column < 2 + kFeatureCount) {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
        if (ec != std::errc() || ptr != cell.data() + cell.size())
          raise(ErrorKind::MalformedRecord,
                "line " + std::to_string(line_no) + ": bad number '" + cell + "'");
        row.features.values[static_cast<std::size_t>(column - 2)] = value;
      } else {
        if (cell != "0" && cell != "1")
          raise(ErrorKind::MalformedRecord,
                "line " + std::to_string(line_no) + ": gps_missing must be 0 or 1");
        row.features.gps_missing = cell == "1";
      }
      start = last ? line.size() : comma + 1;
      ++column;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_feature_csv_file(const std::string& path, std::span<const FeatureRow> rows) {
  std::ofstream out(path);
  if (!out) raise(ErrorKind::IoError, "cannot write " + path);
  write_feature_csv(out, rows);
}

std::vector<FeatureRow> read_feature_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::IoError, "cannot open " + path);
  return read_feature_csv(in);
}

}  // namespace crowdsense
