#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "crowdsense/types.hpp"

namespace crowdsense {

enum class SessionFormat { JsonLines, Csv };

/// Parses labeled or unlabeled sessions. Input order is preserved and
/// out-of-order timestamps are an error, never silently repaired.
std::vector<SensorSession> parse_sessions(std::istream& input, SessionFormat format);
std::vector<SensorSession> parse_sessions(const std::string& text, SessionFormat format);

void write_sessions(std::ostream& out, std::span<const SensorSession> sessions,
                    SessionFormat format);
std::string sessions_to_string(std::span<const SensorSession> sessions, SessionFormat format);

std::vector<SensorSession> read_sessions_file(const std::string& path, SessionFormat format);
void write_sessions_file(const std::string& path, std::span<const SensorSession> sessions,
                         SessionFormat format);

/// Shortest decimal text that parses back to the identical double.
std::string format_double(double value);

}  // namespace crowdsense
