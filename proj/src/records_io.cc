// Copyright 2026 The coopeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopeq/records_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "coopeq/errors.hpp"

namespace coopeq {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double cents(const std::string& field, std::size_t line_no, const char* what) {
  long value = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end || value < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what +
                     " must be a nonnegative integer number of cents, got \"" +
                     field + "\"");
  }
  return static_cast<double>(value);
}

}  // namespace

std::vector<SubjectRecord> read_records(std::istream& in) {
  std::vector<SubjectRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    if (!header_seen) {
      if (text != kRecordsHeader) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected header \"" + kRecordsHeader + "\"");
      }
      header_seen = true;
      continue;
    }
    const auto fields = split(text);
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 4 fields, got " +
                       std::to_string(fields.size()));
    }
    SubjectRecord r;
    r.subject = fields[0];
    r.treatment = fields[1];
    r.ug_offer = cents(fields[2], line_no, "ug_offer");
    r.dg_donation = cents(fields[3], line_no, "dg_donation");
    out.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError("missing header line");
  return out;
}

std::vector<SubjectRecord> load_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_records(in);
}

void write_records(std::ostream& out, const std::vector<SubjectRecord>& records) {
  out << kRecordsHeader << '\n';
  for (const auto& r : records) {
    out << r.subject << ',' << r.treatment << ','
        << static_cast<long>(r.ug_offer) << ','
        << static_cast<long>(r.dg_donation) << '\n';
  }
}

}  // namespace coopeq
