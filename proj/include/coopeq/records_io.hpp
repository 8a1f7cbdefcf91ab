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

#ifndef COOPEQ_RECORDS_IO_HPP_
#define COOPEQ_RECORDS_IO_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "coopeq/stats.hpp"

namespace coopeq {

inline constexpr const char* kRecordsHeader =
    "subject,treatment,ug_offer,dg_donation";

// CSV with the header above, currency as nonnegative integer cents. Blank
// lines and lines starting with '#' are skipped. Throws ParseError with the
// offending line number.
std::vector<SubjectRecord> read_records(std::istream& in);
std::vector<SubjectRecord> load_records(const std::string& path);

void write_records(std::ostream& out, const std::vector<SubjectRecord>& records);

}  // namespace coopeq

#endif  // COOPEQ_RECORDS_IO_HPP_
