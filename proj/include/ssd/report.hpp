// Copyright 2026 The ssd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SSD_REPORT_HPP_
#define SSD_REPORT_HPP_

#include <iosfwd>

#include "json.hpp"
#include "ssd/bounds.hpp"
#include "ssd/criteria.hpp"

namespace ssd {

// {"num": p, "den": q}; integers too large for int64 are emitted as strings.
nlohmann::ordered_json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json bounds_json(const BoundReport& b);

// The evaluation report: criteria, histogram, bounds and the theorem-1 flag.
nlohmann::ordered_json report_json(const CriteriaReport& c,
                                   const BoundReport& b);
// Same keys with "bounds" and "achieves_theorem1" null (unbalanced input).
nlohmann::ordered_json report_json(const CriteriaReport& c);

// Human-readable summary in "value: frequency" layout. `b` may be null.
void print_report(std::ostream& out, const CriteriaReport& c,
                  const BoundReport* b);

}  // namespace ssd

#endif  // SSD_REPORT_HPP_
