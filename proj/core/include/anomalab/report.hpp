// Copyright 2026 The anomalab Authors
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

#ifndef ANOMALAB_REPORT_HPP
#define ANOMALAB_REPORT_HPP

#include <string>
#include <vector>

#include "anomalab/invariants.hpp"

namespace anomalab::report {

using invariants::ExperimentResult;

/// experiment,lx,ly,lz,parameters,quantity,value,bound,relation,pass,version
std::string to_csv(const std::vector<ExperimentResult> &results);
/// One JSON object per line with the same fields; parameters become an object.
std::string to_jsonl(const std::vector<ExperimentResult> &results);

/// Writes CSV to `path`. Throws on empty input or an unwritable path.
void emit_report(const std::vector<ExperimentResult> &results, const std::string &path);
void emit_jsonl(const std::vector<ExperimentResult> &results, const std::string &path);

}  // namespace anomalab::report

#endif
