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

#include "anomalab/report.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "anomalab/version.hpp"
#include "json.hpp"

namespace anomalab::report {

namespace {

using invariants::format_value;
using invariants::Value;

const Value *find_parameter(const ExperimentResult &r, const std::string &key) {
    for (const auto &[k, v] : r.parameters) {
        if (k == key) {
            return &v;
        }
    }
    return nullptr;
}

std::string other_parameters(const ExperimentResult &r) {
    std::string out;
    for (const auto &[k, v] : r.parameters) {
        if (k == "lx" || k == "ly" || k == "lz") {
            continue;
        }
        if (!out.empty()) {
            out += ';';
        }
        out += k + "=" + format_value(v);
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json to_json(const Value &v) {
    if (std::holds_alternative<std::int64_t>(v)) {
        return std::get<std::int64_t>(v);
    }
    if (!std::isfinite(std::get<double>(v))) {
        return nullptr;
    }
    // keep the fixed 12-digit rendering so JSON and CSV agree byte for byte on the value
    return nlohmann::ordered_json::parse(format_value(v));
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open report file '" + path + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing report file '" + path + "'");
    }
}

void require_results(const std::vector<ExperimentResult> &results) {
    if (results.empty()) {
        throw std::invalid_argument("report needs at least one result");
    }
}

}  // namespace

std::string to_csv(const std::vector<ExperimentResult> &results) {
    std::string out = "experiment,lx,ly,lz,parameters,quantity,value,bound,relation,pass,version\n";
    for (const auto &r : results) {
        out += csv_field(r.experiment);
        for (const char *key : {"lx", "ly", "lz"}) {
            out += ',';
            if (const Value *v = find_parameter(r, key)) {
                out += format_value(*v);
            }
        }
        out += ',' + csv_field(other_parameters(r));
        out += ',' + csv_field(r.quantity);
        out += ',' + format_value(r.value);
        out += ',' + format_value(r.bound);
        out += ',' + csv_field(invariants::to_string(r.relation));
        out += std::string(",") + (r.pass() ? "true" : "false");
        out += std::string(",") + kVersion + "\n";
    }
    return out;
}

std::string to_jsonl(const std::vector<ExperimentResult> &results) {
    std::string out;
    for (const auto &r : results) {
        nlohmann::ordered_json j;
        j["experiment"] = r.experiment;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto &[k, v] : r.parameters) {
            params[k] = to_json(v);
        }
        j["parameters"] = params;
        j["quantity"] = r.quantity;
        j["value"] = to_json(r.value);
        j["bound"] = to_json(r.bound);
        j["relation"] = invariants::to_string(r.relation);
        j["pass"] = r.pass();
        j["version"] = kVersion;
        out += j.dump() + "\n";
    }
    return out;
}

void emit_report(const std::vector<ExperimentResult> &results, const std::string &path) {
    require_results(results);
    write_file(path, to_csv(results));
}

void emit_jsonl(const std::vector<ExperimentResult> &results, const std::string &path) {
    require_results(results);
    write_file(path, to_jsonl(results));
}

}  // namespace anomalab::report
