// Copyright 2026 The xyzhea Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "xyzhea/csv.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "xyzhea/error.hpp"

namespace xyzhea {

namespace {

std::vector<std::string> split(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

class RowReader {
  public:
    RowReader(std::istream &is, std::string_view header, std::size_t columns)
        : is_(is), columns_(columns) {
        std::string first;
        if (!std::getline(is_, first) || strip(first) != header) {
            throw ParseError("expected CSV header '" + std::string(header) + "'");
        }
    }

    bool next() {
        std::string line;
        while (std::getline(is_, line)) {
            ++line_no_;
            line = strip(line);
            if (line.empty()) {
                continue;
            }
            fields_ = split(line);
            if (fields_.size() != columns_) {
                fail("expected " + std::to_string(columns_) + " fields");
            }
            return true;
        }
        return false;
    }

    [[nodiscard]] const std::string &text(std::size_t i) const { return fields_[i]; }

    [[nodiscard]] double real(std::size_t i) const {
        try {
            std::size_t used = 0;
            const double v = std::stod(fields_[i], &used);
            if (used == fields_[i].size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        fail("field " + std::to_string(i + 1) + " is not a number");
    }

    [[nodiscard]] int integer(std::size_t i) const {
        try {
            std::size_t used = 0;
            const int v = std::stoi(fields_[i], &used);
            if (used == fields_[i].size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        fail("field " + std::to_string(i + 1) + " is not an integer");
    }

    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError("CSV row " + std::to_string(line_no_) + ": " + what);
    }

  private:
    static std::string strip(std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
            s.pop_back();
        }
        return s;
    }

    std::istream &is_;
    std::size_t columns_;
    std::size_t line_no_ = 0;
    std::vector<std::string> fields_;
};

} // namespace

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_convergence_csv(std::ostream &os, const std::vector<ConvergenceRow> &rows) {
    os << kConvergenceHeader << '\n';
    for (const auto &r : rows) {
        os << r.layer << ',' << format_real(r.energy) << ',' << format_real(r.error_vs_exact) << ','
           << (r.per_site_energy ? format_real(*r.per_site_energy) : "") << ',' << r.n_params << ','
           << r.n_two_qubit << ',' << r.asap_depth << ',' << r.iterations << ','
           << format_real(r.wall_time_s) << '\n';
    }
}

void write_variance_csv(std::ostream &os, const std::vector<VarianceRow> &rows) {
    os << kVarianceHeader << '\n';
    for (const auto &r : rows) {
        os << ansatz_name(r.kind) << ',' << r.n_qubits << ',' << r.layers << ',' << r.parameter_id
           << ',' << variance_mode_name(r.mode) << ',' << r.sample_count << ','
           << format_real(r.variance) << '\n';
    }
}

void write_size_consistency_csv(std::ostream &os, const std::vector<SizeConsistencyRow> &rows) {
    os << kSizeConsistencyHeader << '\n';
    for (const auto &r : rows) {
        os << ansatz_name(r.kind) << ',' << r.layers << ',' << format_real(r.e_sub) << ','
           << format_real(r.e_composite) << ',' << format_real(r.infidelity_sub) << ','
           << format_real(r.infidelity_composite) << '\n';
    }
}

std::vector<ConvergenceRow> read_convergence_csv(std::istream &is) {
    RowReader reader(is, kConvergenceHeader, 9);
    std::vector<ConvergenceRow> rows;
    while (reader.next()) {
        ConvergenceRow r;
        r.layer = reader.integer(0);
        r.energy = reader.real(1);
        r.error_vs_exact = reader.real(2);
        if (!reader.text(3).empty()) {
            r.per_site_energy = reader.real(3);
        }
        r.n_params = reader.integer(4);
        r.n_two_qubit = reader.integer(5);
        r.asap_depth = reader.integer(6);
        r.iterations = reader.integer(7);
        r.wall_time_s = reader.real(8);
        rows.push_back(r);
    }
    return rows;
}

std::vector<VarianceRow> read_variance_csv(std::istream &is) {
    RowReader reader(is, kVarianceHeader, 7);
    std::vector<VarianceRow> rows;
    while (reader.next()) {
        VarianceRow r;
        try {
            r.kind = parse_ansatz_kind(reader.text(0));
            r.mode = parse_variance_mode(reader.text(4));
        } catch (const InputError &e) {
            reader.fail(e.what());
        }
        r.n_qubits = reader.integer(1);
        r.layers = reader.integer(2);
        r.parameter_id = reader.text(3);
        r.sample_count = reader.integer(5);
        r.variance = reader.real(6);
        rows.push_back(r);
    }
    return rows;
}

std::vector<SizeConsistencyRow> read_size_consistency_csv(std::istream &is) {
    RowReader reader(is, kSizeConsistencyHeader, 6);
    std::vector<SizeConsistencyRow> rows;
    while (reader.next()) {
        SizeConsistencyRow r;
        try {
            r.kind = parse_ansatz_kind(reader.text(0));
        } catch (const InputError &e) {
            reader.fail(e.what());
        }
        r.layers = reader.integer(1);
        r.e_sub = reader.real(2);
        r.e_composite = reader.real(3);
        r.infidelity_sub = reader.real(4);
        r.infidelity_composite = reader.real(5);
        rows.push_back(r);
    }
    return rows;
}

std::filesystem::path sidecar_path(const std::filesystem::path &output) {
    return std::filesystem::path(output.string() + ".meta.json");
}

void write_sidecar(const std::filesystem::path &output, nlohmann::json metadata) {
    metadata["version"] = std::string(kVersion);
    const auto path = sidecar_path(output);
    std::ofstream f(path);
    if (!f) {
        throw InputError("cannot write " + path.string());
    }
    f << metadata.dump(2) << '\n';
}

} // namespace xyzhea
