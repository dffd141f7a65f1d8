#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hardy {

enum class Status { ok, bound_violation, no_convergence };

std::string_view to_string(Status s);
Status status_from_string(std::string_view s);

// One machine-readable result of a CLI invocation. Serialization is
// canonical: fixed key order (command, inputs, outputs, status), floats with
// 17 significant digits, so parse + re-serialize is byte-identical.
struct OutputRecord {
    using InputValue = std::variant<double, std::string, bool>;

    std::string command;
    std::vector<std::pair<std::string, InputValue>> inputs;
    std::vector<std::pair<std::string, double>> outputs;
    Status status = Status::ok;

    void add_input(std::string key, double v) { inputs.emplace_back(std::move(key), v); }
    void add_input(std::string key, std::string v) { inputs.emplace_back(std::move(key), std::move(v)); }
    void add_input(std::string key, bool v) { inputs.emplace_back(std::move(key), v); }
    void add_output(std::string key, double v) { outputs.emplace_back(std::move(key), v); }
};

// %.17g, enough digits to round-trip any double exactly.
std::string format_double(double v);

std::string to_json(const OutputRecord& rec);

// Rebuilds a record from its JSON form (inverse of to_json).
OutputRecord record_from_json(const std::string& text);

// Two-line CSV: header of column names, then one data row.
std::string to_csv(const OutputRecord& rec);

} // namespace hardy
