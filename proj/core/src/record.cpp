#include "hardy/record.hpp"

#include <cstdio>

#include <json.hpp>

#include "hardy/errors.hpp"

namespace hardy {

std::string_view to_string(Status s)
{
    switch (s) {
        case Status::ok: return "ok";
        case Status::bound_violation: return "bound_violation";
        case Status::no_convergence: return "no_convergence";
    }
    return "ok";
}

Status status_from_string(std::string_view s)
{
    if (s == "ok") return Status::ok;
    if (s == "bound_violation") return Status::bound_violation;
    if (s == "no_convergence") return Status::no_convergence;
    throw DomainError("unknown status string");
}

std::string format_double(double v)
{
    if (v == 0.0) return "0";  // canonicalize -0, which JSON parsers read as integer 0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_json_string(std::string& out, std::string_view s)
{
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

} // namespace

std::string to_json(const OutputRecord& rec)
{
    std::string out = "{\"command\":";
    append_json_string(out, rec.command);
    out += ",\"inputs\":{";
    bool first = true;
    for (const auto& [key, value] : rec.inputs) {
        if (!first) out += ',';
        first = false;
        append_json_string(out, key);
        out += ':';
        if (std::holds_alternative<double>(value))
            out += format_double(std::get<double>(value));
        else if (std::holds_alternative<bool>(value))
            out += std::get<bool>(value) ? "true" : "false";
        else
            append_json_string(out, std::get<std::string>(value));
    }
    out += "},\"outputs\":{";
    first = true;
    for (const auto& [key, value] : rec.outputs) {
        if (!first) out += ',';
        first = false;
        append_json_string(out, key);
        out += ':';
        out += format_double(value);
    }
    out += "},\"status\":";
    append_json_string(out, to_string(rec.status));
    out += '}';
    return out;
}

OutputRecord record_from_json(const std::string& text)
{
    const auto j = nlohmann::ordered_json::parse(text);
    OutputRecord rec;
    rec.command = j.at("command").get<std::string>();
    for (const auto& [key, value] : j.at("inputs").items()) {
        if (value.is_boolean())
            rec.add_input(key, value.get<bool>());
        else if (value.is_number())
            rec.add_input(key, value.get<double>());
        else
            rec.add_input(key, value.get<std::string>());
    }
    for (const auto& [key, value] : j.at("outputs").items())
        rec.add_output(key, value.get<double>());
    rec.status = status_from_string(j.at("status").get<std::string>());
    return rec;
}

std::string to_csv(const OutputRecord& rec)
{
    std::string header = "command";
    std::string row = rec.command;
    for (const auto& [key, value] : rec.inputs) {
        header += ',';
        header += key;
        row += ',';
        if (std::holds_alternative<double>(value))
            row += format_double(std::get<double>(value));
        else if (std::holds_alternative<bool>(value))
            row += std::get<bool>(value) ? "true" : "false";
        else
            row += std::get<std::string>(value);
    }
    for (const auto& [key, value] : rec.outputs) {
        header += ',';
        header += key;
        row += ',';
        row += format_double(value);
    }
    header += ",status\n";
    row += ',';
    row += to_string(rec.status);
    row += '\n';
    return header + row;
}

} // namespace hardy
