#include "circfn/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace circfn {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex(Cplx z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string to_json(const Report& r) {
    nlohmann::json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["config"] = r.config;
    j["results"] = r.results;
    j["max_residual"] = r.max_residual;
    j["pass"] = r.pass;
    if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
    return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    r.schema = j.at("schema").get<int>();
    r.command = j.at("command").get<std::string>();
    r.config = j.at("config");
    r.results = j.at("results");
    r.max_residual = j.at("max_residual").get<double>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("timestamp")) r.timestamp = j.at("timestamp").get<std::string>();
    return r;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string value_to_field(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number()) return format_double(v.get<double>());
    return v.dump();
}

nlohmann::json field_to_value(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    if (!s.empty()) {
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (end == s.c_str() + s.size()) return v;
    }
    return s;
}

} // namespace

std::string to_csv(const Report& r) {
    std::ostringstream out;
    out << "schema," << r.schema << "\n";
    out << "command," << csv_escape(r.command) << "\n";
    for (auto it = r.config.begin(); it != r.config.end(); ++it)
        out << "config," << csv_escape(it.key()) << "," << csv_escape(value_to_field(it.value()))
            << "\n";

    // Column set = sorted union of row keys (rows normally share one schema).
    std::set<std::string> columns;
    for (const auto& row : r.results)
        for (auto it = row.begin(); it != row.end(); ++it) columns.insert(it.key());
    if (!columns.empty()) {
        out << "columns";
        for (const auto& c : columns) out << "," << csv_escape(c);
        out << "\n";
        for (const auto& row : r.results) {
            out << "row";
            for (const auto& c : columns)
                out << "," << (row.contains(c) ? csv_escape(value_to_field(row.at(c))) : "");
            out << "\n";
        }
    }
    out << "max_residual," << format_double(r.max_residual) << "\n";
    out << "pass," << (r.pass ? "true" : "false") << "\n";
    if (!r.timestamp.empty()) out << "timestamp," << csv_escape(r.timestamp) << "\n";
    return out.str();
}

Report report_from_csv(const std::string& text) {
    Report r;
    std::vector<std::string> columns;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::vector<std::string> f = csv_split(line);
        const std::string& tag = f[0];
        if (tag == "schema" && f.size() == 2) {
            r.schema = std::atoi(f[1].c_str());
        } else if (tag == "command" && f.size() == 2) {
            r.command = f[1];
        } else if (tag == "config" && f.size() == 3) {
            r.config[f[1]] = field_to_value(f[2]);
        } else if (tag == "columns") {
            columns.assign(f.begin() + 1, f.end());
        } else if (tag == "row") {
            nlohmann::json row = nlohmann::json::object();
            for (std::size_t i = 0; i + 1 < f.size() && i < columns.size(); ++i)
                row[columns[i]] = field_to_value(f[i + 1]);
            r.results.push_back(std::move(row));
        } else if (tag == "max_residual" && f.size() == 2) {
            r.max_residual = std::strtod(f[1].c_str(), nullptr);
        } else if (tag == "pass" && f.size() == 2) {
            r.pass = (f[1] == "true");
        } else if (tag == "timestamp" && f.size() == 2) {
            r.timestamp = f[1];
        } else {
            throw std::invalid_argument("report_from_csv: malformed line '" + line + "'");
        }
    }
    return r;
}

} // namespace circfn
