#pragma once

#include <string>

#include <json.hpp>

#include "circfn/types.hpp"

namespace circfn {

/// Machine-readable run report; the one output format of the CLI. The JSON
/// form is versioned through "schema". The CSV form is a flat record list
/// that parses back to an equal report.
struct Report {
    int schema = 1;
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::array();
    double max_residual = 0.0;
    bool pass = true;
    std::string timestamp; ///< empty = omitted (deterministic mode)

    bool operator==(const Report&) const = default;
};

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
Report report_from_json(const std::string& text);
Report report_from_csv(const std::string& text);

/// "%.17g" -- exact double round trip.
std::string format_double(double v);

/// "a+bi" / "a-bi", locale-free.
std::string format_complex(Cplx z);

} // namespace circfn
