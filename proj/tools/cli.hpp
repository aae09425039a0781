#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace mfib::cli {

using Json = nlohmann::ordered_json;

// One command's output. Approximate numbers are {"value", "tol"} pairs of
// decimal strings; exact integers stay integers.
struct Record {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> notes;

    Json to_json() const;
    static Record from_json(const Json& j);
    friend bool operator==(const Record&, const Record&) = default;
};

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInconclusive = 3 };

// Parses argv (without the program name), runs the command and writes the
// rendered record to out. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mfib::cli
