#pragma once

#include "fglh/workspace.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace fglh {

/// Bad command, unknown name or unreadable input: exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

struct RunOptions {
    std::optional<int> degree; ///< overrides the workspace setting
    bool integrality = false;
    int n = 2;                 ///< exponent for `power`
    bool timing = false;
};

struct ReportSection {
    std::string command;
    std::string target;
    std::vector<CheckResult> checks;
    nlohmann::json values = nlohmann::json::object();
    double millis = 0;

    Verdict verdict() const;
};

struct Report {
    int degree = 0;
    std::string workspace_hash;
    std::vector<ReportSection> sections;

    Verdict verdict() const;
    int exit_code() const { return verdict() == Verdict::Fail ? 1 : 0; }
};

/// SHA-256 of the canonical workspace text.
std::string workspace_hash(const Workspace& ws);

/// The commands that take a section name, in `report --all` order.
const std::vector<std::string>& fgl_commands();

/// Runs one command. `target` names a hopf or fgl section; `report --all` takes
/// no target and runs every command on every section in file order.
Report run(const std::string& command, const std::string& target, const Workspace& ws, const RunOptions& opts);

/// Canonical serialization: sorted keys, rationals as "p/q" strings, timing only on request.
std::string to_json(const Report& r, bool timing = false);
std::string to_text(const Report& r, bool timing = false);

} // namespace fglh
