#pragma once

#include <string>
#include <vector>

#include "nscas/parser.hpp"

namespace nscas {

struct CheckReport {
    enum class Status { pass, fail, error };
    std::string id;
    Status status = Status::error;
    std::string details;  // human-readable derivation trace
    std::string machine;  // canonical rendering of the computed values

    bool passed() const { return status == Status::pass; }
    std::string status_str() const;
    std::string text() const;
    std::string json() const;
};

const std::vector<std::string>& check_ids();
CheckReport run_check(const std::string& id);  // throws UnknownCheck
std::vector<CheckReport> run_all();

// Closure depth for lemma6.closure; NSCAS_DEPTH overrides the default of 4.
int closure_depth();

// The constraint-module presets used by the lemma6 checks; exposed so tests
// can rerun and corrupt them.
struct NModulePreset {
    StateSpace space;
    StateWord x, y, z, h;
};
NModulePreset n_module_preset();

}  // namespace nscas
