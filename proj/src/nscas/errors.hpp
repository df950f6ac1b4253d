#pragma once

#include <stdexcept>
#include <string>

namespace nscas {

struct DivisionByZero : std::runtime_error {
    DivisionByZero() : std::runtime_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct SyntaxError : std::runtime_error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct IndexParityError : std::runtime_error {
    explicit IndexParityError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownCheck : std::runtime_error {
    explicit UnknownCheck(const std::string& id) : std::runtime_error("unknown check: " + id) {}
};

// A rule table failed to define a module action; carries the offending witness.
struct InconsistentTable : std::runtime_error {
    explicit InconsistentTable(const std::string& witness)
        : std::runtime_error("inconsistent rule table: " + witness) {}
};

struct RepresentationFailure : std::runtime_error {
    explicit RepresentationFailure(const std::string& witness)
        : std::runtime_error("representation property failed: " + witness) {}
};

// Internal invariant: a produced state word has the wrong L0 weight.
struct WeightError : std::runtime_error {
    explicit WeightError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nscas
