#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace orbi {

// Domain error with a machine-readable code and an optional witness
// (e.g. the violating triple of a failed associativity check).
// The CLI maps these to exit code 1 and {"error": code, "witness": ...}.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, nlohmann::json witness = nullptr)
        : std::runtime_error(witness.is_null() ? code
                                               : code + ": " + witness.dump()),
          code_(std::move(code)), witness_(std::move(witness)) {}

    const std::string &code() const { return code_; }
    const nlohmann::json &witness() const { return witness_; }

private:
    std::string code_;
    nlohmann::json witness_;
};

} // namespace orbi
