#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tto {

// Every error carries a stable code string ("NotPrime", "DomainTooLarge", ...)
// that the CLI maps to exit codes and tests match against.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A construction hypothesis that did not hold; carries the hypothesis name.
class HypothesisFailed : public Error {
public:
    HypothesisFailed(std::string hypothesis, const std::string& msg = "")
        : Error("HypothesisFailed", msg.empty() ? hypothesis : hypothesis + ": " + msg),
          hypothesis_(std::move(hypothesis)) {}

    const std::string& hypothesis() const noexcept { return hypothesis_; }

private:
    std::string hypothesis_;
};

[[noreturn]] inline void fail(const char* code, const std::string& msg) {
    throw Error(code, msg);
}

}  // namespace tto
