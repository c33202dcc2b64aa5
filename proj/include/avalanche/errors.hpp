#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace avalanche {

// Raised when an exhaustive enumeration would visit more stable states than
// the caller allowed. Carries both numbers so callers can report the bound.
class LimitExceeded : public std::runtime_error {
public:
    LimitExceeded(std::uint64_t states, std::uint64_t limit)
        : std::runtime_error("stable state space has " + std::to_string(states) +
                             (states > limit ? "" : "+") + " states, exceeding the limit of " +
                             std::to_string(limit)),
          states_(states),
          limit_(limit) {}

    std::uint64_t states() const { return states_; }
    std::uint64_t limit() const { return limit_; }

private:
    std::uint64_t states_;
    std::uint64_t limit_;
};

// Raised by tree reconstruction when the input polynomial cannot be the
// avalanche polynomial of any labeled rooted tree. Names the component that
// failed so callers can pinpoint the offending part of the input.
class InvalidTreePolynomial : public std::runtime_error {
public:
    InvalidTreePolynomial(const std::string& reason, std::string component_text)
        : std::runtime_error("not a tree avalanche polynomial: " + reason + " in component " +
                             component_text),
          component_(std::move(component_text)) {}

    const std::string& component() const { return component_; }

private:
    std::string component_;
};

}  // namespace avalanche
