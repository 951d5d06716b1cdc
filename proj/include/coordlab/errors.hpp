#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace coordlab {

// Conditioning on (or slicing at) an event of probability zero.
class ZeroProbabilityError : public std::runtime_error {
public:
    explicit ZeroProbabilityError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed the configured budget.
class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(const std::string& what, double enumeration_count)
        : std::runtime_error(what), enumeration_count(enumeration_count) {}
    double enumeration_count;
};

// A game strategy read forbidden history or emitted an out-of-alphabet action.
class StrategyViolation : public std::runtime_error {
public:
    StrategyViolation(const std::string& what, std::int64_t round)
        : std::runtime_error(what), round(round) {}
    std::int64_t round;
};

// Malformed instance/report file.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coordlab
