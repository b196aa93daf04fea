#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace weylcheck {

// Enumeration was asked to go past a configured size cap.
class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(std::size_t bound, const std::string& what)
        : std::runtime_error(what + " (bound " + std::to_string(bound) + ")"), bound_(bound) {}
    std::size_t bound() const noexcept { return bound_; }

private:
    std::size_t bound_;
};

// A type that exists but is only served from the static table.
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotNormal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchBudgetExceeded : public std::runtime_error {
public:
    explicit SearchBudgetExceeded(std::uint64_t budget)
        : std::runtime_error("search budget of " + std::to_string(budget) + " nodes exhausted"),
          budget_(budget) {}
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t budget_;
};

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace weylcheck
