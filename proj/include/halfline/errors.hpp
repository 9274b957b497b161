#pragma once
#include <stdexcept>
#include <string>
#include <utility>

namespace halfline {

// Domain errors carry a stable machine-readable name (printed by the CLI,
// matched in tests) plus a human-readable explanation.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& what) {
    throw DomainError(std::move(name), what);
}

namespace detail {
// For conditions the library itself guarantees: reaching one is a bug in
// this code, not bad input, hence logic_error rather than DomainError.
[[noreturn]] inline void internal_error(const std::string& what) {
    throw std::logic_error("internal invariant violated: " + what);
}
} // namespace detail

} // namespace halfline
