#pragma once

#include <stdexcept>
#include <string>

namespace roadcov {

/// Placing vehicles requires at least one road chord of positive length.
class RoadsEmptyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Association requires a non-empty station list.
class NoStationsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Metrics require at least one (covered) sample.
class NoSamplesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A channel model was evaluated outside its validity range.
class ModelDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Configuration text failed to parse or validate. `line` is 1-based,
/// 0 when the error is not tied to a specific line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

} // namespace roadcov
