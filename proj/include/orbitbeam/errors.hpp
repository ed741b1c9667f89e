// Copyright (c) 2026 The Orbitbeam Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitbeam {

/// Invalid argument to an operation (precondition violated).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Configuration cannot be resolved into a runnable plan.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
    ConfigError(const std::string& what, int line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = -1;
};

/// A numerical procedure failed to converge or lost validity.
/// Carries the partial values available at the point of failure
/// (e.g. a truncated series sum, or the two disagreeing refinements).
class NumericFailure : public std::runtime_error {
public:
    NumericFailure(const std::string& what, std::vector<double> partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const std::vector<double>& partial_values() const { return partial_; }

private:
    std::vector<double> partial_;
};

}  // namespace orbitbeam
