#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text input (digraph/graph files, component spec strings).
class ParseError : public Error {
public:
    using Error::Error;
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class MissingArc : public Error {
public:
    using Error::Error;
};

class NotAComponent : public Error {
public:
    using Error::Error;
};

class NotPathsAndCycles : public Error {
public:
    NotPathsAndCycles(std::string what, std::vector<int> component)
        : Error(std::move(what)), component_(std::move(component)) {}

    /// Vertices of the offending component, ascending.
    const std::vector<int>& component() const noexcept { return component_; }

private:
    std::vector<int> component_;
};

class DegreeTooHigh : public Error {
public:
    using Error::Error;
};

class BadParameters : public Error {
public:
    using Error::Error;
};

class NotRealizable : public Error {
public:
    using Error::Error;
};

class NotBounded : public Error {
public:
    using Error::Error;
};

/// Raised when an operation needs an acyclic digraph with in/out-degree at most two.
class NotA22Digraph : public Error {
public:
    using Error::Error;
};

}  // namespace cce
