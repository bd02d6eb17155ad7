#pragma once

#include <stdexcept>
#include <string>

namespace proxcatch {

// Degenerate or invalid planar input (collinear triangle, bad mesh, ...).
class GeometryError : public std::runtime_error {
public:
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside an operation's documented domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A statistic is undefined for the given data (e.g. no usable points).
class InferenceError : public std::runtime_error {
public:
    explicit InferenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace proxcatch
