#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrowtips {

/// Base class for every error raised by the library.
class ArrowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A width or radius outside the domain of a formula (w <= 0, r < 0).
class DomainError : public ArrowError {
public:
    using ArrowError::ArrowError;
};

/// A render program that cannot be replayed.
class StructuralError : public ArrowError {
public:
    StructuralError(std::size_t op_index, const std::string& what);

    std::size_t op_index() const noexcept { return op_index_; }

private:
    std::size_t op_index_;
};

/// Name or reversal lookup failure against the tip registry.
class LookupError : public ArrowError {
public:
    LookupError(const std::string& what, std::vector<std::string> candidates = {});

    const std::vector<std::string>& candidates() const noexcept { return candidates_; }

private:
    std::vector<std::string> candidates_;
};

class InvalidPathError : public ArrowError {
public:
    using ArrowError::ArrowError;
};

class DegeneratePathError : public InvalidPathError {
public:
    using InvalidPathError::InvalidPathError;
};

class PathTooShortError : public InvalidPathError {
public:
    PathTooShortError(double required, double available);

    double required() const noexcept { return required_; }
    double available() const noexcept { return available_; }

private:
    double required_;
    double available_;
};

/// Arrow-spec string errors.
class SpecSyntaxError : public ArrowError {
public:
    using ArrowError::ArrowError;
};

class UnknownTipError : public SpecSyntaxError {
public:
    explicit UnknownTipError(std::string unmatched);

    /// The part of the spec that did not match any registered name.
    const std::string& unmatched() const noexcept { return unmatched_; }

private:
    std::string unmatched_;
};

class SequenceUnsupportedError : public SpecSyntaxError {
public:
    explicit SequenceUnsupportedError(const std::vector<std::string>& names);
};

}  // namespace arrowtips
