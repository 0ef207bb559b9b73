#ifndef PFLAB_ERRORS_HPP
#define PFLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pflab {

// Bad user input: malformed config files, invalid parameter combinations.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds configured resource caps (state counts etc).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

// Angular resolution of the grid is insufficient for the requested object.
class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exponent clusters cannot be separated; carries the cluster table as text.
class GapError : public std::runtime_error {
public:
    explicit GapError(const std::string& msg) : std::runtime_error(msg) {}
};

// Ill-posed numerical request (log-fit of nonpositive data, degenerate Gram, ...).
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace pflab

#endif
