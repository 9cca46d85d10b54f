/**
 * @file error.hpp
 * @brief Exception types thrown by the logimg library
 */
#pragma once

#include <stdexcept>
#include <string>

namespace logimg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// File was readable but its content is malformed or truncated.
class CorruptInput : public Error {
public:
    explicit CorruptInput(const std::string& what) : Error("corrupt input: " + what) {}
};

class UnsupportedFormat : public Error {
public:
    explicit UnsupportedFormat(const std::string& what) : Error("unsupported format: " + what) {}
};

/// Algorithm B needs a non-zero mean color.
class ZeroMeanNorm : public Error {
public:
    ZeroMeanNorm() : Error("zero mean norm: algorithm B requires a non-zero mean color") {}
};

/// The two columns of the least-squares system are collinear.
class SingularSystem : public Error {
public:
    SingularSystem() : Error("singular system: normal equations are degenerate (constant image?)") {}
};

}  // namespace logimg
