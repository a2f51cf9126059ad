#ifndef BRADFORD_ERRORS_HPP
#define BRADFORD_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace bradford {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad configuration or command-line usage. CLI exit code 1.
class UsageError : public Error {
public:
    using Error::Error;
};

// Malformed input bytes. Carries the byte offset into the stream and,
// for line-oriented formats, the 1-based line number. CLI exit code 2.
class ParseError : public Error {
public:
    ParseError(const std::string &what, std::size_t byte_offset,
               std::optional<std::size_t> line = std::nullopt)
        : Error(what), byte_offset_(byte_offset), line_(line) {}

    std::size_t byte_offset() const { return byte_offset_; }
    std::optional<std::size_t> line() const { return line_; }

private:
    std::size_t byte_offset_;
    std::optional<std::size_t> line_;
};

// Structurally valid input that violates a contract (duplicate ids,
// empty rankings, impossible zone counts...). CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

// Significance test asked for when every difference is zero.
class NoInformationError : public DataError {
public:
    using DataError::DataError;
};

// Paired t-test on differences with zero sample variance.
class DegenerateVarianceError : public DataError {
public:
    using DataError::DataError;
};

// Too few observations for the requested statistic.
class InsufficientDataError : public DataError {
public:
    using DataError::DataError;
};

// improvement_pct with a zero reference precision.
class UndefinedImprovementError : public DataError {
public:
    using DataError::DataError;
};

} // namespace bradford

#endif
