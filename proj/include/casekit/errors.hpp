#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace casekit {

/// Bad usage or a malformed configuration value. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Problems with input data (corpus, lexicon, index, model files). CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Training produced a non-finite loss. CLI exit code 3.
class DivergenceError : public std::runtime_error {
public:
    explicit DivergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A stratum does not hold enough distinct groups to fill its batch slots.
class InsufficientGroupsError : public DataError {
public:
    InsufficientGroupsError(std::string stratum_name, std::size_t required_count,
                            std::size_t available_count)
        : DataError("insufficient " + stratum_name + " groups: need " +
                    std::to_string(required_count) + ", have " +
                    std::to_string(available_count)),
          stratum(std::move(stratum_name)),
          required(required_count),
          available(available_count) {}

    std::string stratum;
    std::size_t required;
    std::size_t available;
};

/// Persisted artifact was written by an incompatible format version.
class VersionMismatchError : public DataError {
public:
    using DataError::DataError;
};

/// Persisted index was built against a different lexicon file.
class LexiconHashMismatchError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace casekit
