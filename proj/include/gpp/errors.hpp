#ifndef GPP_ERRORS_HPP
#define GPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpp {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes:
// validation -> 2, capacity -> 3, mode -> 4, anything else -> 5.

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::string message, std::string json_path = {})
        : std::runtime_error(std::move(message)), path_(std::move(json_path)) {}

    // JSON pointer to the offending input element, empty when not applicable.
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an algorithm is forced onto an instance outside its
// precondition (e.g. the non-positive DP on a positive weight).
class ModeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gpp

#endif
