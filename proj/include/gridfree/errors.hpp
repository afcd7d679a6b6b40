#pragma once

#include <stdexcept>
#include <string>

namespace gridfree {

/// An enumeration or verification guard was exceeded (input too large for
/// the requested exact method).
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Brute-force counting requested over the brute guard size.
struct BruteGuardExceeded : GuardExceeded {
    explicit BruteGuardExceeded(const std::string& what) : GuardExceeded(what) {}
};

/// q is not a prime power.
struct NotPrimePower : std::invalid_argument {
    explicit NotPrimePower(const std::string& what) : std::invalid_argument(what) {}
};

/// No prime power q with q^2+q+1 <= n exists.
struct NoPrimePowerInRange : std::invalid_argument {
    explicit NoPrimePowerInRange(const std::string& what) : std::invalid_argument(what) {}
};

/// Text input could not be parsed; line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line_no)
        : std::runtime_error(what), line(line_no) {}
    int line;
};

}  // namespace gridfree
