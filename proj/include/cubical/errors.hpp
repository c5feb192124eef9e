#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cubical {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };
struct NotInBoxCategory : Error { using Error::Error; };
struct GuardExceeded : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct LoopDetected : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };
struct ArithmeticOverflow : Error { using Error::Error; };

// Setting CUBICAL_NO_GUARDS to anything but "0" lifts the size guards.
inline bool guards_disabled() {
    const char* v = std::getenv("CUBICAL_NO_GUARDS");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
}

inline void check_guard(bool ok, const std::string& what) {
    if (!ok && !guards_disabled()) throw GuardExceeded(what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw PreconditionViolation(what);
}

}  // namespace cubical
