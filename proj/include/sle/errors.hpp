#pragma once

#include <stdexcept>
#include <string>

namespace sle {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// search space estimate exceeded the configured cap
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TimeoutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CorruptCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sle
