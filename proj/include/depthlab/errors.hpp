#pragma once

#include <stdexcept>
#include <string>

namespace depthlab {

/// Malformed or inconsistent input (parse failures, dimension mismatches).
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A subgroup argument is not contained in the group it was paired with.
class containment_error : public input_error {
public:
    using input_error::input_error;
};

/// A configured size bound (element enumeration, class count) was exceeded.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace depthlab
