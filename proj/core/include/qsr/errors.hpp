#pragma once

#include <stdexcept>

namespace qsr {

// Invalid experiment or device configuration (CLI exit code 2).
class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument to an individual operation (CLI exit code 2).
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Instance exceeds a hard resource bound (CLI exit code 3).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// bus_add precondition violation: a requested bus digit is already set.
class bus_occupied_error : public argument_error {
public:
    using argument_error::argument_error;
};

// bus_remove precondition violation: a requested bus digit is not set.
class bus_absent_error : public argument_error {
public:
    using argument_error::argument_error;
};

}  // namespace qsr
