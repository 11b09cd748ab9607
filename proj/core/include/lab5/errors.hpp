#pragma once

#include <stdexcept>
#include <string>

namespace lab5 {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid argument or unsatisfied precondition (CLI exit code 2).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// A bounded search exhausted its scan budget (CLI exit code 3).
class cap_exceeded_error : public error {
public:
    explicit cap_exceeded_error(const std::string& what) : error(what) {}
};

// A form that must be non-degenerate has an eigenvalue inside the
// numerical tolerance band; we refuse to guess a sign.
class degenerate_form_error : public error {
public:
    explicit degenerate_form_error(const std::string& what) : error(what) {}
};

} // namespace lab5
