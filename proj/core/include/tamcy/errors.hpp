#pragma once

#include <stdexcept>
#include <string>

namespace tamcy {

// Base class for everything thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated a documented precondition (size limits, wrong mode, ...).
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& what) : error(what) {}
};

// Input data fails structural validation (order axioms, closure, crossing edges, ...).
class validation_error : public error {
public:
    explicit validation_error(const std::string& what) : error(what) {}
};

// Malformed serialized input (JSON shape, unknown fields, bad labels).
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

} // namespace tamcy
