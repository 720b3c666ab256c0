#pragma once

#include <stdexcept>
#include <string>

namespace higgsdt {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation contract (bad twist range, backend/depth mismatch, ...).
struct precondition_error : error {
    explicit precondition_error(const std::string& msg) : error(msg) {}
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& msg) : error(msg) {}
};

// A substitution or evaluation landed exactly on a pole.
struct pole_error : error {
    explicit pole_error(const std::string& msg) : error(msg) {}
};

// Tower arithmetic ran out of levels; the truncation order must be raised.
struct depth_error : error {
    explicit depth_error(const std::string& msg) : error(msg) {}
};

struct budget_error : error {
    explicit budget_error(const std::string& msg) : error(msg) {}
};

// An exact identity or cross-check failed.
struct check_error : error {
    explicit check_error(const std::string& msg) : error(msg) {}
};

}  // namespace higgsdt
