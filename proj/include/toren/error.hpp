#pragma once

#include <stdexcept>
#include <string>

namespace toren {

/// Error thrown by every operation in this library on domain violations
/// (division by zero, cap exceeded, malformed input files, ...).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toren
