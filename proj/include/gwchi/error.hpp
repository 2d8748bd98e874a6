#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gwchi {

// Domain errors: invalid parameters, model mismatches, unsupported operations.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Expression-text errors. position is a 0-based byte offset into the input.
class parse_error : public error {
public:
    parse_error(std::size_t position, const std::string& expected, const std::string& found)
        : error("parse error at position " + std::to_string(position) + ": expected " + expected +
                ", found " + found),
          position_(position),
          expected_(expected),
          found_(found) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

}  // namespace gwchi
