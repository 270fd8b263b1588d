#pragma once

#include <stdexcept>
#include <string>

namespace clipguard {

// Base of all clipguard failures. Subtypes map onto the CLI exit-code
// contract: io/format/parse/shape/config/domain -> 2, numeric -> 3.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public error {
public:
    io_error(const std::string& msg, std::uint64_t byte_offset)
        : error(msg + " (at byte offset " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    explicit io_error(const std::string& msg) : error(msg), offset(0) {}
    std::uint64_t offset;
};

class format_error : public error {
public:
    using error::error;
};

class truncation_error : public format_error {
public:
    using format_error::format_error;
};

class unsupported_version_error : public format_error {
public:
    using format_error::format_error;
};

class shape_error : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    parse_error(const std::string& msg, std::size_t line_number)
        : error(msg + " (line " + std::to_string(line_number) + ")"), line(line_number) {}
    explicit parse_error(const std::string& msg) : error(msg), line(0) {}
    std::size_t line;
};

class duplicate_error : public error {
public:
    using error::error;
};

class empty_input_error : public error {
public:
    using error::error;
};

class domain_error : public error {
public:
    using error::error;
};

class config_error : public error {
public:
    using error::error;
};

class numeric_error : public error {
public:
    using error::error;
};

}  // namespace clipguard
