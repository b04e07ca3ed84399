#pragma once

#include <stdexcept>
#include <string>

namespace gwp {

/// Malformed text input (DSL, ring spec, K-matrix file, theory table).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0, int col = 0)
        : std::runtime_error(format(msg, line, col)), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    static std::string format(const std::string& msg, int line, int col) {
        if (line <= 0) return msg;
        std::string s = "line " + std::to_string(line);
        if (col > 0) s += ", col " + std::to_string(col);
        return s + ": " + msg;
    }
    int line_;
    int col_;
};

/// Semantically invalid input (bad partitions, ring mismatches, caps exceeded).
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gwp
