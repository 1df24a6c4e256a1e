#pragma once

#include <stdexcept>
#include <string>

namespace ralab {

// Base for all recoverable tool errors. Subcommands map these to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(std::string msg) : std::runtime_error(std::move(msg)) {}
};

class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& expected)
        : Error("parse error at line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": expected " + expected),
          line(line), column(column), expected(expected) {}
    int line;
    int column;
    std::string expected;
};

class UnknownDialectConstruct : public Error {
public:
    explicit UnknownDialectConstruct(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": no grammar rule for '" + what + "'"),
          line(line) {}
    int line;
};

class RegisterOutOfRange : public Error {
public:
    explicit RegisterOutOfRange(const std::string& token)
        : Error("register index out of range: " + token), token(token) {}
    std::string token;
};

class NotNormalized : public Error {
public:
    NotNormalized() : Error("function is not in the normalized dialect") {}
};

class CfgMismatch : public Error {
public:
    explicit CfgMismatch(std::string detail)
        : Error("control-flow mismatch: " + detail), detail(std::move(detail)) {}
    std::string detail;
};

class InconsistentBinding : public Error {
public:
    InconsistentBinding(int vreg, std::string a, std::string b)
        : Error("inconsistent binding for vreg " + std::to_string(vreg) + ": " + a +
                " vs " + b),
          vreg(vreg), first(std::move(a)), second(std::move(b)) {}
    int vreg;
    std::string first;
    std::string second;
};

class UnmatchedInstruction : public Error {
public:
    UnmatchedInstruction(std::string block, int seq, std::string detail)
        : Error("no lowering rule matches " + block + ":" + std::to_string(seq) + " (" +
                detail + ")"),
          block(std::move(block)), seq(seq) {}
    std::string block;
    int seq;
};

class OutOfRegisters : public Error {
public:
    OutOfRegisters(std::string block, int index, std::string file)
        : Error("register demand exceeds " + file + " capacity at " + block + ":" +
                std::to_string(index)),
          block(std::move(block)), index(index), file(std::move(file)) {}
    std::string block;
    int index;
    std::string file;
};

class NotMutable : public Error {
public:
    explicit NotMutable(std::string why) : Error("cannot inject fault: " + std::move(why)) {}
};

class SolverUnavailable : public Error {
public:
    SolverUnavailable() : Error("no solver adapter configured for the constraint backend") {}
};

class EndpointTimeout : public Error {
public:
    explicit EndpointTimeout(double seconds)
        : Error("generator endpoint timed out after " + std::to_string(seconds) + "s") {}
};

class EndpointError : public Error {
public:
    EndpointError(int status, std::string body)
        : Error("generator endpoint error (status " + std::to_string(status) + "): " + body),
          status(status) {}
    int status;
};

}  // namespace ralab
