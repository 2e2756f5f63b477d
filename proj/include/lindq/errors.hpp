#pragma once

#include <stdexcept>
#include <string>

namespace lindq {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
public:
    explicit NotAPrimePower(long long q)
        : Error("not a supported prime power: " + std::to_string(q)) {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ZeroVector : public Error {
public:
    ZeroVector() : Error("zero vector has no normalization") {}
};

class Singular : public Error {
public:
    Singular() : Error("matrix is singular") {}
};

/// An exact search or construction would exceed its configured cap.
class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(const std::string& what, long long value, long long cap)
        : Error(what + " exceeds cap (" + std::to_string(value) + " > " + std::to_string(cap) + ")") {}
};

class InvalidVertex : public Error {
public:
    using Error::Error;
};

class ConstructionUnavailable : public Error {
public:
    using Error::Error;
};

/// A constructed object failed its own postcondition check. Indicates a bug.
class VerificationFailed : public Error {
public:
    using Error::Error;
};

class TranslationFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& msg)
        : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace lindq
