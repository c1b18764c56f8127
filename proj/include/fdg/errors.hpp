#pragma once

#include <stdexcept>
#include <string>

namespace fdg {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// d^{n+1} d^n != 0 somewhere.
class NotAComplex : public Error {
public:
    using Error::Error;
};

class NotAChainMap : public Error {
public:
    using Error::Error;
};

class NotAFiltration : public Error {
public:
    using Error::Error;
};

class NotAGradedModule : public Error {
public:
    using Error::Error;
};

class NonCommutingSquare : public Error {
public:
    using Error::Error;
};

class NotAcyclic : public Error {
public:
    using Error::Error;
};

class NegativeSupport : public Error {
public:
    using Error::Error;
};

class InvalidPoint : public Error {
public:
    using Error::Error;
};

class UnknownSuite : public Error {
public:
    using Error::Error;
};

/// JSON input that does not follow the schema; the message starts with a JSON-pointer-like path.
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace fdg
