#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdslink {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// N-Triples line that does not match the grammar (strict mode only).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    std::size_t line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

// No predicate qualifies as an entity label property.
class NoLabelPropertyError : public Error {
public:
    NoLabelPropertyError() : Error("no predicate qualifies as an entity label property") {}
};

class NoInstancesError : public Error {
public:
    explicit NoInstancesError(const std::string& class_iri)
        : Error("class has no instances: " + class_iri), class_iri_(class_iri) {}
    const std::string& class_iri() const { return class_iri_; }

private:
    std::string class_iri_;
};

class UnknownFormatError : public Error {
public:
    using Error::Error;
};

class MalformedEntryError : public Error {
public:
    using Error::Error;
};

class HttpError : public Error {
public:
    HttpError(int status, const std::string& what) : Error(what), status_(status) {}
    int status() const { return status_; }

private:
    int status_ = 0;
};

class TimeoutError : public Error {
public:
    using Error::Error;
};

class MalformedResultsError : public Error {
public:
    using Error::Error;
};

// Endpoint exposes no literal-valued predicates to profile.
class EmptyTargetError : public Error {
public:
    EmptyTargetError() : Error("endpoint has no literal-valued predicates") {}
};

}  // namespace rdslink
