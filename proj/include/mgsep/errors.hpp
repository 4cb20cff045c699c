#ifndef MGSEP_ERRORS_HPP
#define MGSEP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mgsep {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SelfLoopError : public Error {
public:
    explicit SelfLoopError(const std::string& vertex)
        : Error("self-loop at vertex '" + vertex + "'"), vertex_(vertex) {}
    const std::string& vertex() const { return vertex_; }

private:
    std::string vertex_;
};

class MalformedVertexNameError : public Error {
public:
    explicit MalformedVertexNameError(const std::string& name)
        : Error("malformed vertex name '" + name + "'"), name_(name) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class UnknownVertexError : public Error {
public:
    explicit UnknownVertexError(const std::string& vertex)
        : Error("unknown vertex '" + vertex + "'"), vertex_(vertex) {}
    const std::string& vertex() const { return vertex_; }

private:
    std::string vertex_;
};

class OverlappingSetsError : public Error {
public:
    explicit OverlappingSetsError(const std::string& vertex)
        : Error("vertex '" + vertex + "' occurs in more than one query set"), vertex_(vertex) {}
    const std::string& vertex() const { return vertex_; }

private:
    std::string vertex_;
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

class InstanceTooLargeError : public Error {
public:
    InstanceTooLargeError(std::size_t edges, std::size_t bound)
        : Error("graph has " + std::to_string(edges) + " edges, exhaustive search bound is " +
                std::to_string(bound)) {}
};

class CriterionDisagreementError : public Error {
public:
    using Error::Error;
};

}  // namespace mgsep

#endif
