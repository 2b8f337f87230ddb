#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace reltop {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyUniverse : public Error {
public:
    EmptyUniverse() : Error("universe must contain at least one element") {}
};

class DuplicateLabel : public Error {
public:
    explicit DuplicateLabel(std::string label)
        : Error("duplicate element label: " + label), label_(std::move(label)) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class UniverseTooLarge : public Error {
public:
    explicit UniverseTooLarge(std::size_t n)
        : Error("universe of size " + std::to_string(n) + " exceeds the supported maximum of 64") {}
};

class UnknownLabel : public Error {
public:
    explicit UnknownLabel(std::string label)
        : Error("unknown element label: " + label), label_(std::move(label)) {}
    const std::string& label() const { return label_; }

private:
    std::string label_;
};

class UniverseMismatch : public Error {
public:
    UniverseMismatch() : Error("operands belong to different universes") {}
};

// A family fails the cover condition required of a subbase.
class NotACover : public Error {
public:
    explicit NotACover(std::vector<std::string> uncovered)
        : Error(message(uncovered)), uncovered_(std::move(uncovered)) {}
    const std::vector<std::string>& uncovered() const { return uncovered_; }

private:
    static std::string message(const std::vector<std::string>& uncovered) {
        std::string msg = "family does not cover the universe; uncovered:";
        for (const auto& label : uncovered) msg += " " + label;
        return msg;
    }
    std::vector<std::string> uncovered_;
};

class NotSubfamily : public Error {
public:
    NotSubfamily() : Error("family is not a subfamily of the topology's open sets") {}
};

class NotATopology : public Error {
public:
    NotATopology() : Error("family violates the topology axioms") {}
};

class SizeOutOfRange : public Error {
public:
    explicit SizeOutOfRange(std::size_t n, std::size_t lo, std::size_t hi)
        : Error("size " + std::to_string(n) + " out of range [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]") {}
};

class UnknownProposition : public Error {
public:
    explicit UnknownProposition(std::string id)
        : Error("unknown proposition id: " + id), id_(std::move(id)) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

// Parse failure in a relation file; line is 1-based, 0 when not line-oriented.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace reltop
