#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace coref {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A record in an annotation or manifest file that does not conform to the
// format. Carries the 1-based line number.
class MalformedRecord : public Error {
public:
    MalformedRecord(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// The same markable id appears twice in one annotation.
class DuplicateMarkable : public Error {
public:
    DuplicateMarkable(const std::string& id, std::size_t line)
        : Error("duplicate markable id '" + id + "' (line " + std::to_string(line) + ")"),
          id_(id),
          line_(line) {}

    const std::string& id() const { return id_; }
    std::size_t line() const { return line_; }

private:
    std::string id_;
    std::size_t line_;
};

// Two annotations do not cover the identical markable set. Carries the
// symmetric difference, split by side.
class Incommensurate : public Error {
public:
    Incommensurate(std::vector<std::string> only_in_first,
                   std::vector<std::string> only_in_second)
        : Error(describe(only_in_first, only_in_second)),
          only_in_first_(std::move(only_in_first)),
          only_in_second_(std::move(only_in_second)) {}

    const std::vector<std::string>& only_in_first() const { return only_in_first_; }
    const std::vector<std::string>& only_in_second() const { return only_in_second_; }

private:
    static std::string describe(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
        std::string msg = "annotations are incommensurate;";
        if (!a.empty()) {
            msg += " only in first:";
            for (const auto& id : a) msg += " '" + id + "'";
        }
        if (!b.empty()) {
            msg += " only in second:";
            for (const auto& id : b) msg += " '" + id + "'";
        }
        return msg;
    }

    std::vector<std::string> only_in_first_;
    std::vector<std::string> only_in_second_;
};

// Two partitions over different universes cannot be combined.
class UniverseMismatch : public Error {
public:
    explicit UniverseMismatch(const std::string& msg) : Error(msg) {}
};

// A markable id was looked up in an annotation that does not contain it.
class UnknownMarkable : public Error {
public:
    explicit UnknownMarkable(const std::string& id)
        : Error("unknown markable id '" + id + "'") {}
};

// A link table needs at least two shared markables (total = N - 1 >= 1).
class TooFewMarkables : public Error {
public:
    explicit TooFewMarkables(std::size_t n)
        : Error("link table requires at least 2 markables, got " + std::to_string(n)) {}
};

// Chance-corrected agreement was requested on a table whose negative-cell
// flag is set; the probability model does not hold there.
class NegativeCellRefusal : public Error {
public:
    NegativeCellRefusal()
        : Error("refusing to compute kappa from a table with a negative cell") {}
};

// A statistic was requested over an empty list of values.
class EmptyList : public Error {
public:
    explicit EmptyList(const std::string& what_for)
        : Error("empty value list: " + what_for) {}
};

}  // namespace coref
