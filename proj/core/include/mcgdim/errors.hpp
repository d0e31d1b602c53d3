#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcgdim {

// Domain violation: inputs that name no valid object (negative genus,
// non-orientable genus 0, order < 2, ...).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Exact-arithmetic overflow: a reduced numerator or denominator left the
// signed 64-bit range.
class arithmetic_overflow : public std::runtime_error {
public:
    explicit arithmetic_overflow(const std::string& what) : std::runtime_error(what) {}
};

// Signature text rejected by the parser. offset is the byte position of the
// offending token; field names the semantic slot when the text is
// syntactically fine but names an invalid object.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t offset, std::string field, const std::string& what)
        : std::runtime_error(what), offset_(offset), field_(std::move(field)) {}

    std::size_t offset() const { return offset_; }
    const std::string& field() const { return field_; }

private:
    std::size_t offset_;
    std::string field_;
};

// Action-table row rejected at ingest. line is 1-based.
class ingest_error : public std::runtime_error {
public:
    ingest_error(std::size_t line, const std::string& what)
        : std::runtime_error(what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace mcgdim
