#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgdim/orbifolds.hpp"

namespace mcgdim {

// Parses "(genus; +|-; [q1,...|-]; {(p1,...)|(), ...|-})". Whitespace is
// allowed between tokens. Throws parse_error with the byte offset of the
// offending token; semantic violations carry the field name. The result is
// canonical.
OrbifoldSignature parse_signature(std::string_view text);

// Canonical text form, e.g. "(0; +; [-]; {(2,4,6)})" or
// "(1; -; [3,5]; {(), (2,2)})". render(parse(render(s))) is byte-identical.
std::string render_signature(const OrbifoldSignature& o);

// One verified finite action: a group of the given order acting on the closed
// non-orientable surface of the given genus with the given quotient signature.
// lambda_max optionally caps the longest subgroup chain length.
struct ActionRow {
    int genus = 0;
    std::int64_t order = 0;
    OrbifoldSignature signature;
    std::optional<int> lambda_max;
};

// Reads tab-separated rows "genus<TAB>order<TAB>signature[<TAB>lambda_max]".
// Blank lines and '#' comments are skipped. Each row is checked against the
// order forced by the Euler characteristic; mismatches throw ingest_error
// with the 1-based line number. Duplicate rows collapse; result is sorted by
// (genus, order descending, signature text).
std::vector<ActionRow> ingest_actions(std::istream& in);

// ingest_actions on a file path; unopenable paths throw domain_error.
std::vector<ActionRow> load_actions(const std::string& path);

} // namespace mcgdim
