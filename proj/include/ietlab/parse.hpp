#pragma once

#include <string>

#include "ietlab/gn.hpp"
#include "ietlab/iet.hpp"
#include "ietlab/numfield.hpp"
#include "ietlab/words.hpp"

namespace ietlab {

// Plain-text input grammar (documented in the README):
//
//   number      := expr with rational literals `p/q`, the symbol `t` for
//                  theta, `+ - * /`, parentheses and `^k`
//   iet-block   := "iet" "{" "cuts" ":" "[" number, ... "]" ";"
//                  "translations" ":" "[" number, ... "]" [";"] "}"
//   gn-block    := "gn" "{" "n" ":" int ";" "alpha" ":" "[" number, ... "]" ";"
//                  "sigma" ":" "[" int, ... "]" [";"] "}"
//   field-decl  := "field" (preset-name |
//                  "{" "minpoly" ":" "[" rational, ... "]" ";"
//                      "interval" ":" "(" rational "," rational ")" [";"] "}")
//   gens-file   := lines of field-decl / "gen" name "=" value / "rel" word,
//                  value one of iet-block, gn-block, "rotation(expr)",
//                  "restricted_rotation(angle, [a, b))";
//                  "#" starts a comment.

/// Parses a number expression over the given field.
AlgebraicNumber parse_number(const FieldPtr& field, const std::string& text);

/// Parses an `iet { ... }` block; also accepts a leading field declaration,
/// in which case `field` may be null.
Iet parse_iet(const FieldPtr& field, const std::string& text);

/// Parses a `gn { ... }` block.
GnElem parse_gn(const FieldPtr& field, const std::string& text);

/// Parses a field declaration (preset name or inline spec).
FieldPtr parse_field_decl(const std::string& text);

struct GeneratorFileResult {
    FieldPtr field;
    GeneratorSet gens;
};

/// Parses a full generator file. `default_field` backs files without their
/// own field declaration (may be null when the file declares one).
GeneratorFileResult parse_generator_file(const std::string& text, FieldPtr default_field = nullptr);

/// Parses a standalone IET file: optional field declaration line followed
/// by an iet/gn/rotation value.
struct IetFileResult {
    FieldPtr field;
    Iet value;
};
IetFileResult parse_iet_file(const std::string& text, FieldPtr default_field = nullptr);

/// Exact round-trip serializations (re-parse to equal values).
std::string serialize_iet(const Iet& f);
std::string serialize_gn(const GnElem& e);

}  // namespace ietlab
