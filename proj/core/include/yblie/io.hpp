#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "yblie/duality.hpp"
#include "yblie/report.hpp"

namespace yblie::io {

inline constexpr int kFormatVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Serializable record of a hom-subspace construction: a space, the ambient
/// internal hom it embeds into, and the inclusion matrix.
struct HomSpace {
  CategoryContext ctx;
  GradedObject space;
  GradedObject ambient;
  ExactMorphism inclusion;

  HomSpace(CategoryContext context, GradedObject sp, GradedObject amb,
           ExactMorphism incl);
};

using Structure =
    std::variant<YBOperator, YBLieAlgebra, YBLieCoalgebra, YBAlgebra,
                 BraidedBialgebra, LieModule, LieComodule, MichaelisPair,
                 TakeuchiPair, AlgebraModule, HomSpace>;

std::string kind_name(const Structure& s);
const CategoryContext& context_of(const Structure& s);

/// Parses a structure file.  Throws ParseError for malformed text and
/// ShapeError when matrices contradict the declared objects; both map to
/// exit code 2 in the CLI.
Structure parse_structure(const std::string& text);

/// Canonical serialization: fixed key order, two-space indent, canonical
/// scalar spelling, trailing newline.  parse(write(s)) == s bit-exactly.
std::string write_structure(const Structure& s);

/// Dispatches to the appropriate checker.
CheckReport check_structure(const Structure& s);

/// FNV-1a 64-bit content digest, hex encoded.
std::string digest_hex(std::string_view bytes);

struct ReportDocument {
  std::string kind;
  std::string input_digest;
  CheckReport report;
};

std::string report_to_json(const ReportDocument& doc);
std::string report_to_text(const ReportDocument& doc);

}  // namespace yblie::io
