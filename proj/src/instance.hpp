#pragma once

#include <optional>
#include <string>

#include "family.hpp"

namespace g2forge {

/// A runtime instance resolved from a config: either a family instance (with
/// the full block data, enabling the specialized formula paths and the Ricci
/// operator) or bare structure constants (generic paths only).
struct Instance {
  enum class Kind { family, structure_constants, builtin };

  Kind kind = Kind::structure_constants;
  std::optional<FamilySpec> family;  // engaged for family and builtin kinds
  LieAlgebra algebra;
  std::string builtin_name;  // "gs", "sa", "fr" when kind == builtin
  Scalar builtin_param;

  G2Structure structure() const { return G2Structure::standard(algebra); }

  /// JSON config with exactly one of the three shapes:
  ///   {"kind":"family","A1":[[..]],"A":[[..]],"B":[[..]],"C":[[..]]}
  ///   {"kind":"structure-constants","c":[[i,j,k,value],...]}
  ///   {"kind":"builtin","name":"gs","param":"1/4"}
  static Instance from_json_text(const std::string& text);

  /// Builtin by name, accepting "gs:1/4" shorthand or a separate param.
  static Instance from_builtin(const std::string& name,
                               const std::optional<std::string>& param);
};

}  // namespace g2forge
