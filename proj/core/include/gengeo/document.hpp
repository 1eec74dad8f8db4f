#pragma once

#include <string>
#include <vector>

#include "gengeo/gc.hpp"

namespace gengeo {

/// A named generalized structure attached to a frame document.
struct StructureSpec {
  enum class Kind { Complex, Symplectic, Explicit };
  Kind kind = Kind::Complex;
  /// dim x dim matrix for complex/symplectic, 2dim x 2dim for explicit.
  QMatrix matrix;

  std::string kind_name() const {
    switch (kind) {
      case Kind::Complex: return "complex";
      case Kind::Symplectic: return "symplectic";
      default: return "explicit";
    }
  }
};

struct FrameDocument {
  std::string name;
  FrameSpec frame{2};
  std::vector<StructureSpec> structures;
};

/// Parses the JSON document format:
/// {
///   "name": "...",                                      (optional)
///   "dim": 4,                                           (even, 2..8)
///   "brackets": [{"i":1,"j":2,"k":3,"coeff":"1"}, ...], (optional)
///   "H":        [{"i":1,"j":2,"k":3,"coeff":"1"}, ...], (optional)
///   "g": [["1","0",...], ...],                          (optional)
///   "b": [[...], ...],                                  (optional)
///   "structures": [{"kind":"complex","matrix":[[...]]}] (optional)
/// }
/// Scalar entries are integers or exact rational strings "p/q"; floats are
/// rejected. Throws InputError with line/field information.
FrameDocument parse_frame_document(const std::string& text);

FrameDocument load_frame_document(const std::string& path);

/// Builds the generalized structure (validating J^2 = -1 etc).
GCStructure realize(const StructureSpec& spec);

}  // namespace gengeo
