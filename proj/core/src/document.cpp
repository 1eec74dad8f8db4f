#include "gengeo/document.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gengeo {

namespace {

using json = nlohmann::json;

Rational scalar_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number_unsigned()) return Rational(static_cast<long>(j.get<unsigned long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  if (j.is_number_float())
    throw InputError(path + ": floating point literals are not accepted; use \"p/q\" strings");
  throw InputError(path + ": expected an integer or a rational string");
}

QMatrix matrix_at(const json& j, int rows, int cols, const std::string& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows)
    throw InputError(path + ": expected an array of " + std::to_string(rows) + " rows");
  QMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw InputError(rpath + ": expected " + std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c)
      m(r, c) = scalar_at(row[c], rpath + "[" + std::to_string(c) + "]");
  }
  return m;
}

int index_at(const json& j, int dim, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw InputError(path + ": expected a basis index");
  long v = j.get<long>();
  if (v < 1 || v > dim)
    throw InputError(path + ": index " + std::to_string(v) + " out of range 1.." +
                     std::to_string(dim));
  return static_cast<int>(v) - 1;
}

int line_of_byte(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

FrameDocument parse_frame_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of_byte(text, e.byte)) +
                     ": invalid JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw InputError("document must be a JSON object");

  static const char* known[] = {"name", "dim", "brackets", "H", "g", "b", "structures"};
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) throw InputError("unknown field '" + it.key() + "'");
  }

  if (!doc.contains("dim")) throw InputError("missing field 'dim'");
  if (!doc["dim"].is_number_integer() && !doc["dim"].is_number_unsigned())
    throw InputError("dim: expected an integer");
  long dim = doc["dim"].get<long>();
  if (dim < 2 || dim > 8 || dim % 2 != 0)
    throw InputError("dim: must be an even integer between 2 and 8");

  FrameDocument out;
  out.frame = FrameSpec(static_cast<int>(dim));
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("name: expected a string");
    out.name = doc["name"].get<std::string>();
  }

  if (doc.contains("brackets")) {
    const json& arr = doc["brackets"];
    if (!arr.is_array()) throw InputError("brackets: expected an array");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      std::string path = "brackets[" + std::to_string(t) + "]";
      const json& e = arr[t];
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
          !e.contains("coeff"))
        throw InputError(path + ": expected {i, j, k, coeff}");
      int i = index_at(e["i"], out.frame.dim, path + ".i");
      int j = index_at(e["j"], out.frame.dim, path + ".j");
      int k = index_at(e["k"], out.frame.dim, path + ".k");
      if (i == j) throw InputError(path + ": bracket requires i != j");
      out.frame.add_bracket(i, j, k, scalar_at(e["coeff"], path + ".coeff"));
    }
  }

  if (doc.contains("H")) {
    const json& arr = doc["H"];
    if (!arr.is_array()) throw InputError("H: expected an array");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      std::string path = "H[" + std::to_string(t) + "]";
      const json& e = arr[t];
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
          !e.contains("coeff"))
        throw InputError(path + ": expected {i, j, k, coeff}");
      int i = index_at(e["i"], out.frame.dim, path + ".i");
      int j = index_at(e["j"], out.frame.dim, path + ".j");
      int k = index_at(e["k"], out.frame.dim, path + ".k");
      if (i == j || j == k || i == k) throw InputError(path + ": indices must be distinct");
      Rational coeff = scalar_at(e["coeff"], path + ".coeff");
      FormSpinor term = wedge(wedge(FormSpinor::basis_one_form(out.frame.dim, i),
                                    FormSpinor::basis_one_form(out.frame.dim, j)),
                              FormSpinor::basis_one_form(out.frame.dim, k));
      out.frame.H += GaussianRational(coeff) * term;
    }
  }

  if (doc.contains("g"))
    out.frame.g = matrix_at(doc["g"], out.frame.dim, out.frame.dim, "g");
  if (doc.contains("b"))
    out.frame.b = matrix_at(doc["b"], out.frame.dim, out.frame.dim, "b");

  if (doc.contains("structures")) {
    const json& arr = doc["structures"];
    if (!arr.is_array()) throw InputError("structures: expected an array");
    for (std::size_t t = 0; t < arr.size(); ++t) {
      std::string path = "structures[" + std::to_string(t) + "]";
      const json& e = arr[t];
      if (!e.is_object() || !e.contains("kind") || !e.contains("matrix"))
        throw InputError(path + ": expected {kind, matrix}");
      if (!e["kind"].is_string()) throw InputError(path + ".kind: expected a string");
      std::string kind = e["kind"].get<std::string>();
      StructureSpec spec;
      int size = out.frame.dim;
      if (kind == "complex") {
        spec.kind = StructureSpec::Kind::Complex;
      } else if (kind == "symplectic") {
        spec.kind = StructureSpec::Kind::Symplectic;
      } else if (kind == "explicit") {
        spec.kind = StructureSpec::Kind::Explicit;
        size = 2 * out.frame.dim;
      } else {
        throw InputError(path + ".kind: must be complex, symplectic or explicit");
      }
      spec.matrix = matrix_at(e["matrix"], size, size, path + ".matrix");
      out.structures.push_back(std::move(spec));
    }
  }
  return out;
}

FrameDocument load_frame_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_frame_document(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

GCStructure realize(const StructureSpec& spec) {
  switch (spec.kind) {
    case StructureSpec::Kind::Complex:
      return gc_from_complex(spec.matrix);
    case StructureSpec::Kind::Symplectic:
      return gc_from_symplectic(spec.matrix);
    default:
      return GCStructure::from_matrix(complexify(spec.matrix));
  }
}

}  // namespace gengeo
