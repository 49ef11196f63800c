#pragma once

// The .qh structure file: a JSON document holding a quasi-Hopf superalgebra
// together with named twistors, representations and alternative R-matrices.
// Scalars are strings in the scalar grammar and multi-indices are arrays of
// basis labels. Rendering is deterministic: keys are sorted and tables are
// listed in basis order.

#include <string>
#include <string_view>

#include "qhopf/catalog.hpp"

namespace qhopf {

// Malformed document or semantically invalid contents. `location` is a JSON
// path such as "phi[3][1]"; `position` is a byte offset into the document or
// into the offending scalar string, whichever is more precise.
class StructureFileError : public Error {
 public:
  StructureFileError(const std::string& what, std::string location, std::size_t position)
      : Error(describe(what, location, position)), location_(std::move(location)),
        position_(position) {}
  const std::string& location() const { return location_; }
  std::size_t position() const { return position_; }

 private:
  static std::string describe(const std::string& what, const std::string& location,
                              std::size_t position);
  std::string location_;
  std::size_t position_;
};

std::string render_structure(const CatalogEntry& entry);
// Throws StructureFileError. The structure is assembled and well-formed but
// its axioms are not verified.
CatalogEntry parse_structure(std::string_view text);

CatalogEntry read_structure_file(const std::string& path);
void write_structure_file(const std::string& path, const CatalogEntry& entry);

// "builtin:NAME" loads a catalog entry, anything else is read as a file.
CatalogEntry load_structure(const std::string& source);

}  // namespace qhopf
