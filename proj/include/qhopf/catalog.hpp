#pragma once

// Built-in quasi-Hopf superalgebras with their twistors and representations.

#include <string>
#include <string_view>
#include <vector>

#include "qhopf/quasihopf.hpp"
#include "qhopf/representation.hpp"
#include "qhopf/twisting.hpp"

namespace qhopf {

struct NamedRMatrix {
  std::string name;
  Tensor r;
  Tensor r_inv;
};

struct CatalogEntry {
  QuasiHopf structure;
  std::vector<Twistor> twistors;
  std::vector<Representation> representations;
  // Further admissible R-matrices besides the one carried by the structure.
  std::vector<NamedRMatrix> other_r;
  std::string notes;

  const Twistor& twistor(std::string_view name) const;
  const Representation& representation(std::string_view name) const;
  // The structure with one of the other R-matrices installed.
  QuasiHopf with_r(std::string_view name) const;
};

// The structure twisted by f, with the representations kept, the other
// R-matrices transported to F^T R F⁻¹, and the twistors identity and
// untwist = F⁻¹. Twisting by the identity keeps the twistors as they are.
CatalogEntry twist_entry(const CatalogEntry& base, const Twistor& f, std::string name,
                         std::string notes, bool verify = true);

// z2-group, z2-cocycle, sweedler-h4, grassmann-theta, sweedler-twisted, small-uqsl2.
std::vector<std::string> builtin_names();
// Entries whose verification is expensive and optional.
bool is_stretch_builtin(std::string_view name);

// Throws Error("unknown built-in ...") for other names. With verify set the
// entry is run through the full verifier before it is returned.
CatalogEntry load_builtin(std::string_view name, bool verify = true);

}  // namespace qhopf
