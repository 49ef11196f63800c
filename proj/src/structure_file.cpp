#include "qhopf/structure_file.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace qhopf {

using json = nlohmann::json;

std::string StructureFileError::describe(const std::string& what, const std::string& location,
                                         std::size_t position) {
  std::string out = what;
  if (!location.empty()) out += " in " + location;
  return out + " at position " + std::to_string(position);
}

namespace {

constexpr int kFormatVersion = 1;

// ------------------------------------------------------------------ render

json render_element(const AlgebraElement& a) {
  json out = json::object();
  const GradedBasis& basis = a.algebra()->basis();
  for (const auto& [i, c] : a.terms()) out[basis.label(i)] = c.to_string();
  return out;
}

json render_tensor(const Tensor& t) {
  json out = json::array();
  for (const auto& [m, c] : t.terms()) {
    json labels = json::array();
    for (std::size_t k = 0; k < t.rank(); ++k) labels.push_back(t.leg(k)->basis().label(m[k]));
    out.push_back(json::array({labels, c.to_string()}));
  }
  return out;
}

json render_matrix(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m.at(r, c).is_zero()) out.push_back(json::array({r, c, m.at(r, c).to_string()}));
    }
  }
  return out;
}

json render_document(const CatalogEntry& entry) {
  const QuasiHopf& h = entry.structure;
  const GradedAlgebra& a = *h.algebra;
  const GradedBasis& basis = a.basis();
  json doc = json::object();
  doc["format"] = kFormatVersion;
  doc["name"] = h.name;
  doc["notes"] = entry.notes;
  doc["field"] = a.field().to_string();

  json b = json::array();
  for (Index i = 0; i < a.dim(); ++i) {
    b.push_back(json{{"label", basis.label(i)}, {"parity", basis.parity(i)}});
  }
  doc["basis"] = b;
  doc["unit"] = basis.label(*basis.unit_index());

  json mul = json::array();
  for (const StructureConstant& c : a.structure_constants()) {
    mul.push_back(json::array(
        {basis.label(c.i), basis.label(c.j), basis.label(c.k), c.value.to_string()}));
  }
  doc["mul"] = mul;

  json coproduct = json::object(), counit = json::object(), antipode = json::object();
  for (Index i = 0; i < a.dim(); ++i) {
    coproduct[basis.label(i)] = render_tensor(h.coproduct.image(i));
    const Scalar e = h.counit.image(i).to_scalar();
    if (!e.is_zero()) counit[basis.label(i)] = e.to_string();
    antipode[basis.label(i)] = render_element(h.antipode.image(i).to_element());
  }
  doc["coproduct"] = coproduct;
  doc["counit"] = counit;
  doc["antipode"] = antipode;
  doc["phi"] = render_tensor(h.phi);
  doc["phi_inv"] = render_tensor(h.phi_inv);
  doc["alpha"] = render_element(h.alpha);
  doc["beta"] = render_element(h.beta);
  if (h.r) {
    doc["r"] = render_tensor(*h.r);
    doc["r_inv"] = render_tensor(*h.r_inv);
  }

  json options = json::object();
  for (const NamedRMatrix& r : entry.other_r) {
    options[r.name] = json{{"r", render_tensor(r.r)}, {"r_inv", render_tensor(r.r_inv)}};
  }
  doc["r_options"] = options;

  json twistors = json::object();
  for (const Twistor& t : entry.twistors) {
    twistors[t.name] = json{{"f", render_tensor(t.f)}, {"f_inv", render_tensor(t.f_inv)}};
  }
  doc["twistors"] = twistors;

  json reps = json::object();
  for (const Representation& pi : entry.representations) {
    json matrices = json::object();
    for (Index i = 0; i < a.dim(); ++i) matrices[basis.label(i)] = render_matrix(pi.matrices[i]);
    json carrier = json::array();
    for (Parity p : pi.carrier) carrier.push_back(p);
    reps[pi.name] = json{{"carrier", carrier}, {"matrices", matrices}};
  }
  doc["representations"] = reps;
  return doc;
}

// Like json::dump with indentation, except that containers of primitives and
// tensor terms [[labels...], "scalar"] stay on one line.
bool is_flat(const json& v) {
  auto primitives = [](const json& x) {
    return std::none_of(x.begin(), x.end(), [](const json& y) { return y.is_structured(); });
  };
  if (!v.is_structured() || primitives(v)) return true;
  return v.is_array() && v.size() == 2 && v[0].is_array() && primitives(v[0]) &&
         !v[1].is_structured();
}

void print(std::ostream& os, const json& v, int indent) {
  if (is_flat(v)) {
    os << v.dump();
    return;
  }
  const std::string pad(indent + 1, ' '), close(indent, ' ');
  bool first = true;
  if (v.is_object()) {
    os << "{\n";
    for (const auto& [key, value] : v.items()) {
      os << (first ? "" : ",\n") << pad << json(key).dump() << ": ";
      print(os, value, indent + 1);
      first = false;
    }
    os << "\n" << close << "}";
  } else {
    os << "[\n";
    for (const json& x : v) {
      os << (first ? "" : ",\n") << pad;
      print(os, x, indent + 1);
      first = false;
    }
    os << "\n" << close << "]";
  }
}

// ------------------------------------------------------------------- parse

// A JSON value together with its path in the document, for error messages.
class Node {
 public:
  Node(const json& value, std::string path) : v_(&value), path_(std::move(path)) {}

  const json& value() const { return *v_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what, std::size_t position = 0) const {
    throw StructureFileError(what, path_, position);
  }

  bool has(const std::string& key) const { return v_->is_object() && v_->contains(key); }

  Node at(const std::string& key) const {
    if (!v_->is_object()) fail("expected an object");
    auto it = v_->find(key);
    if (it == v_->end()) fail("missing key '" + key + "'");
    return Node(*it, path_.empty() ? key : path_ + "." + key);
  }

  Node at(std::size_t k) const { return Node((*v_)[k], path_ + "[" + std::to_string(k) + "]"); }

  const json& object() const {
    if (!v_->is_object()) fail("expected an object");
    return *v_;
  }

  std::size_t array_size(std::optional<std::size_t> expected = std::nullopt) const {
    if (!v_->is_array()) fail("expected an array");
    if (expected && v_->size() != *expected) {
      fail("expected an array of length " + std::to_string(*expected));
    }
    return v_->size();
  }

  std::string string() const {
    if (!v_->is_string()) fail("expected a string");
    return v_->get<std::string>();
  }

  long integer() const {
    if (!v_->is_number_integer()) fail("expected an integer");
    return v_->get<long>();
  }

  Scalar scalar(Field field) const {
    const std::string text = string();
    try {
      return Scalar::parse(text, field);
    } catch (const ParseError& e) {
      std::string reason = e.what();
      reason = reason.substr(0, reason.rfind(" at position "));
      fail("bad scalar '" + text + "': " + reason, e.position());
    } catch (const Error& e) {
      fail("bad scalar '" + text + "': " + e.what());
    }
  }

  Index label(const GradedBasis& basis) const {
    const std::string text = string();
    auto i = basis.find(text);
    if (!i) fail("unknown basis label '" + text + "'");
    return *i;
  }

 private:
  const json* v_;
  std::string path_;
};

AlgebraElement parse_element(const Node& n, const AlgebraPtr& a) {
  AlgebraElement out = a->zero();
  for (const auto& [key, value] : n.object().items()) {
    Node term(value, n.path() + "." + key);
    auto i = a->basis().find(key);
    if (!i) term.fail("unknown basis label '" + key + "'");
    out.add_term(*i, term.scalar(a->field()));
  }
  return out;
}

Tensor parse_tensor(const Node& n, const AlgebraPtr& a, std::size_t rank) {
  Tensor out = Tensor::zero(a, rank);
  const std::size_t terms = n.array_size();
  for (std::size_t t = 0; t < terms; ++t) {
    Node term = n.at(t);
    term.array_size(2);
    Node labels = term.at(std::size_t{0});
    labels.array_size(rank);
    MultiIndex m;
    for (std::size_t k = 0; k < rank; ++k) m[k] = labels.at(k).label(a->basis());
    out.add_term(m, term.at(1).scalar(a->field()));
  }
  return out;
}

Matrix parse_matrix(const Node& n, Field field, std::size_t dim) {
  Matrix out(field, dim, dim);
  const std::size_t entries = n.array_size();
  for (std::size_t t = 0; t < entries; ++t) {
    Node e = n.at(t);
    e.array_size(3);
    const long r = e.at(std::size_t{0}).integer(), c = e.at(1).integer();
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= dim ||
        static_cast<std::size_t>(c) >= dim) {
      e.fail("matrix entry out of range");
    }
    out.at(r, c) += e.at(2).scalar(field);
  }
  return out;
}

// Runs f, turning engine errors into StructureFileError at the given node.
template <class F>
auto guarded(const Node& n, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StructureFileError&) {
    throw;
  } catch (const Error& e) {
    n.fail(e.what());
  }
}

CatalogEntry parse_document(const json& doc) {
  Node root(doc, "");
  root.object();
  Node version = root.at("format");
  if (version.integer() != kFormatVersion) version.fail("unsupported format version");

  Node field_node = root.at("field");
  const Field field = guarded(field_node, [&] { return Field::parse(field_node.string()); });

  Node basis_node = root.at("basis");
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  const std::size_t dim = basis_node.array_size();
  if (dim == 0) basis_node.fail("empty basis");
  for (std::size_t i = 0; i < dim; ++i) {
    Node b = basis_node.at(i);
    labels.push_back(b.at("label").string());
    const long p = b.at("parity").integer();
    if (p != 0 && p != 1) b.at("parity").fail("parity must be 0 or 1");
    parities.push_back(static_cast<Parity>(p));
  }
  Node unit_node = root.at("unit");
  const std::string unit_label = unit_node.string();
  auto unit_it = std::find(labels.begin(), labels.end(), unit_label);
  if (unit_it == labels.end()) unit_node.fail("unknown basis label '" + unit_label + "'");
  const GradedBasis basis = guarded(basis_node, [&] {
    return GradedBasis(labels, parities, static_cast<Index>(unit_it - labels.begin()));
  });

  Node mul_node = root.at("mul");
  std::vector<StructureConstant> constants;
  const std::size_t mul_terms = mul_node.array_size();
  for (std::size_t t = 0; t < mul_terms; ++t) {
    Node q = mul_node.at(t);
    q.array_size(4);
    constants.push_back({q.at(std::size_t{0}).label(basis), q.at(1).label(basis),
                         q.at(2).label(basis), q.at(3).scalar(field)});
  }
  const AlgebraPtr a =
      guarded(mul_node, [&] { return GradedAlgebra::create(field, basis, constants); });

  Node cop_node = root.at("coproduct"), counit_node = root.at("counit"),
       anti_node = root.at("antipode");
  cop_node.object();
  anti_node.object();
  std::vector<Tensor> cop;
  std::vector<AlgebraElement> anti;
  DenseVector counit(dim, field.zero());
  for (Index i = 0; i < dim; ++i) {
    cop.push_back(parse_tensor(cop_node.at(labels[i]), a, 2));
    anti.push_back(parse_element(anti_node.at(labels[i]), a));
  }
  for (const auto& [key, value] : counit_node.object().items()) {
    Node n(value, counit_node.path() + "." + key);
    auto i = basis.find(key);
    if (!i) n.fail("unknown basis label '" + key + "'");
    counit[*i] = n.scalar(field);
  }
  for (const char* key : {"coproduct", "antipode"}) {
    for (const auto& [label, value] : root.at(key).object().items()) {
      (void)value;
      if (!basis.find(label)) root.at(key).fail("unknown basis label '" + label + "'");
    }
  }

  QuasiHopf h = guarded(root, [&] {
    std::optional<Tensor> r, r_inv;
    if (root.has("r") != root.has("r_inv")) root.fail("r and r_inv must be given together");
    if (root.has("r")) {
      r = parse_tensor(root.at("r"), a, 2);
      r_inv = parse_tensor(root.at("r_inv"), a, 2);
    }
    return QuasiHopf::assemble(
        root.at("name").string(), a, LinearMap(a, {a, a}, cop), LinearMap::functional(a, counit),
        LinearMap::endomorphism(a, anti), parse_tensor(root.at("phi"), a, 3),
        parse_tensor(root.at("phi_inv"), a, 3), parse_element(root.at("alpha"), a),
        parse_element(root.at("beta"), a), r, r_inv);
  });

  CatalogEntry entry{std::move(h), {}, {}, {}, {}};
  if (root.has("notes")) entry.notes = root.at("notes").string();

  if (root.has("r_options")) {
    Node opts = root.at("r_options");
    for (const auto& [name, value] : opts.object().items()) {
      (void)value;
      Node o = opts.at(name);
      entry.other_r.push_back(
          {name, parse_tensor(o.at("r"), a, 2), parse_tensor(o.at("r_inv"), a, 2)});
    }
  }
  if (root.has("twistors")) {
    Node tw = root.at("twistors");
    for (const auto& [name, value] : tw.object().items()) {
      (void)value;
      Node t = tw.at(name);
      Tensor f = parse_tensor(t.at("f"), a, 2);
      std::optional<Tensor> f_inv;
      if (t.has("f_inv")) f_inv = parse_tensor(t.at("f_inv"), a, 2);
      entry.twistors.push_back(
          guarded(t, [&] { return validate_twistor(name, f, f_inv, entry.structure); }));
    }
  }
  if (root.has("representations")) {
    Node reps = root.at("representations");
    for (const auto& [name, value] : reps.object().items()) {
      (void)value;
      Node r = reps.at(name);
      Node carrier_node = r.at("carrier");
      std::vector<Parity> carrier;
      const std::size_t d = carrier_node.array_size();
      for (std::size_t k = 0; k < d; ++k) {
        const long p = carrier_node.at(k).integer();
        if (p != 0 && p != 1) carrier_node.at(k).fail("parity must be 0 or 1");
        carrier.push_back(static_cast<Parity>(p));
      }
      Node mats = r.at("matrices");
      std::vector<Matrix> matrices;
      for (Index i = 0; i < dim; ++i) matrices.push_back(parse_matrix(mats.at(labels[i]), field, d));
      entry.representations.push_back(
          guarded(r, [&] { return validate_representation(name, a, carrier, matrices); }));
    }
  }
  return entry;
}

}  // namespace

std::string render_structure(const CatalogEntry& entry) {
  std::ostringstream os;
  print(os, render_document(entry), 0);
  os << "\n";
  return os.str();
}

CatalogEntry parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw StructureFileError("malformed JSON", "", e.byte);
  }
  return parse_document(doc);
}

CatalogEntry read_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructureFileError("cannot open '" + path + "'", "", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

void write_structure_file(const std::string& path, const CatalogEntry& entry) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << render_structure(entry);
  if (!out) throw Error("write to '" + path + "' failed");
}

CatalogEntry load_structure(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.starts_with(prefix)) return load_builtin(source.substr(prefix.size()), false);
  return read_structure_file(source);
}

}  // namespace qhopf
