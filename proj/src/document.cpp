#include "vcmkit/document.hpp"

#include <cstdio>
#include <set>

namespace vcmkit {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw DocumentError(path.empty() ? "/" : path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw DocumentError(path + "/" + key, "missing field");
  return *it;
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) throw DocumentError(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > (std::uint64_t{1} << 30)) {
    throw DocumentError(path, "integer out of range");
  }
  const auto v = j.get<std::int64_t>();
  if (v < -(std::int64_t{1} << 30) || v > (std::int64_t{1} << 30)) throw DocumentError(path, "integer out of range");
  return static_cast<int>(v);
}

Shape parse_shape(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw DocumentError(path, "shape must be a non-empty array of integers");
  std::vector<int> entries;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const int v = as_int(j[i], at);
    if (v < 0) throw DocumentError(at, "shape entries must be non-negative");
    total += v + 1;
    if (total > kMaxDocumentVertices) throw DocumentError(at, "shape exceeds " + std::to_string(kMaxDocumentVertices) + " vertices");
    entries.push_back(v);
  }
  return Shape(std::move(entries));
}

Vertex parse_vertex(const json& j, const Shape& shape, const std::string& path) {
  if (!j.is_array() || j.size() != 2) throw DocumentError(path, "vertex must be [component, index]");
  const Vertex v{as_int(j[0], path + "/0"), as_int(j[1], path + "/1")};
  if (!shape.is_valid(v)) {
    throw DocumentError(path, "vertex [" + std::to_string(v.component) + ", " + std::to_string(v.index) +
                                  "] is not in X_" + shape.format());
  }
  return v;
}

Face parse_face(const json& j, const Shape& shape, const std::string& path) {
  if (!j.is_array()) throw DocumentError(path, "face must be an array of vertices");
  Face f;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const int id = shape.id(parse_vertex(j[i], shape, at));
    if (f.contains(id)) throw DocumentError(at, "duplicate vertex in face");
    f.insert(id);
  }
  return f;
}

std::vector<Face> parse_faces(const json& j, const Shape& shape, const std::string& path, bool allow_empty) {
  if (!j.is_array()) throw DocumentError(path, "expected an array of faces");
  if (j.empty() && !allow_empty) throw DocumentError(path, "facet list is empty");
  std::vector<Face> faces;
  for (std::size_t i = 0; i < j.size(); ++i) faces.push_back(parse_face(j[i], shape, path + "/" + std::to_string(i)));
  return faces;
}

std::map<std::string, Vertex> parse_labels(const json& doc, const Shape& shape) {
  std::map<std::string, Vertex> labels;
  const auto it = doc.find("labels");
  if (it == doc.end()) return labels;
  if (!it->is_object()) throw DocumentError("/labels", "labels must be an object");
  std::set<Vertex> seen;
  for (const auto& [name, value] : it->items()) {
    const std::string at = "/labels/" + name;
    if (name.empty()) throw DocumentError(at, "empty label");
    const Vertex v = parse_vertex(value, shape, at);
    if (!seen.insert(v).second) throw DocumentError(at, "two labels name the same vertex");
    labels.emplace(name, v);
  }
  return labels;
}

std::string hex(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace

ComplexDocument parse_complex_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("/", "document must be a JSON object");
  const Shape shape = parse_shape(require(doc, "shape", ""), "/shape");
  std::vector<Face> facets = parse_faces(require(doc, "facets", ""), shape, "/facets", false);
  ComplexDocument out{SimplicialComplex::from_facets(shape, std::move(facets)), parse_labels(doc, shape)};
  if (!out.labels.empty()) {
    VertexSet labelled;
    for (const auto& [name, v] : out.labels) labelled.insert(shape.id(v));
    if (!(labelled == out.complex.used_vertices())) {
      throw DocumentError("/labels", "labels must name exactly the vertices used by the facets");
    }
  }
  return out;
}

json face_json(const Face& face, const Shape& shape) {
  json out = json::array();
  for (const Vertex& v : shape.vertices_of(face)) out.push_back({v.component, v.index});
  return out;
}

json faces_json(const std::vector<Face>& faces, const Shape& shape) {
  json out = json::array();
  for (const Face& f : faces) out.push_back(face_json(f, shape));
  return out;
}

json complex_document_json(const SimplicialComplex& complex, const std::map<std::string, Vertex>& labels) {
  json doc;
  doc["shape"] = complex.shape().entries();
  doc["facets"] = faces_json(complex.facets(), complex.shape());
  if (!labels.empty()) {
    json l = json::object();
    for (const auto& [name, v] : labels) l[name] = {v.component, v.index};
    doc["labels"] = l;
  }
  return doc;
}

FreeComplexPresentation parse_matrix_document(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("/", "document must be a JSON object");
  FreeComplexPresentation pres;
  pres.shape = parse_shape(require(doc, "shape", ""), "/shape");
  const auto labels = parse_labels(doc, pres.shape);
  const json& ranks = require(doc, "ranks", "");
  if (!ranks.is_array()) throw DocumentError("/ranks", "ranks must be an array");
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const int r = as_int(ranks[i], "/ranks/" + std::to_string(i));
    if (r < 0) throw DocumentError("/ranks/" + std::to_string(i), "rank must be non-negative");
    pres.ranks.push_back(r);
  }
  const json& matrices = require(doc, "matrices", "");
  if (!matrices.is_array() || matrices.empty()) throw DocumentError("/matrices", "expected a non-empty array of matrices");
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const std::string mpath = "/matrices/" + std::to_string(k);
    const json& rows = matrices[k];
    if (!rows.is_array()) throw DocumentError(mpath, "matrix must be an array of rows");
    const std::size_t cols = rows.empty() ? 0 : (rows[0].is_array() ? rows[0].size() : 0);
    PolyMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string rpath = mpath + "/" + std::to_string(i);
      if (!rows[i].is_array() || rows[i].size() != cols) throw DocumentError(rpath, "rows must have equal length");
      for (std::size_t j = 0; j < cols; ++j) {
        const std::string epath = rpath + "/" + std::to_string(j);
        const json& entry = rows[i][j];
        Polynomial p;
        if (entry.is_number_integer()) {
          p = Polynomial(as_int(entry, epath));
        } else if (entry.is_string()) {
          try {
            p = parse_polynomial(entry.get<std::string>(), pres.shape, labels);
          } catch (const InvalidInput& e) {
            throw DocumentError(epath, e.what());
          }
        } else {
          throw DocumentError(epath, "entry must be a polynomial string");
        }
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = std::move(p);
      }
    }
    pres.differentials.push_back(std::move(m));
  }
  pres.validate();
  return pres;
}

json matrix_document_json(const FreeComplexPresentation& presentation) {
  json doc;
  doc["shape"] = presentation.shape.entries();
  doc["ranks"] = presentation.ranks;
  json matrices = json::array();
  for (const PolyMatrix& m : presentation.differentials) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string(presentation.shape));
      rows.push_back(row);
    }
    matrices.push_back(rows);
  }
  doc["matrices"] = matrices;
  return doc;
}

json certificate_json(const VcmCertificate& certificate) {
  const Shape& shape = certificate.input.shape();
  json j;
  j["input"] = complex_document_json(certificate.input);
  j["augmentation"] = faces_json(certificate.augmentation.facets(), shape);
  j["verdict"] = certificate.verdict;
  j["codim"] = certificate.codim;
  j["pdim"] = {{"field", certificate.pdim.field.name()}, {"value", certificate.pdim.projective_dimension}};
  if (certificate.shelling) j["shelling"] = faces_json(*certificate.shelling, shape);
  return j;
}

VcmCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw DocumentError("/certificate", "certificate must be an object");
  const json& input = require(j, "input", "/certificate");
  const Shape shape = parse_shape(require(input, "shape", "/certificate/input"), "/certificate/input/shape");
  const auto facets = parse_faces(require(input, "facets", "/certificate/input"), shape, "/certificate/input/facets", false);
  const auto augmentation = parse_faces(require(j, "augmentation", "/certificate"), shape, "/certificate/augmentation", true);
  VcmCertificate cert{SimplicialComplex::from_facets(shape, facets),
                      SimplicialComplex::from_facets(shape, augmentation),
                      false,
                      0,
                      {},
                      std::nullopt};
  const json& verdict = require(j, "verdict", "/certificate");
  if (!verdict.is_boolean()) throw DocumentError("/certificate/verdict", "expected a boolean");
  cert.verdict = verdict.get<bool>();
  cert.codim = as_int(require(j, "codim", "/certificate"), "/certificate/codim");
  const json& pdim = require(j, "pdim", "/certificate");
  const json& field = require(pdim, "field", "/certificate/pdim");
  if (!field.is_string()) throw DocumentError("/certificate/pdim/field", "expected a string");
  try {
    cert.pdim.field = CoefficientField::parse(field.get<std::string>());
  } catch (const InvalidInput& e) {
    throw DocumentError("/certificate/pdim/field", e.what());
  }
  cert.pdim.projective_dimension = as_int(require(pdim, "value", "/certificate/pdim"), "/certificate/pdim/value");
  if (const auto it = j.find("shelling"); it != j.end()) {
    cert.shelling = parse_faces(*it, shape, "/certificate/shelling", false);
  }
  return cert;
}

std::string input_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return "fnv1a64:" + hex(h);
}

}  // namespace vcmkit
