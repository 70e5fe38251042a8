#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vcmkit/complex.hpp"
#include "vcmkit/errors.hpp"
#include "vcmkit/vres.hpp"

namespace vcmkit {

/// A malformed document. `where` is a byte offset ("byte 17") for syntax
/// errors or a JSON pointer ("/facets/2/0") for semantic ones.
class DocumentError : public InvalidInput {
 public:
  DocumentError(std::string where, const std::string& message)
      : InvalidInput(where + ": " + message), where_(std::move(where)), detail_(message) {}
  [[nodiscard]] const std::string& where() const { return where_; }
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  std::string where_;
  std::string detail_;
};

/// Largest vertex set a document may declare.
inline constexpr int kMaxDocumentVertices = 4096;

/// Complex file: {"shape": [n_1, ...], "facets": [[[i, j], ...], ...], "labels": {"a": [i, j]}}.
/// Components are 1-based and indices 0-based, matching x_{i,j}.
struct ComplexDocument {
  SimplicialComplex complex;
  std::map<std::string, Vertex> labels;
};

[[nodiscard]] ComplexDocument parse_complex_document(std::string_view text);
[[nodiscard]] nlohmann::json complex_document_json(const SimplicialComplex& complex,
                                                   const std::map<std::string, Vertex>& labels = {});

/// Matrix file: {"shape": [...], "ranks": [r_0, ..., r_k], "matrices": [[["poly", ...], ...], ...]}
/// with polynomials over variables x_i_j (or names from an optional "labels" map).
[[nodiscard]] FreeComplexPresentation parse_matrix_document(std::string_view text);
[[nodiscard]] nlohmann::json matrix_document_json(const FreeComplexPresentation& presentation);

[[nodiscard]] nlohmann::json face_json(const Face& face, const Shape& shape);
[[nodiscard]] nlohmann::json faces_json(const std::vector<Face>& faces, const Shape& shape);

[[nodiscard]] nlohmann::json certificate_json(const VcmCertificate& certificate);
/// Inverse of certificate_json; throws DocumentError on malformed input.
[[nodiscard]] VcmCertificate certificate_from_json(const nlohmann::json& j);

/// FNV-1a 64-bit digest, hex encoded with an algorithm prefix.
[[nodiscard]] std::string input_digest(std::string_view bytes);

}  // namespace vcmkit
