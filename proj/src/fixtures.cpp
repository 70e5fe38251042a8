#include "vcmkit/errors.hpp"
#include "vcmkit/vres.hpp"

namespace vcmkit {

namespace {

// a, b, c span the first P^2 and d, e, f the second.
std::map<std::string, Vertex> letter_labels() {
  return {{"a", {1, 0}}, {"b", {1, 1}}, {"c", {1, 2}}, {"d", {2, 0}}, {"e", {2, 1}}, {"f", {2, 2}}};
}

SimplicialComplex from_words(const Shape& shape, const std::vector<std::string>& words) {
  const auto labels = letter_labels();
  std::vector<Face> facets;
  for (const std::string& w : words) {
    Face f;
    for (char ch : w) f.insert(shape.id(labels.at(std::string(1, ch))));
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(shape, std::move(facets));
}

PolyMatrix matrix_from(const Shape& shape, const std::vector<std::vector<std::string>>& rows) {
  const auto labels = letter_labels();
  PolyMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_polynomial(rows[i][j], shape, labels);
    }
  }
  return m;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"glued-tetrahedra", "eight-tetrahedra"}; }

ExampleFixture example_fixture(const std::string& name) {
  const Shape shape({2, 2});
  if (name == "glued-tetrahedra") {
    FreeComplexPresentation pres{shape,
                                 {2, 4, 2},
                                 {matrix_from(shape, {{"0", "f", "0", "a"}, {"-c", "-f", "b", "-a"}}),
                                  matrix_from(shape, {{"0", "-b"}, {"a", "0"}, {"0", "-c"}, {"-f", "0"}})}};
    return ExampleFixture{name, from_words(shape, {"adef", "bcde"}), letter_labels(), std::move(pres)};
  }
  if (name == "eight-tetrahedra") {
    FreeComplexPresentation pres{
        shape,
        {3, 8, 5},
        {matrix_from(shape, {{"c*e*f", "0", "0", "a*e*f", "a*b*e", "0", "0", "a*b*c"},
                             {"-c", "-d", "b", "-a", "0", "0", "0", "0"},
                             {"0", "0", "0", "0", "-e", "-f", "d", "-c"}}),
         matrix_from(shape, {{"0", "0", "0", "a", "0"},
                             {"0", "-b", "0", "0", "0"},
                             {"a", "-d", "0", "0", "0"},
                             {"b", "0", "0", "-c", "0"},
                             {"-f", "0", "c", "0", "0"},
                             {"e", "0", "0", "0", "-d"},
                             {"0", "0", "0", "0", "-f"},
                             {"0", "0", "-e", "0", "0"}})}};
    return ExampleFixture{name,
                        from_words(shape, {"bdef", "acef", "bcdf", "acdf", "abdf", "bcde", "acde", "abce"}),
                        letter_labels(), std::move(pres)};
  }
  throw InvalidInput("unknown fixture '" + name + "' (known: glued-tetrahedra, eight-tetrahedra)");
}

}  // namespace vcmkit
