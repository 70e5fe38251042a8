#include "vcmkit/commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>

#include "vcmkit/document.hpp"
#include "vcmkit/homology.hpp"
#include "vcmkit/shelling.hpp"
#include "vcmkit/stanley_reisner.hpp"

namespace vcmkit::cli {

using nlohmann::json;

namespace {

json base_report(const char* command, const std::string& bytes) {
  json report;
  report["command"] = command;
  report["input_digest"] = input_digest(bytes);
  return report;
}

// Runs `body`, turning library errors into an input-error report.
CommandResult guarded(const char* command, const std::string& bytes, const CommandOptions* options,
                      const std::function<CommandResult(json)>& body) {
  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    json report = base_report(command, bytes);
    if (options) report["field"] = options->field.name();
    result = body(std::move(report));
  } catch (const DocumentError& e) {
    result.report = base_report(command, bytes);
    result.report["error"] = {{"where", e.where()}, {"message", e.detail()}};
    result.exit_code = kInputError;
  } catch (const Error& e) {
    result.report = base_report(command, bytes);
    result.report["error"] = {{"message", e.what()}};
    result.exit_code = kInputError;
  }
  if (options && options->timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    result.report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return result;
}

std::optional<json> recheck(const SimplicialComplex& expected_input, const CommandOptions& options) {
  if (!options.recheck_report) return std::nullopt;
  json previous;
  try {
    previous = json::parse(*options.recheck_report);
  } catch (const json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "recheck report is not valid JSON");
  }
  if (!previous.is_object() || !previous.contains("certificate")) {
    throw DocumentError("/certificate", "recheck report carries no certificate");
  }
  const VcmCertificate cert = certificate_from_json(previous["certificate"]);
  json out;
  if (!(cert.input == expected_input)) {
    out = {{"ok", false}, {"reason", "certificate was issued for a different complex"}};
    return out;
  }
  const RecheckResult r = recheck_certificate(cert);
  out = {{"ok", r.ok}};
  if (!r.ok) out["reason"] = r.reason;
  return out;
}

}  // namespace

CommandResult cmd_info(const std::string& document) {
  return guarded("info", document, nullptr, [&](json report) {
    const ComplexDocument doc = parse_complex_document(document);
    const SimplicialComplex& complex = doc.complex;
    const Shape& shape = complex.shape();
    json info;
    info["shape"] = shape.entries();
    info["facet_count"] = complex.facets().size();
    info["dim"] = *complex.dim();
    info["pure"] = is_pure(complex);
    info["balanced"] = is_balanced(complex);
    const RelevantPurityReport purity = relevant_purity_check(complex);
    info["relevance"] = {{"relevant_facets", purity.relevant_facets.size()},
                         {"irrelevant_facets", complex.facets().size() - purity.relevant_facets.size()}};
    info["relevant_purity"] = {{"pass", purity.equal_dimension}, {"vacuous", purity.vacuous}};
    info["gallery_connected"] = is_pure(complex) ? json(gallery_connected(complex)) : json(nullptr);
    try {
      info["codim"] = codim(complex);
    } catch (const EmptyVariety&) {
      info["codim"] = nullptr;
    }
    info["codim_affine"] = codim_affine(complex);
    info["b_saturated"] = is_B_saturated(complex);
    report["info"] = info;
    return CommandResult{report, kVerdictTrue};
  });
}

CommandResult cmd_check_cm(const std::string& document, const CommandOptions& options) {
  return guarded("check-cm", document, &options, [&](json report) {
    const SimplicialComplex complex = parse_complex_document(document).complex;
    const Shape& shape = complex.shape();
    const ReisnerResult reisner = is_CM_reisner(complex, options.field);
    const int pdim = projective_dimension(complex, options.field);
    const int codim_a = codim_affine(complex);
    json r = {{"cohen_macaulay", reisner.cohen_macaulay}};
    if (reisner.witness_face) {
      r["witness"] = {{"face", face_json(*reisner.witness_face, shape)}, {"degree", reisner.witness_degree}};
    }
    report["reisner"] = r;
    report["pdim"] = {{"projective_dimension", pdim}, {"codim_affine", codim_a}, {"cohen_macaulay", pdim == codim_a}};
    report["agreement"] = reisner.cohen_macaulay == (pdim == codim_a);
    report["cohen_macaulay"] = reisner.cohen_macaulay && pdim == codim_a;
    return CommandResult{report, report["cohen_macaulay"].get<bool>() ? kVerdictTrue : kVerdictFalse};
  });
}

CommandResult cmd_certify_balanced(const std::string& document, const CommandOptions& options) {
  return guarded("certify-balanced", document, &options, [&](json report) {
    const SimplicialComplex complex = parse_complex_document(document).complex;
    if (auto rc = recheck(complex, options)) {
      report["recheck"] = *rc;
      return CommandResult{report, (*rc)["ok"].get<bool>() ? kVerdictTrue : kVerdictFalse};
    }
    const VcmCertificate cert = certify_balanced(complex, options.field);
    report["certificate"] = certificate_json(cert);
    report["pdim_equals_codim"] = cert.verdict;
    return CommandResult{report, cert.verdict ? kVerdictTrue : kVerdictFalse};
  });
}

CommandResult cmd_search(const std::string& document, const CommandOptions& options) {
  return guarded("search", document, &options, [&](json report) {
    const SimplicialComplex parsed = parse_complex_document(document).complex;
    const SimplicialComplex complex = saturate_by_B(parsed);
    report["saturated_input"] = !(complex == parsed);
    if (auto rc = recheck(complex, options)) {
      report["recheck"] = *rc;
      return CommandResult{report, (*rc)["ok"].get<bool>() ? kVerdictTrue : kVerdictFalse};
    }
    if (complex.is_void()) {
      report["status"] = "exhausted";
      report["reason"] = "no relevant facets after saturation";
      return CommandResult{report, kExhausted};
    }
    if (!is_pure(complex)) {
      report["status"] = "exhausted";
      report["reason"] = "relevant facets have unequal dimensions";
      return CommandResult{report, kExhausted};
    }
    const SearchOutcome outcome = augmentation_search(complex, options.field, options.budget);
    report["status"] = to_string(outcome.status);
    report["candidates"] = outcome.candidate_count;
    report["subsets_tested"] = outcome.subsets_tested;
    if (outcome.certificate) {
      report["certificate"] = certificate_json(*outcome.certificate);
      return CommandResult{report, kVerdictTrue};
    }
    report["reason"] = outcome.reason;
    return CommandResult{report, kExhausted};
  });
}

CommandResult cmd_verify_complex(const std::string& matrix_document) {
  return guarded("verify-complex", matrix_document, nullptr, [&](json report) {
    const FreeComplexPresentation pres = parse_matrix_document(matrix_document);
    const CompositionReport composition = compose_check(pres);
    json pairs = json::array();
    for (const CompositionResult& p : composition.pairs) {
      json entry = {{"pair", p.pair}, {"zero", p.zero}};
      if (p.offending_entry) entry["entry"] = {p.offending_entry->first, p.offending_entry->second};
      pairs.push_back(entry);
    }
    report["pairs"] = pairs;
    report["d_squared_zero"] = composition.ok();
    return CommandResult{report, composition.ok() ? kVerdictTrue : kVerdictFalse};
  });
}

CommandResult cmd_fixtures(const std::string& name, const std::string& out_dir) {
  return guarded("fixtures", name, nullptr, [&](json report) {
    const ExampleFixture fixture = example_fixture(name);
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw InvalidInput("cannot create output directory '" + out_dir + "': " + ec.message());
    json written = json::array();
    const auto write = [&](const fs::path& path, const json& content) {
      std::ofstream out(path);
      if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
      out << content.dump(2) << '\n';
      written.push_back(path.string());
    };
    write(fs::path(out_dir) / (name + ".json"), complex_document_json(fixture.complex, fixture.labels));
    if (fixture.presentation) {
      write(fs::path(out_dir) / (name + ".matrices.json"), matrix_document_json(*fixture.presentation));
    }
    report["written"] = written;
    return CommandResult{report, kVerdictTrue};
  });
}

}  // namespace vcmkit::cli
