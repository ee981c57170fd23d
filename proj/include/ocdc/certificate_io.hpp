#ifndef OCDC_CERTIFICATE_IO_HPP
#define OCDC_CERTIFICATE_IO_HPP

#include <string>

#include "json.hpp"
#include "ocdc/cover.hpp"

namespace ocdc {

/// {"graph": <graph6>, "kind": ..., "elements": [[v, ...], ...],
///  "provenance": ...}. Cycles omit the closing vertex.
nlohmann::json certificate_to_json(const CoverCertificate& c);
/// Throws ParseError for malformed JSON or fields, ValidationError for
/// elements that are not simple cycles or paths.
CoverCertificate certificate_from_json(const nlohmann::json& j);

std::string write_certificate(const CoverCertificate& c);
CoverCertificate read_certificate(const std::string& text);

nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace ocdc

#endif  // OCDC_CERTIFICATE_IO_HPP
