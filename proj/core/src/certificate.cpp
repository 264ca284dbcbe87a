#include "ksz/certificate.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace ksz {

const char* to_string(CertKind kind) {
  switch (kind) {
    case CertKind::ExactReal:
      return "exact";
    case CertKind::Upper:
      return "upper";
    case CertKind::Lower:
      return "lower";
  }
  return "?";
}

const char* to_string(CertMethod method) {
  switch (method) {
    case CertMethod::Enumeration:
      return "enumeration";
    case CertMethod::Spectral:
      return "spectral";
    case CertMethod::Formula:
      return "formula";
    case CertMethod::Heuristic:
      return "heuristic";
  }
  return "?";
}

std::string format_double(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string sign_string(const std::vector<std::int8_t>& signs) {
  std::string s(signs.size(), '+');
  for (std::size_t i = 0; i < signs.size(); ++i) s[i] = signs[i] > 0 ? '+' : '-';
  return s;
}

std::string NormCertificate::to_text() const {
  std::ostringstream out;
  out << "kind: " << to_string(kind) << "\n";
  out << "value: " << format_double(value) << "\n";
  out << "method: " << to_string(method) << "\n";
  for (std::size_t k = 0; k < witness.size(); ++k)
    out << "witness[" << k << "]: " << sign_string(witness[k]) << "\n";
  if (witness_basis_row) out << "witness-basis-row: " << *witness_basis_row << "\n";
  if (!formula.empty()) out << "formula: " << formula << "\n";
  for (const auto& [name, input] : formula_inputs)
    out << "input " << name << ": " << format_double(input) << "\n";
  return out.str();
}

NormCertificate upper_certificate(double value, std::string formula,
                                  std::vector<std::pair<std::string, double>> inputs) {
  NormCertificate cert;
  cert.kind = CertKind::Upper;
  cert.method = CertMethod::Formula;
  cert.value = value;
  cert.formula = std::move(formula);
  cert.formula_inputs = std::move(inputs);
  return cert;
}

}  // namespace ksz
