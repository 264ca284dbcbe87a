#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ksz {

enum class CertKind { ExactReal, Upper, Lower };
enum class CertMethod { Enumeration, Spectral, Formula, Heuristic };

const char* to_string(CertKind kind);
const char* to_string(CertMethod method);

// Shortest round-trip decimal rendering, locale independent.
std::string format_double(double value);

std::string sign_string(const std::vector<std::int8_t>& signs);

/// A certified norm statement. ExactReal and Lower certificates carry a
/// replayable witness (sign vectors, or a basis row); Upper certificates
/// carry the formula identifier and its inputs.
struct NormCertificate {
  CertKind kind = CertKind::Upper;
  CertMethod method = CertMethod::Formula;
  double value = 0.0;
  std::vector<std::vector<std::int8_t>> witness;
  std::optional<int> witness_basis_row;
  std::string formula;
  std::vector<std::pair<std::string, double>> formula_inputs;

  std::string to_text() const;
};

NormCertificate upper_certificate(double value, std::string formula,
                                  std::vector<std::pair<std::string, double>> inputs);

}  // namespace ksz
