#pragma once

#include <iosfwd>
#include <string>

#include "ksz/sign_matrix.hpp"
#include "ksz/sign_tensor.hpp"

namespace ksz {

// ".pm1" square sign-matrix format: first line the order t, then t lines of
// t characters from {+,-}. Readers accept arbitrary whitespace between
// characters and reject anything else, including trailing content.
void write_pm1(std::ostream& out, const SignMatrix& m);
SignMatrix read_pm1(std::istream& in);
void write_pm1_file(const std::string& path, const SignMatrix& m);
SignMatrix read_pm1_file(const std::string& path);

// ".pmt" sign-tensor format: first line "m n_1 ... n_m", then prod(n_k)
// characters from {+,-} in row-major order (last index fastest).
void write_pmt(std::ostream& out, const SignTensor& t);
SignTensor read_pmt(std::istream& in);
void write_pmt_file(const std::string& path, const SignTensor& t);
SignTensor read_pmt_file(const std::string& path);

}  // namespace ksz
