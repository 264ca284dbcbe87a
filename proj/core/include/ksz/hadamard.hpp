#pragma once

#include <cstdint>

#include "ksz/sign_matrix.hpp"

namespace ksz {

/// True iff H*H^T = t*I exactly, computed with integer popcount dot products.
bool verify_hadamard(const SignMatrix& h);

/// Run verify_hadamard and mark the matrix certified on success.
/// Throws std::invalid_argument when the check fails.
void certify_hadamard(SignMatrix& h);

/// Negate rows/columns until the first row and first column are all +1.
/// Preserves the Hadamard property and is idempotent.
void normalize(SignMatrix& h);

/// Doubling step [[H,H],[H,-H]], certified and normalized.
/// Requires a certified input (order 1 is accepted as-is).
SignMatrix sylvester_double(const SignMatrix& h);

/// Quadratic-residue construction of order q+1 for a prime q = 3 (mod 4),
/// certified and normalized.
SignMatrix paley_one(std::int64_t q);

/// Kronecker product of two certified matrices, certified and normalized.
SignMatrix kronecker(const SignMatrix& a, const SignMatrix& b);

/// Realize a construction recipe into a certified, normalized matrix.
SignMatrix realize(const Recipe& recipe);

bool is_prime(std::int64_t n);

}  // namespace ksz
