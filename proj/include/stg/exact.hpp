#pragma once

#include <gmpxx.h>

#include <vector>

#include "stg/graph.hpp"

namespace stg {

using BigInt = mpz_class;
using BigRat = mpq_class;
using RatMatrix = std::vector<std::vector<BigRat>>;

// gmpxx has no long long constructors; long is the same width here.
static_assert(sizeof(long) == sizeof(long long));
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }
inline BigRat to_bigrat(long long v) { return BigRat(static_cast<long>(v)); }

BigInt binomial(long long n, long long k);

// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
BigInt determinant(std::vector<std::vector<BigInt>> m);
BigInt determinant(const DistanceMatrix& m);

// det D(T) = (-1)^(n-1) (n-1) 2^(n-2) for any tree T on n >= 2 vertices.
BigInt tree_det_formula(int n);

// det D(G) for G an odd cycle C_{2k+1} with m pendant vertices attached:
// (-2)^m * (k(k+1) + (2k+1)/2 * m). Integer whenever m is even.
BigRat unicyclic_odd_det_formula(int k, int m);

RatMatrix to_rational(const DistanceMatrix& m);
inline BigRat to_rational(const BigInt& z) { return {z}; }

// Exact inverse via Gauss-Jordan; throws SingularMatrixError.
RatMatrix invert_exact(const RatMatrix& m);

} // namespace stg
