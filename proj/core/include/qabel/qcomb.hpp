#pragma once

// q-integers, q-factorials, Gaussian binomials and shifted products.

#include <gmpxx.h>

#include "qabel/mpoly.hpp"
#include "qabel/qfield.hpp"

namespace qabel {

/// binom(n, 2) = n(n-1)/2, which is 0 for n in {0, 1}.
constexpr long binom2(long n) { return n * (n - 1) / 2; }

/// [n] = 1 + q + ... + q^(n-1); [0] = 0.
QRat qint(int n);

/// [n]! = [1][2]...[n]; [0]! = 1.
QRat qfac(int n);

/// Gaussian binomial coefficient; zero when k lies outside [0, n].
/// Rows are built by the q-Pascal recurrence and memoized.
QRat qbinom(int n, int k);

mpz_class factorial(int n);
mpz_class binomial(int n, int k);

enum class ProdSign { plus, minus };

/// (y†x)^n = prod_{j<n} (y + q^j x) for plus, (y⊣x)^n = prod_{j<n} (y - q^j x)
/// for minus. The empty product is 1.
MPoly qprod(const MPoly& y, const MPoly& x, int n, ProdSign sign);

/// (u; q)_n = prod_{j<n} (1 - q^j u).
MPoly qpoch(const MPoly& u, int n);

}  // namespace qabel
