#pragma once

// q-Abel polynomial families, expansion in the G basis, and Lagrange-type
// coefficient extraction.

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "qabel/mpoly.hpp"
#include "qabel/series.hpp"

namespace qabel {

enum class FamilyId {
  classical,  // (x - b)(x - b - na)^(n-1)
  A,          // (x - b) prod_{j=1}^{n-1} (q^j x - [n]a - q^n b)
  G,          // (x - b) prod_{j=1}^{n-1} (q^j x - [n]a - b)
  B_plain,    // x e(-[n]aD) x^(n-1)
  B_general,  // V A_n(x, a, b)
  w,          // prod_{j=0}^{n-1} (q^j x - [n]a - b)
  S,          // x^n + [n] a x^(n-1)
};

/// Short names used by the CLI: abelc, A, G, B, Bg, w, S.
std::string_view family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

/// The n-th member of a family, expanded in x, a, b. Every family starts
/// with the constant 1 at n = 0.
MPoly abel_poly(FamilyId family, int n);

/// Source of family polynomials for identity checks. The standard provider
/// is abel_poly; tests substitute perturbed providers to confirm that the
/// checks notice a wrong formula.
struct Families {
  std::function<MPoly(FamilyId, int)> poly;

  MPoly operator()(FamilyId id, int n) const { return poly(id, n); }

  static const Families& standard();
  /// abel_poly with the constant term of one member shifted by one.
  static Families mutated(FamilyId id, int n);
};

/// Coefficients of a polynomial in the basis G_k(x, a, b).
struct AbelCoefficients {
  FamilyId basis = FamilyId::G;
  std::vector<MPoly> coeffs;

  /// sum_k coeffs[k] * G_k(x, a, b).
  MPoly reconstruct() const;
};

/// Expansion f = sum_k c_k G_k(x, a, b) with
/// c_k = q^-binom(k,2) (D^k f)(q^-k (b + [k]a)) / [k]!. Symbols other than x
/// are treated as constants.
AbelCoefficients abel_expand(const MPoly& f);

enum class LagrangeMode {
  plain,      // f = sum c_n/[n]! z^n E([n]a z)
  general_b,  // f = sum c_n/[n]! z^n E(([n]a + q^n b) z)
  buermann,   // f/(1 + az/q) = sum c_n/[n]! z^n E((q^n b + [n]a) z)
};

/// c_0..c_count for the expansion selected by mode. Requires
/// f.order() >= count (OrderTooSmall otherwise).
std::vector<MPoly> lagrange_coeffs(const PowerSeries& f, LagrangeMode mode, int count);

/// The right-hand side sum_n c_n/[n]! z^n E(shift_n z) of the chosen
/// expansion, truncated at order.
PowerSeries lagrange_series(const std::vector<MPoly>& coeffs, LagrangeMode mode, int order);

/// The left-hand side that lagrange_series must reproduce: f itself, or
/// f/(1 + az/q) in Buermann mode.
PowerSeries lagrange_target(const PowerSeries& f, LagrangeMode mode);

/// Names of the series accepted by builtin_series: e_xz, E_xz, E_neg_yz, z.
const std::vector<std::string_view>& builtin_series_names();

/// e(xz), E(xz), E(-yz) or z at the given order. Throws std::invalid_argument
/// for other names.
PowerSeries builtin_series(std::string_view name, int order);

}  // namespace qabel
