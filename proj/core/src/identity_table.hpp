#pragma once

// Internal structure of registry entries.

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qabel/abel.hpp"
#include "qabel/registry.hpp"

namespace qabel::detail {

struct Residual {
  std::string label;
  std::variant<MPoly, PowerSeries> value;

  bool is_zero() const;
  std::string to_string() const;
};

using Residuals = std::vector<Residual>;

struct Identity {
  IdentityInfo info;
  /// Extra constraints among parameters (e.g. k <= n); empty means none.
  std::function<bool(const Params&)> admissible;
  std::function<Residuals(const Params&, const Families&)> check;
};

inline Residual difference(std::string label, const MPoly& lhs, const MPoly& rhs) {
  return {std::move(label), lhs - rhs};
}

inline Residual difference(std::string label, const PowerSeries& lhs, const PowerSeries& rhs) {
  return {std::move(label), lhs - rhs};
}

inline MPoly sym(Symbol s) { return MPoly::var(s); }

inline MPoly x_pow(Symbol s, int e) {
  return MPoly::term(1, Monomial::of(s, static_cast<unsigned>(e)));
}

void register_classical(std::vector<Identity>& table);
void register_q_identities(std::vector<Identity>& table);

}  // namespace qabel::detail
