#include "qabel/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qabel/errors.hpp"

namespace qabel {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kNames{"x", "y", "a", "b", "t"};

// Powers value^0..value^n, computed on demand.
class PowerCache {
 public:
  explicit PowerCache(const MPoly& value) : powers_{MPoly(1), value} {}

  const MPoly& operator()(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<MPoly> powers_;
};

// Coefficient rendering inside a term; `mono` is empty for the constant term.
std::string render_term(const QRat& c, const std::string& mono) {
  const bool simple = c.den().is_one() && c.num().term_count() == 1;
  if (mono.empty()) {
    if (c.den().is_one() && !simple) return "(" + c.to_string() + ")";
    return c.to_string();
  }
  if (c.is_one()) return mono;
  if (simple) return c.to_string() + "*" + mono;
  return "(" + c.to_string() + ")*" + mono;
}

}  // namespace

std::string_view symbol_name(Symbol s) { return kNames[static_cast<std::size_t>(s)]; }

std::optional<Symbol> symbol_from_name(std::string_view name) {
  for (Symbol s : kAllSymbols) {
    if (symbol_name(s) == name) return s;
  }
  return std::nullopt;
}

Monomial Monomial::of(Symbol s, unsigned exponent) { return Monomial{}.with_exponent(s, exponent); }

Monomial Monomial::with_exponent(Symbol s, unsigned exponent) const {
  Monomial m = *this;
  m.exps_[static_cast<std::size_t>(s)] = static_cast<std::uint16_t>(exponent);
  return m;
}

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0U);
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  Monomial m;
  for (std::size_t i = 0; i < kSymbolCount; ++i) {
    m.exps_[i] = static_cast<std::uint16_t>(lhs.exps_[i] + rhs.exps_[i]);
  }
  return m;
}

std::string Monomial::to_string() const {
  // Factors print alphabetically; term order is graded lex independently.
  static constexpr std::array kPrintOrder{Symbol::a, Symbol::b, Symbol::t, Symbol::x, Symbol::y};
  std::string out;
  for (Symbol s : kPrintOrder) {
    const unsigned e = exponent(s);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += symbol_name(s);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

bool GradedLexGreater::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const unsigned dl = lhs.total_degree();
  const unsigned dr = rhs.total_degree();
  if (dl != dr) return dl > dr;
  for (Symbol s : kAllSymbols) {
    if (lhs.exponent(s) != rhs.exponent(s)) return lhs.exponent(s) > rhs.exponent(s);
  }
  return false;
}

MPoly::MPoly(const QRat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::var(Symbol s) { return term(1, Monomial::of(s)); }

MPoly MPoly::term(const QRat& c, const Monomial& m) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

QRat MPoly::constant_term() const { return coeff(Monomial{}); }

QRat MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? QRat() : it->second;
}

bool MPoly::contains(Symbol s) const { return degree_in(s) > 0; }

unsigned MPoly::degree_in(Symbol s) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(s));
  return d;
}

unsigned MPoly::total_degree() const {
  return terms_.empty() ? 0U : terms_.begin()->first.total_degree();
}

void MPoly::add_term(const Monomial& m, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const QRat& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& [m, coeff] : terms_) coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  if (lhs.is_zero() || rhs.is_zero()) return out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      const Monomial m = ml * mr;
      auto [it, inserted] = out.terms_.try_emplace(m);
      if (inserted) {
        it->second = cl * cr;
      } else {
        it->second += cl * cr;
      }
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

MPoly operator-(MPoly p) {
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const std::string mono = m.is_one() ? std::string() : m.to_string();
    const bool negative = c.leading_sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    os << render_term(negative ? -c : c, mono);
  }
  return os.str();
}

MPoly pow(const MPoly& base, unsigned exponent) {
  MPoly result = 1;
  MPoly sq = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= sq;
    exponent >>= 1U;
    if (exponent != 0) sq *= sq;
  }
  return result;
}

MPoly subst(const MPoly& p, Symbol s, const MPoly& value) {
  return subst(p, std::map<Symbol, MPoly>{{s, value}});
}

MPoly subst(const MPoly& p, const std::map<Symbol, MPoly>& values) {
  std::vector<std::pair<Symbol, PowerCache>> caches;
  for (const auto& [s, v] : values) caches.emplace_back(s, PowerCache(v));

  // Group terms by the exponents of the substituted symbols so each distinct
  // product of powers is formed once.
  std::map<Monomial, MPoly, GradedLexGreater> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial key;
    Monomial rest = m;
    for (const auto& [s, cache] : caches) {
      key = key.with_exponent(s, m.exponent(s));
      rest = rest.with_exponent(s, 0);
    }
    groups[key] += MPoly::term(c, rest);
  }

  MPoly out;
  for (auto& [key, rest] : groups) {
    MPoly factor = 1;
    for (auto& [s, cache] : caches) {
      const unsigned e = key.exponent(s);
      if (e != 0) factor *= cache(e);
    }
    out += rest * factor;
  }
  return out;
}

MPoly eval_q1(const MPoly& p) {
  MPoly out;
  for (const auto& [m, c] : p.terms()) out += MPoly::term(QRat(c.eval(1)), m);
  return out;
}

std::vector<MPoly> coeffs_in(const MPoly& p, Symbol s) {
  std::vector<MPoly> out(p.degree_in(s) + 1);
  for (const auto& [m, c] : p.terms()) {
    out[m.exponent(s)] += MPoly::term(c, m.with_exponent(s, 0));
  }
  return out;
}

MPoly from_coeffs(const std::vector<MPoly>& coeffs, Symbol s) {
  MPoly out;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    out += coeffs[d] * MPoly::term(1, Monomial::of(s, static_cast<unsigned>(d)));
  }
  return out;
}

mpq_class eval_at(const MPoly& p, const mpq_class& q0, const std::map<Symbol, mpq_class>& values) {
  mpq_class total = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class v = c.eval(q0);
    for (Symbol s : kAllSymbols) {
      const unsigned e = m.exponent(s);
      if (e == 0) continue;
      auto it = values.find(s);
      if (it == values.end()) {
        throw std::invalid_argument("no value assigned to symbol '" + std::string(symbol_name(s)) +
                                    "'");
      }
      mpq_class power = 1;
      for (unsigned i = 0; i < e; ++i) power *= it->second;
      v *= power;
    }
    total += v;
  }
  return total;
}

}  // namespace qabel
