#include "qabel/qfield.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <utility>

#include "qabel/errors.hpp"

namespace qabel {

namespace {

using ZVec = std::vector<mpz_class>;

void trim_z(ZVec& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

mpz_class content(const ZVec& v) {
  mpz_class g = 0;
  for (const auto& c : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZVec& v) {
  if (v.empty()) return;
  mpz_class g = content(v);
  if (v.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Primitive integer multiple of p with positive leading coefficient.
ZVec primitive_integer_part(const QPoly& p) {
  mpz_class lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  ZVec out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class v = lcm / c.get_den();
    out.emplace_back(v * c.get_num());
  }
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b, up to a nonzero scalar factor.
ZVec pseudo_remainder(ZVec a, const ZVec& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lcb = b.back();
  mpz_class la;
  while (!a.empty() && a.size() - 1 >= db) {
    la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lcb != 1) {
      for (auto& c : a) c *= lcb;
    }
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_z(a);
  }
  return a;
}

QPoly from_z(const ZVec& v) {
  std::vector<mpq_class> c;
  c.reserve(v.size());
  for (const auto& z : v) c.emplace_back(z);
  return QPoly(std::move(c));
}

bool all_integer(const std::vector<mpq_class>& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& c) { return c.get_den() == 1; });
}

}  // namespace

QPoly::QPoly(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const mpq_class& c) { return QPoly(std::vector<mpq_class>{c}); }

QPoly QPoly::monomial(const mpq_class& c, std::size_t degree) {
  if (c == 0) return {};
  std::vector<mpq_class> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPoly::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

std::size_t QPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpq_class& c) { return c != 0; }));
}

std::size_t QPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

mpq_class QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : mpq_class(0); }

bool QPoly::has_integer_coeffs() const { return all_integer(coeffs_); }

QPoly& QPoly::operator+=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = *this * rhs; }

QPoly& QPoly::operator*=(const mpq_class& c) {
  if (c == 0) {
    coeffs_.clear();
  } else if (c != 1) {
    for (auto& x : coeffs_) x *= c;
  }
  return *this;
}

QPoly operator*(const QPoly& lhs, const QPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& a = lhs.coeffs_;
  const auto& b = rhs.coeffs_;
  QPoly out;
  if (all_integer(a) && all_integer(b)) {
    std::vector<mpz_class> acc(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      const mpz_class& ai = a[i].get_num();
      for (std::size_t j = 0; j < b.size(); ++j) {
        mpz_addmul(acc[i + j].get_mpz_t(), ai.get_mpz_t(), b[j].get_num_mpz_t());
      }
    }
    out.coeffs_.reserve(acc.size());
    for (auto& z : acc) out.coeffs_.emplace_back(std::move(z));
  } else {
    out.coeffs_.assign(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out.coeffs_[i + j] += a[i] * b[j];
    }
  }
  out.trim();
  return out;
}

QPoly operator-(QPoly p) {
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

QPoly QPoly::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  QPoly out;
  out.coeffs_.assign(k, mpq_class(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

QPoly QPoly::shifted_down(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  assert(valuation() >= k);
  QPoly out;
  out.coeffs_.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  return out;
}

mpq_class QPoly::eval(const mpq_class& q0) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q0;
    acc += *it;
  }
  return acc;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpq_class& c = coeffs_[i];
    if (c == 0) continue;
    mpq_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

QPolyDivision divmod(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.degree() < den.degree()) return {QPoly{}, num};
  std::vector<mpq_class> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dd = d.size() - 1;
  std::vector<mpq_class> quot(rem.size() - dd);
  const mpq_class& lead = d.back();
  const bool monic = lead == 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    mpq_class factor = rem[k + dd];
    if (factor == 0) continue;
    if (!monic) factor /= lead;
    for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= factor * d[i];
    quot[k] = std::move(factor);
  }
  rem.resize(dd);
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly exact_quotient(const QPoly& num, const QPoly& den) {
  if (den.term_count() == 1) {
    const std::size_t k = den.valuation();
    QPoly out = num.shifted_down(k);
    const mpq_class& c = den.coeffs()[k];
    if (c != 1) out *= mpq_class(1 / c);
    return out;
  }
  auto [quot, rem] = divmod(num, den);
  assert(rem.is_zero());
  return quot;
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return from_z(primitive_integer_part(b));
  if (b.is_zero()) return from_z(primitive_integer_part(a));

  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  const std::size_t v = std::min(va, vb);
  const QPoly one = QPoly::monomial(1, v);

  QPoly a0 = a.shifted_down(va);
  QPoly b0 = b.shifted_down(vb);
  if (a0.is_constant() || b0.is_constant()) return one;

  ZVec x = primitive_integer_part(a0);
  ZVec y = primitive_integer_part(b0);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return one;
    ZVec r = pseudo_remainder(std::move(x), y);
    make_primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  make_primitive(x);
  return from_z(x).shifted_up(v);
}

}  // namespace qabel
