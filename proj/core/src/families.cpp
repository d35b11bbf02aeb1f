#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "qabel/abel.hpp"
#include "qabel/errors.hpp"
#include "qabel/operators.hpp"
#include "qabel/qcomb.hpp"

namespace qabel {

namespace {

struct FamilyName {
  FamilyId id;
  std::string_view name;
};

constexpr FamilyName kFamilyNames[] = {
    {FamilyId::classical, "abelc"}, {FamilyId::A, "A"}, {FamilyId::G, "G"},
    {FamilyId::B_plain, "B"},       {FamilyId::B_general, "Bg"}, {FamilyId::w, "w"},
    {FamilyId::S, "S"},
};

MPoly x_monomial(int n) { return MPoly::term(1, Monomial::of(Symbol::x, static_cast<unsigned>(n))); }

// (x - b) prod_{j=1}^{n-1} (q^j x - offset)
MPoly abel_product(int n, const MPoly& offset) {
  const MPoly x = MPoly::var(Symbol::x);
  MPoly out = x - MPoly::var(Symbol::b);
  for (int j = 1; j < n; ++j) out *= x * QRat::q_pow(j) - offset;
  return out;
}

MPoly build(FamilyId family, int n) {
  if (n < 0) throw InvalidIndex("family index must be nonnegative, got " + std::to_string(n));
  if (n == 0) return 1;
  const MPoly x = MPoly::var(Symbol::x);
  const MPoly a = MPoly::var(Symbol::a);
  const MPoly b = MPoly::var(Symbol::b);
  switch (family) {
    case FamilyId::classical:
      return (x - b) * pow(x - b - a * QRat(n), static_cast<unsigned>(n - 1));
    case FamilyId::A:
      return abel_product(n, qint(n) * a + QRat::q_pow(n) * b);
    case FamilyId::G:
      return abel_product(n, qint(n) * a + b);
    case FamilyId::B_plain:
      return x * apply(exp_dseries(ExpKind::small_e, -(qint(n) * a)), x_monomial(n - 1), Symbol::x);
    case FamilyId::B_general:
      return v_operator(build(FamilyId::A, n), Symbol::x);
    case FamilyId::w: {
      const MPoly offset = qint(n) * a + b;
      MPoly out = 1;
      for (int j = 0; j < n; ++j) out *= x * QRat::q_pow(j) - offset;
      return out;
    }
    case FamilyId::S:
      return x_monomial(n) + qint(n) * a * x_monomial(n - 1);
  }
  throw std::logic_error("unhandled family");
}

class FamilyCache {
 public:
  MPoly get(FamilyId id, int n) {
    const std::pair key{id, n};
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    MPoly value = build(id, n);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<FamilyId, int>, MPoly> cache_;
};

}  // namespace

std::string_view family_name(FamilyId id) {
  for (const auto& f : kFamilyNames) {
    if (f.id == id) return f.name;
  }
  return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (const auto& f : kFamilyNames) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

MPoly abel_poly(FamilyId family, int n) { return build(family, n); }

const Families& Families::standard() {
  static FamilyCache cache;
  static const Families families{[](FamilyId id, int n) { return cache.get(id, n); }};
  return families;
}

Families Families::mutated(FamilyId id, int n) {
  return Families{[id, n](FamilyId fid, int k) {
    MPoly p = standard()(fid, k);
    if (fid == id && k == n) p += MPoly(1);
    return p;
  }};
}

}  // namespace qabel
