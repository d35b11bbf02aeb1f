#include "qabel/qcomb.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qabel/errors.hpp"

namespace qabel {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw InvalidIndex(std::string(what) + ": negative index " + std::to_string(n));
}

class QBinomialTable {
 public:
  QRat get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) extend();
    return rows_[n][k];
  }

 private:
  void extend() {
    const int n = static_cast<int>(rows_.size());
    std::vector<QRat> row(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (int k = 1; k < n; ++k) {
      row[k] = rows_[n - 1][k - 1] + QRat::q_pow(k) * rows_[n - 1][k];
    }
    rows_.push_back(std::move(row));
  }

  std::shared_mutex mutex_;
  std::vector<std::vector<QRat>> rows_;
};

}  // namespace

QRat qint(int n) {
  require_nonnegative(n, "qint");
  return QRat(QPoly(std::vector<mpq_class>(static_cast<std::size_t>(n), mpq_class(1))));
}

QRat qfac(int n) {
  require_nonnegative(n, "qfac");
  QRat out = 1;
  for (int j = 2; j <= n; ++j) out *= qint(j);
  return out;
}

QRat qbinom(int n, int k) {
  require_nonnegative(n, "qbinom");
  if (k < 0 || k > n) return {};
  static QBinomialTable table;
  return table.get(n, k);
}

mpz_class factorial(int n) {
  require_nonnegative(n, "factorial");
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class binomial(int n, int k) {
  require_nonnegative(n, "binomial");
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

MPoly qprod(const MPoly& y, const MPoly& x, int n, ProdSign sign) {
  require_nonnegative(n, "qprod");
  MPoly out = 1;
  for (int j = 0; j < n; ++j) {
    const MPoly shifted = x * QRat::q_pow(j);
    out *= sign == ProdSign::plus ? y + shifted : y - shifted;
  }
  return out;
}

MPoly qpoch(const MPoly& u, int n) { return qprod(MPoly(1), u, n, ProdSign::minus); }

}  // namespace qabel
