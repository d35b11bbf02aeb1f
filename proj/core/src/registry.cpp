#include "qabel/registry.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <sstream>
#include <thread>

#include "identity_table.hpp"
#include "qabel/errors.hpp"

namespace qabel {

namespace detail {

bool Residual::is_zero() const {
  return std::visit([](const auto& v) { return v.is_zero(); }, value);
}

std::string Residual::to_string() const {
  return label + ": " + std::visit([](const auto& v) { return v.to_string(); }, value);
}

}  // namespace detail

namespace {

using detail::Identity;

const std::vector<Identity>& table() {
  static const std::vector<Identity> identities = [] {
    std::vector<Identity> t;
    detail::register_classical(t);
    detail::register_q_identities(t);
    return t;
  }();
  return identities;
}

const Identity& find_identity(std::string_view id) {
  for (const auto& entry : table()) {
    if (entry.info.id == id) return entry;
  }
  throw UnknownIdentity(std::string(id));
}

void validate(const Identity& entry, const Params& params) {
  const auto& id = entry.info.id;
  for (const auto& range : entry.info.params) {
    auto it = params.find(range.name);
    if (it == params.end()) throw MissingParam(id, range.name);
    if (it->second < range.min || it->second > range.max) {
      throw ParamOutOfRange("identity '" + id + "': " + range.name + " = " +
                            std::to_string(it->second) + " outside [" + std::to_string(range.min) +
                            ", " + std::to_string(range.max) + "]");
    }
  }
  for (const auto& [name, value] : params) {
    const bool known = std::any_of(entry.info.params.begin(), entry.info.params.end(),
                                   [&](const ParamRange& r) { return r.name == name; });
    if (!known) throw ParamOutOfRange("identity '" + id + "' has no parameter '" + name + "'");
  }
  if (entry.admissible && !entry.admissible(params)) {
    throw ParamOutOfRange("identity '" + id + "': parameter combination not covered");
  }
}

// Splits "post-2.4" into {"post-", "2", ".", "4"}.
std::vector<std::string_view> natural_chunks(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const bool digit = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
    std::size_t j = i;
    while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) != 0) == digit) ++j;
    out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool is_number(std::string_view s) {
  return !s.empty() && std::isdigit(static_cast<unsigned char>(s[0])) != 0;
}

}  // namespace

std::string IdentityInfo::range_text() const {
  if (params.empty()) return "-";
  std::ostringstream os;
  bool first = true;
  for (const auto& p : params) {
    if (!first) os << ' ';
    first = false;
    os << p.name << '=' << p.min << ".." << p.max;
    if (p.kind == ParamKind::order) os << "(order)";
  }
  return os.str();
}

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> catalog = [] {
    std::vector<IdentityInfo> out;
    for (const auto& entry : table()) out.push_back(entry.info);
    return out;
  }();
  return catalog;
}

const IdentityInfo& identity_info(std::string_view id) { return find_identity(id).info; }

std::vector<Params> instances(std::string_view id, const RangeOptions& options) {
  const Identity& entry = find_identity(id);
  std::vector<Params> out{Params{}};
  for (const auto& range : entry.info.params) {
    int lo = range.min;
    int hi = range.max;
    switch (range.kind) {
      case ParamKind::degree:
        hi = std::min(hi, options.max_n);
        break;
      case ParamKind::order:
        if (options.order < range.min || options.order > range.max) {
          throw ParamOutOfRange("identity '" + entry.info.id + "': series order " +
                                std::to_string(options.order) + " outside [" +
                                std::to_string(range.min) + ", " + std::to_string(range.max) +
                                "]");
        }
        lo = hi = options.order;
        break;
      case ParamKind::fixed:
        break;
    }
    std::vector<Params> next;
    for (const auto& partial : out) {
      for (int v = lo; v <= hi; ++v) {
        Params p = partial;
        p[range.name] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  if (entry.admissible) std::erase_if(out, [&](const Params& p) { return !entry.admissible(p); });
  return out;
}

CheckResult check_identity(std::string_view id, const Params& params, const Families& families) {
  const Identity& entry = find_identity(id);
  validate(entry, params);

  CheckResult result;
  result.identity_id = entry.info.id;
  result.params = params;
  const auto start = std::chrono::steady_clock::now();
  try {
    const detail::Residuals residuals = entry.check(params, families);
    result.status = CheckStatus::pass;
    for (const auto& r : residuals) {
      if (!r.is_zero()) {
        result.status = CheckStatus::fail;
        result.difference = r.to_string();
        break;
      }
    }
  } catch (const Error& e) {
    result.status = CheckStatus::fail;
    result.difference = std::string("error: ") + e.what();
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids,
                                    const RangeOptions& options, int jobs,
                                    const Families& families) {
  std::vector<std::pair<std::string, Params>> tasks;
  std::vector<std::string> selected = ids;
  if (selected.empty()) {
    for (const auto& info : identity_catalog()) selected.push_back(info.id);
  }
  for (const auto& id : selected) {
    for (auto& p : instances(id, options)) tasks.emplace_back(id, std::move(p));
  }

  std::vector<CheckResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = check_identity(tasks[i].first, tasks[i].second, families);
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, jobs));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < std::min(workers, tasks.size()); ++t) pool.emplace_back(worker);
  }

  std::stable_sort(results.begin(), results.end(), [](const CheckResult& l, const CheckResult& r) {
    if (l.identity_id != r.identity_id) return id_less(l.identity_id, r.identity_id);
    for (const auto& range : find_identity(l.identity_id).info.params) {
      const int lv = l.params.at(range.name);
      const int rv = r.params.at(range.name);
      if (lv != rv) return lv < rv;
    }
    return false;
  });
  return results;
}

bool id_less(std::string_view lhs, std::string_view rhs) {
  const auto a = natural_chunks(lhs);
  const auto b = natural_chunks(rhs);
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    const bool na = is_number(a[i]);
    const bool nb = is_number(b[i]);
    if (na && nb) {
      const mpz_class va(std::string(a[i]));
      const mpz_class vb(std::string(b[i]));
      if (va != vb) return va < vb;
    } else if (na != nb) {
      return na;
    } else if (a[i] != b[i]) {
      return a[i] < b[i];
    }
  }
  return a.size() < b.size();
}

}  // namespace qabel
