#include <doctest.h>

#include <set>

#include "qabel/errors.hpp"
#include "qabel/registry.hpp"

using namespace qabel;

TEST_SUITE("registry") {
  TEST_CASE("catalog has unique ids and covers the required equations") {
    std::set<std::string> ids;
    for (const auto& info : identity_catalog()) {
      CHECK(ids.insert(info.id).second);
      CHECK_FALSE(info.summary.empty());
      CHECK_FALSE(info.range_text().empty());
    }
    for (const char* id : {"0.3", "0.17", "1.3", "1.5", "1.8", "2.1", "2.2", "2.3", "2.4", "3.2", "3.4",
                           "4.2", "4.4", "4.7", "4.9", "4.13", "5.3", "5.4", "5.5", "5.6", "5.7",
                           "5.8", "5.9", "5.10", "5.11", "5.12", "e-inverse", "e-ratio"}) {
      CAPTURE(id);
      CHECK(ids.count(id) == 1);
    }
  }

  TEST_CASE("spec examples for check_identity") {
    CHECK(check_identity("1.3", {{"n", 3}}).passed());
    CHECK(check_identity("0.17", {{"n", 2}}).passed());
    CHECK(check_identity("5.9", {{"n", 1}}).passed());
    CHECK(check_identity("3.4", {{"n", 2}}).passed());
    const CheckResult r = check_identity("2.1", {{"n", 4}, {"k", 2}});
    CHECK(r.identity_id == "2.1");
    CHECK(r.params == Params{{"k", 2}, {"n", 4}});
    CHECK_FALSE(r.difference.has_value());
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(check_identity("9.9", {{"n", 1}}), UnknownIdentity);
    CHECK_THROWS_AS(identity_info("nope"), UnknownIdentity);
    CHECK_THROWS_AS(check_identity("1.3", {}), MissingParam);
    CHECK_THROWS_AS(check_identity("1.3", {{"n", 99}}), ParamOutOfRange);
    CHECK_THROWS_AS(check_identity("2.1", {{"n", 2}, {"k", 3}}), ParamOutOfRange);
    CHECK_THROWS_AS(instances("nope", {}), UnknownIdentity);
  }

  TEST_CASE("instances follow the parameter kinds") {
    CHECK(instances("1.3", {4, 8}).size() == 5);
    CHECK(instances("1.3", {20, 8}).size() == 11);
    const auto series = instances("1.5", {6, 12});
    REQUIRE(series.size() == 1);
    CHECK(series[0].at("N") == 12);
    // k <= n leaves (n+1)(n+2)/2 pairs.
    CHECK(instances("2.1", {3, 8}).size() == 10);
    // The fixed parameter m sweeps 0..5 regardless of max_n.
    CHECK(instances("4.7", {2, 8}).size() == 18);
  }

  TEST_CASE("id ordering") {
    CHECK(id_less("0.3", "0.17"));
    CHECK(id_less("0.17", "1.3"));
    CHECK(id_less("4.9", "4.10"));
    CHECK_FALSE(id_less("1.3", "1.3"));
    CHECK_FALSE(id_less("1.3", "0.17"));
  }

  TEST_CASE("run_checks is sorted and independent of the job count") {
    const RangeOptions opts{4, 6};
    const auto serial = run_checks({"2.2", "1.3"}, opts, 1);
    const auto parallel = run_checks({"2.2", "1.3"}, opts, 4);
    REQUIRE(serial.size() == parallel.size());
    CHECK(serial.front().identity_id == "1.3");
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].identity_id == parallel[i].identity_id);
      CHECK(serial[i].params == parallel[i].params);
      CHECK(serial[i].passed());
    }
  }

  TEST_CASE("a mutated family is detected") {
    const Families mutated = Families::mutated(FamilyId::G, 3);
    const CheckResult r = check_identity("limit-G", {{"n", 3}}, mutated);
    CHECK_FALSE(r.passed());
    REQUIRE(r.difference.has_value());
    CHECK_FALSE(r.difference->empty());
    CHECK(check_identity("limit-G", {{"n", 2}}, mutated).passed());
    std::size_t failed = 0;
    for (const auto& c : run_checks({}, {}, 4, mutated)) failed += c.passed() ? 0 : 1;
    CHECK(failed > 0);
  }
}
