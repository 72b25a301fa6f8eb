#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "qcat/verify.hpp"

using namespace qcat;

TEST_CASE("registry shape") {
  const auto ids = verification_ids();
  CHECK(ids.size() == 42);
  const auto defaults = default_verification_ids();
  CHECK(defaults.size() == ids.size() - 3);
  for (const auto& id : ids) {
    CHECK(is_verification_id(id));
    const bool in_defaults =
        std::find(defaults.begin(), defaults.end(), id) != defaults.end();
    CHECK(in_defaults == !is_expected_fail_id(id));
  }
  CHECK(is_expected_fail_id("cor-N3sum2"));
  CHECK(is_expected_fail_id("rec-N-altbounds"));
  CHECK(is_expected_fail_id("rec-N2-altbounds"));
  CHECK_FALSE(is_expected_fail_id("cor-N3sum2-fixed"));
  CHECK_FALSE(is_verification_id("no-such-check"));
}

TEST_CASE("single check with explicit bounds") {
  const VerificationReport r = run_verification("count-dyck", 6);
  CHECK(r.id == "count-dyck");
  CHECK(r.pass);
  CHECK_FALSE(r.expected_fail);
  CHECK(r.bounds == "n<=6");
  CHECK(r.detail.empty());

  const VerificationReport s = run_verification("thm-INVMAJ", 4, 2);
  CHECK(s.pass);
  CHECK(s.bounds == "r<=2 n<=4");

  const VerificationReport t = run_verification("series-defCn", 6);
  CHECK(t.pass);
  CHECK(t.bounds == "order<=6");
}

TEST_CASE("default bounds are applied when zero is passed") {
  const VerificationReport r = run_verification("count-sym");
  CHECK(r.pass);
  CHECK(r.bounds == "n<=8");
  const VerificationReport s = run_verification("count-rdyck", 0, 0);
  CHECK(s.pass);
  CHECK(s.bounds == "r<=3 n<=6");
}

TEST_CASE("documented counterexamples fail with their witness") {
  const VerificationReport r = run_verification("cor-N3sum2");
  CHECK_FALSE(r.pass);
  CHECK(r.expected_fail);
  CHECK(r.detail.find("(n,r)=(2,1)") != std::string::npos);

  const VerificationReport a = run_verification("rec-N-altbounds");
  CHECK_FALSE(a.pass);
  CHECK(a.detail.find("(n,r)=(2,1)") != std::string::npos);

  const VerificationReport b = run_verification("rec-N2-altbounds");
  CHECK_FALSE(b.pass);
  CHECK(b.detail.find("(n,r)=(2,1)") != std::string::npos);

  // the corrected statements hold
  CHECK(run_verification("cor-N3sum2-fixed", 4).pass);
  CHECK(run_verification("rec-N", 6).pass);
  CHECK(run_verification("rec-N2", 6).pass);
}

TEST_CASE("unknown ids are rejected") {
  CHECK_THROWS_AS(run_verification("no-such-check"), std::invalid_argument);
}

TEST_CASE("parallel and sequential runs agree") {
  const std::vector<std::string> ids = {"count-dyck", "eq-areaCn", "bij-rho",
                                        "prop-N2N", "series-defCn"};
  const auto seq = run_verifications(ids, 6, 0, false);
  const auto par = run_verifications(ids, 6, 0, true);
  REQUIRE(seq.size() == ids.size());
  REQUIRE(par.size() == ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    CHECK(seq[i].id == ids[i]);  // input order is preserved
    CHECK(par[i].id == seq[i].id);
    CHECK(par[i].pass == seq[i].pass);
    CHECK(par[i].bounds == seq[i].bounds);
    CHECK(par[i].detail == seq[i].detail);
  }
}

TEST_CASE("every default check passes at reduced bounds") {
  // Small bounds keep this fast; the acceptance run uses the full defaults.
  for (const auto& id : default_verification_ids()) {
    const VerificationReport r = run_verification(id, 4, 2);
    CHECK_MESSAGE(r.pass, r.id, ": ", r.detail);
  }
}
