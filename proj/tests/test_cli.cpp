#include <doctest.h>

#include "klein4/suite.hpp"

using namespace klein4;

TEST_CASE("suite runs and reports") {
  SuiteConfig config;
  config.rep_selector = "Vreg";
  config.suite = "all";
  Report r = run_suite(config);
  CHECK(r.all_pass());
  CHECK(r.claims.size() > 10);
  // suite order: leadterms, identities, hsop, hilbert, transfer, lemmas,
  // noether, sagbi
  CHECK(r.claims.front().id.rfind("leadterms.", 0) == 0);
  CHECK(r.claims.back().id.rfind("sagbi.", 0) == 0);
}

TEST_CASE("reports are byte identical modulo timings") {
  SuiteConfig config;
  config.rep_selector = "Omega-:2";
  config.suite = "all";
  Report a = run_suite(config);
  Report b = run_suite(config);
  CHECK(report_to_json(a, false) == report_to_json(b, false));
  CHECK(report_to_text(a) == report_to_text(b));
}

TEST_CASE("lambda flag completes a bare selector") {
  SuiteConfig config;
  config.rep_selector = "Vm:2";
  config.lambda_text = "t";
  config.suite = "hsop";
  Report r = run_suite(config);
  CHECK(r.rep_selector == "Vm:2:lambda=t");
  CHECK(r.all_pass());
}

TEST_CASE("identities suite flags the stated-but-inconsistent relation as handled") {
  SuiteConfig config;
  config.rep_selector = "Vm:2:lambda=l";
  config.suite = "identities";
  Report r = run_suite(config);
  CHECK(r.all_pass());
  bool found = false;
  for (const Claim& c : r.claims)
    if (c.id == "identities.v2_norm_y1_printed") {
      found = true;
      CHECK(c.witness.rfind("N(y1) = ", 0) == 0);
    }
  CHECK(found);
}

TEST_CASE("json report shape") {
  SuiteConfig config;
  config.rep_selector = "Omega+:1";
  config.suite = "hsop";
  Report r = run_suite(config);
  std::string json = report_to_json(r, true);
  CHECK(json.find("\"version\"") != std::string::npos);
  CHECK(json.find("\"claims\"") != std::string::npos);
  CHECK(json.find("\"timings_ms\"") != std::string::npos);
  CHECK(json.find("\"verdict\": \"pass\"") != std::string::npos);
  std::string stripped = report_to_json(r, false);
  CHECK(stripped.find("timings_ms") == std::string::npos);
}

TEST_CASE("registry dump") {
  std::string json = registry_json(Representation::parse_selector("Omega+:2"));
  CHECK(json.find("\"family\": \"H+\"") != std::string::npos);
  CHECK(json.find("\"name\": \"N(y1)\"") != std::string::npos);
  CHECK(json.find("\"leadTerm\": \"y1^4\"") != std::string::npos);
  CHECK(json.find("Tr(y1^3*y2^3)") != std::string::npos);
}

TEST_CASE("unknown suite is rejected") {
  SuiteConfig config;
  config.rep_selector = "Vreg";
  config.suite = "nosuch";
  CHECK_THROWS_AS(run_suite(config), Error);
}

TEST_CASE("polynomial grammar round trip through the library entry points") {
  Representation rep = Representation::parse_selector("Vm:2:lambda=t");
  Polynomial n1 = Polynomial::parse(rep.ambient(), rep.field(), "y1^2+x1*y1");
  CHECK(n1 == n_basic(rep, 1));
  CHECK(Polynomial::parse(rep.ambient(), rep.field(), n1.to_string()) == n1);
  try {
    Polynomial::parse(rep.ambient(), rep.field(), "y1^");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}
