// Acceptance gate: replays the twelve frozen verification checks and the
// randomized property suites, printing one line per criterion.

#include <cstdio>
#include <string>

#include "extq/verify.hpp"
#include "properties.hpp"

int main() {
  using namespace extq;
  VerifyOptions opt;
  opt.include_slow = true;
  Report rep = verify_paper(opt);

  bool all_ok = true;
  auto line = [&](int k, bool ok, const std::string& detail) {
    std::printf("[ACCEPT %d] %s  %s\n", k, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  };

  for (int k = 1; k <= 12; ++k) {
    char prefix[4];
    std::snprintf(prefix, sizeof prefix, "%02d-", k);
    bool found = false;
    for (const Check& c : rep.checks) {
      if (c.name.rfind(prefix, 0) != 0) continue;
      found = true;
      line(k, c.status == "pass",
           c.name + " (" + std::to_string(c.runtime_ms) + " ms): " + c.actual);
    }
    if (!found) line(k, false, "check missing from the verification report");
  }

  StopWatch sw;
  struct Suite {
    const char* name;
    bool (*run)(uint64_t, int);
  };
  Suite suites[] = {
      {"associativity", props::associativity},
      {"skew-commutativity", props::skew_commutativity},
      {"square-zero", props::square_zero},
      {"gb-idempotence", props::gb_idempotence},
      {"hf-order-invariance", props::hf_order_invariance},
      {"regularity-transfer", props::regularity_transfer},
      {"pfaffian-squared", props::pfaffian_squared},
      {"rank-parity", props::rank_parity},
      {"decomposition-roundtrip", props::decomposition_roundtrip},
      {"print-parse-roundtrip", props::print_parse_roundtrip},
  };
  bool props_ok = true;
  std::string detail;
  uint64_t seed = kDefaultSeed;
  for (const Suite& s : suites) {
    bool ok = s.run(seed++, props::kInstances);
    props_ok = props_ok && ok;
    if (!ok) detail += std::string(detail.empty() ? "" : ", ") + s.name + " failed";
  }
  if (detail.empty())
    detail = "10 suites x " + std::to_string(props::kInstances) + " instances in " +
             std::to_string(sw.ms()) + " ms";
  line(13, props_ok, detail);

  return all_ok ? 0 : 1;
}
