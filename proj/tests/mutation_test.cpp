#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "nassoc/report.hpp"
#include "test_util.hpp"

using namespace nassoc;

namespace {

Json corpus() {
  std::ifstream in(NASSOC_MUTATIONS);
  return Json::parse(in);
}

}  // namespace

// Each check has a corrupted table on which it reports a reproducible
// counterexample; the corruption is a table whose claimed hypotheses fail.
TEST(Mutation, EveryCheckIsSensitive) {
  std::set<CheckId> covered;
  for (const auto& m : corpus()) {
    auto id = parse_check_id(m["check"].get<std::string>());
    ASSERT_TRUE(id.has_value()) << m["check"];
    auto A = algebra_from_json(m["algebra"]);
    VerifyOptions o;
    o.assume = assumptions_from_json(m["assume"], A);
    auto r = verify(A, *id, o);
    EXPECT_TRUE(r.applicable) << m["check"] << ": " << r.reason;
    EXPECT_FALSE(r.holds) << m["check"];
    ASSERT_FALSE(r.counterexample.is_null()) << m["check"];
    EXPECT_EQ(algebra_from_json(r.counterexample["algebra"]), A);
    EXPECT_EQ(r.counterexample["violation"], m["violation"]) << m["check"];
    // Without the trusted hypotheses the check never fails.
    auto honest = verify(A, *id);
    EXPECT_FALSE(honest.applicable && !honest.holds) << m["check"];
    covered.insert(*id);
  }
  EXPECT_EQ(covered.size(), all_checks().size());
}
