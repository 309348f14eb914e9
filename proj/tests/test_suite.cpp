#include <doctest.h>

#include <set>
#include <stdexcept>

#include "extlevel/suite.hpp"

using namespace extlevel;

TEST_CASE("registry census") {
  const auto& reg = check_registry();
  CHECK(reg.size() >= 18);
  std::set<std::string> ids;
  for (auto& c : reg) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.anchor.empty());
    CHECK_FALSE(c.group.empty());
  }
  for (const char* id : {"L4.1", "L4.2", "L4.3", "L4.4", "L4.5", "L5.a", "L5.b", "L5.c", "L5.d", "L-ARF.a",
                         "L-ARF.b", "L-ARF.c", "L-ARF.d", "P-IE.1", "P-IE.2", "P-IE.3", "P-REL.1", "PF.1", "PF.2",
                         "LR.1"})
    CHECK_MESSAGE(ids.count(id), id);
}

TEST_CASE("every check passes, serial and threaded alike") {
  auto serial = run_all("", 1);
  for (auto& r : serial.reports) CHECK_MESSAGE(r.pass, r.id << ": " << r.diff.value_or(""));
  CHECK(serial.all_pass());
  CHECK(serial.passed() == check_registry().size());
  auto threaded = run_all("", 4);
  REQUIRE(threaded.reports.size() == serial.reports.size());
  for (std::size_t k = 0; k < serial.reports.size(); ++k) {
    CHECK(threaded.reports[k].id == serial.reports[k].id);
    CHECK(threaded.reports[k].pass == serial.reports[k].pass);
  }
}

TEST_CASE("filters and single runs") {
  auto l4 = run_all("L4", 1);
  CHECK(l4.reports.size() == 5);
  CHECK(run_all("L4.2").reports.size() == 1);
  CHECK(run_all("no-such-group").reports.empty());
  auto r = run_check("P-REL.1");
  CHECK(r.pass);
  CHECK(r.identities > 0);
  CHECK_THROWS_AS(run_check("nope"), std::out_of_range);
}
