#include <doctest.h>

#include "latcount/closed_forms.hpp"
#include "latcount/cylinder.hpp"
#include "latcount/oracle.hpp"
#include "latcount/profile_dp.hpp"

using namespace latcount;

TEST_CASE("C_4 defect states at k = 2") {
  const auto s = cylinder::c4_states(2)[1];
  CHECK(s.k == 2);
  CHECK(s.a == 1);
  CHECK(s.b1 == 2);
  CHECK(s.b2 == 9);
  CHECK(s.c == 1);
  CHECK(s.d == 0);
  CHECK(s.x == 0);
  CHECK(cylinder::c4_cprime(2) == 34);
}

TEST_CASE("C_5 defect states at k = 2") {
  CHECK(cylinder::c5_states(2)[1].a == 5);
}

TEST_CASE("defects equal complete minus cylinder spanning counts") {
  const auto w4 = profile::span_counts(build_family(Family::Cycle, 4), 10).w;
  const auto k4 = closed::complete_column_counts(4, 10);
  const auto w5 = profile::span_counts(build_family(Family::Cycle, 5), 10).w;
  const auto k5 = closed::complete_column_counts(5, 10);
  for (std::size_t k = 1; k <= 10; ++k) {
    CHECK(cylinder::c4_cprime(k) == k4[k - 1] - w4[k - 1]);
    CHECK(cylinder::c5_cprime(k) == k5[k - 1] - w5[k - 1]);
    CHECK(cylinder::c4_cprime(k) > 0);
    CHECK(cylinder::c5_cprime(k) > 0);
  }
}

TEST_CASE("first cylinder counts") {
  CHECK(cylinder::c4_counts(4) == std::vector<BigCount>{13, 167, 1944, 22164});
  CHECK(cylinder::c5_counts(4) == std::vector<BigCount>{21, 503, 11836, 269630});
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(cylinder::count_c4(n) == oracle::count_connected_sets(product_with_path(build_family(Family::Cycle, 4), n)));
    CHECK(cylinder::count_c5(n) == oracle::count_connected_sets(product_with_path(build_family(Family::Cycle, 5), n)));
  }
}

TEST_CASE("recurrences agree with the profile engine far out") {
  CHECK(cylinder::c4_counts(30) == profile::exact_counts(build_family(Family::Cycle, 4), 30));
  CHECK(cylinder::c5_counts(30) == profile::exact_counts(build_family(Family::Cycle, 5), 30));
}

TEST_CASE("engine choice and range") {
  CHECK(cylinder::cylinder_engine(4) == cylinder::CylinderEngine::Recurrence);
  CHECK(cylinder::cylinder_engine(5) == cylinder::CylinderEngine::Recurrence);
  CHECK(cylinder::cylinder_engine(6) == cylinder::CylinderEngine::ProfileDp);
  CHECK(cylinder::cylinder_engine(9) == cylinder::CylinderEngine::ProfileDp);
  CHECK_THROWS_AS(cylinder::count_cylinder_exact(2, 3), CountError);
  CHECK_THROWS_AS(cylinder::count_cylinder_exact(13, 3), CountError);
  CHECK_THROWS_AS(cylinder::c4_states(0), CountError);
  CHECK(cylinder::count_cylinder_exact(3, 2) ==
        oracle::count_connected_sets(product_with_path(build_family(Family::Cycle, 3), 2)));
}

TEST_CASE("cylinders sit below the complete background") {
  for (std::size_t m = 3; m <= 7; ++m) {
    const auto cyl = cylinder::cylinder_counts(m, 6);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(cyl[n - 1] <= closed::count_complete_product(m, n));
  }
  // C_3 is K_3.
  CHECK(cylinder::cylinder_counts(3, 6) == profile::accumulate_windows(closed::complete_column_counts(3, 6)));
}
