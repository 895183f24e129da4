#include <doctest.h>

#include <cmath>

#include "offside/hough.hpp"
#include "test_support.hpp"

using namespace offside;
using testsupport::Rng;

TEST_SUITE("hough") {
  TEST_CASE("horizontal row peaks at theta 90") {
    BinaryMask m(20, 20);
    for (int x = 0; x < 20; ++x) m.set(x, 7, true);
    const auto lines = hough_lines(m, {});
    REQUIRE(!lines.empty());
    CHECK(lines[0].theta == doctest::Approx(90.0));
    CHECK(lines[0].rho == doctest::Approx(7.0));
    CHECK(lines[0].votes == 20);
  }

  TEST_CASE("vertical column peaks at theta 0") {
    BinaryMask m(20, 20);
    for (int y = 0; y < 20; ++y) m.set(4, y, true);
    const auto lines = hough_lines(m, {});
    REQUIRE(!lines.empty());
    CHECK(lines[0].theta == doctest::Approx(0.0));
    CHECK(lines[0].rho == doctest::Approx(4.0));
  }

  TEST_CASE("main diagonal peaks at theta 135, rho 0") {
    BinaryMask m(20, 20);
    for (int i = 0; i < 20; ++i) m.set(i, i, true);
    const auto lines = hough_lines(m, {});
    REQUIRE(!lines.empty());
    CHECK(lines[0].theta == doctest::Approx(135.0));
    CHECK(lines[0].rho == doctest::Approx(0.0));
  }

  TEST_CASE("empty mask is an error") {
    BinaryMask m(8, 8);
    CHECK_THROWS_WITH(hough_lines(m, {}), "no evidence pixels");
  }

  TEST_CASE("votes never exceed the evidence count") {
    Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
      const BinaryMask m = testsupport::random_mask(24, 24, 0.15, rng);
      if (m.count_true() == 0) continue;
      for (const auto& l : hough_lines(m, {}))
        CHECK(static_cast<std::size_t>(l.votes) <= m.count_true());
    }
  }

  TEST_CASE("filter_by_angle") {
    std::vector<HoughLine> lines{{1, 0, 5}, {2, 88, 5}, {3, 90, 5}, {4, 120, 5}};
    const auto kept = filter_by_angle(lines, 90.0, 5.0);
    REQUIRE(kept.size() == 2);
    CHECK(kept[0].theta == 88);
    CHECK(kept[1].theta == 90);

    const auto exact = filter_by_angle(lines, 90.0, 0.0);
    REQUIRE(exact.size() == 1);
    CHECK(exact[0].theta == 90);

    std::vector<HoughLine> wrap{{1, 179, 5}};
    CHECK(filter_by_angle(wrap, 0.0, 2.0).size() == 1);
  }

  TEST_CASE("filter_by_angle is idempotent") {
    std::vector<HoughLine> lines{{1, 3, 5}, {2, 88, 7}, {3, 92, 2}, {4, 177, 9}};
    const auto once = filter_by_angle(lines, 90.0, 5.0);
    const auto twice = filter_by_angle(once, 90.0, 5.0);
    REQUIRE(once.size() == twice.size());
    for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].theta == twice[i].theta);
  }

  TEST_CASE("top_boundary_row of a flat line") {
    std::vector<HoughLine> lines{{42.0, 90.0, 100}};
    CHECK(top_boundary_row(lines, 100, 200) == 42);
  }

  TEST_CASE("top_boundary_row of a tilted line matches direct evaluation") {
    const double theta = 88.0, rho = 40.0;
    std::vector<HoughLine> lines{{rho, theta, 50}};

    const double rad = theta * 3.14159265358979323846 / 180.0;
    double sum = 0.0;
    for (int x = 0; x < 100; ++x) sum += (rho - x * std::cos(rad)) / std::sin(rad);
    const int expected = static_cast<int>(std::lround(sum / 100.0));
    CHECK(expected == 38);  // frozen from the evaluation above
    CHECK(top_boundary_row(lines, 100, 200) == expected);
  }

  TEST_CASE("top_boundary_row picks the strongest line and rejects empties") {
    std::vector<HoughLine> lines{{10.0, 90.0, 5}, {30.0, 90.0, 50}, {50.0, 90.0, 7}};
    CHECK(top_boundary_row(lines, 64, 64) == 30);
    CHECK_THROWS_WITH(top_boundary_row({}, 64, 64), "no boundary line");
  }

  TEST_CASE("recovers a noisy synthetic line within 2 bins") {
    Rng rng(71);
    int hits = 0;
    const int trials = 10;
    for (int trial = 0; trial < trials; ++trial) {
      BinaryMask m(64, 64);
      double theta, rho;
      int pixels = 0;
      do {
        theta = rng.uniform(0.0, 180.0);
        const double cx = rng.uniform(12.0, 52.0);
        const double cy = rng.uniform(12.0, 52.0);
        const double rad = theta * 3.14159265358979323846 / 180.0;
        rho = cx * std::cos(rad) + cy * std::sin(rad);
        for (auto& b : m.bits) b = 0;
        pixels = testsupport::rasterize_line(m, rho, theta);
      } while (pixels < 40);
      for (int i = 0; i < 205; ++i) m.set(rng.range(0, 63), rng.range(0, 63), true);

      const auto lines = hough_lines(m, {});
      REQUIRE(!lines.empty());
      if (testsupport::same_hough_line(lines[0].rho, lines[0].theta, rho, theta, 2.0, 2.0))
        ++hits;
    }
    CHECK(hits >= trials - 1);
  }
}
