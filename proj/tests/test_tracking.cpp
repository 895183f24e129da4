#include <doctest.h>

#include <cmath>

#include "offside/tracking.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace offside;
using testsupport::Rng;

TEST_SUITE("tracking") {
  TEST_CASE("min_eig_map is zero on constant images") {
    GrayImage g(16, 16, 120);
    for (double s : min_eig_map(g, 3).values) CHECK(s == 0.0);
  }

  TEST_CASE("min_eig_map is zero along a straight step edge") {
    GrayImage g(20, 20, 0);
    for (int y = 0; y < 20; ++y)
      for (int x = 10; x < 20; ++x) g.at(x, y) = 200;
    // one dominant gradient direction keeps the tensor rank-1
    const ScoreMap m = min_eig_map(g, 3);
    for (int y = 2; y < 18; ++y)
      for (int x = 0; x < 20; ++x) CHECK(m.at(x, y) == doctest::Approx(0.0).epsilon(1e-9));
  }

  TEST_CASE("min_eig_map matches the brute-force tensor oracle") {
    GrayImage g(15, 15, 0);
    g.at(7, 7) = 255;
    const ScoreMap m = min_eig_map(g, 3);
    const auto expected = oracles::brute_min_eig(g, 3);
    double best = 0;
    int bx = 0, by = 0;
    for (int y = 0; y < 15; ++y)
      for (int x = 0; x < 15; ++x) {
        CHECK(m.at(x, y) == doctest::Approx(expected[g.idx(x, y)]).epsilon(1e-9));
        if (m.at(x, y) > best) {
          best = m.at(x, y);
          bx = x;
          by = y;
        }
      }
    CHECK(best > 0.0);
    CHECK(std::abs(bx - 7) <= 1);
    CHECK(std::abs(by - 7) <= 1);

    Rng rng(89);
    const GrayImage noise = testsupport::value_noise(24, 24, 4, rng);
    const ScoreMap nm = min_eig_map(noise, 5);
    const auto nexp = oracles::brute_min_eig(noise, 5);
    for (std::size_t i = 0; i < nexp.size(); ++i)
      CHECK(nm.values[i] == doctest::Approx(nexp[i]).epsilon(1e-9));
  }

  TEST_CASE("min_eig_map rejects undersized images") {
    GrayImage g(4, 4, 0);
    CHECK_THROWS_WITH(min_eig_map(g, 5), "image smaller than window");
  }

  TEST_CASE("detect_corners on a flat roi is empty") {
    GrayImage g(20, 20, 77);
    CHECK(detect_corners(g, {2, 2, 17, 17}, 5, 0.1, 2.0).empty());
  }

  TEST_CASE("detect_corners finds a checkerboard junction") {
    GrayImage g(21, 21, 0);
    for (int y = 0; y < 21; ++y)
      for (int x = 0; x < 21; ++x)
        if ((x < 10) != (y < 10)) g.at(x, y) = 220;
    const auto corners = detect_corners(g, {3, 3, 17, 17}, 4, 0.5, 3.0);
    REQUIRE(corners.size() == 1);
    CHECK(std::fabs(corners[0].x - 10.0) <= 1.5);
    CHECK(std::fabs(corners[0].y - 10.0) <= 1.5);

    // oracle: argmax of the brute-force map inside the roi
    const auto scores = oracles::brute_min_eig(g, 3);
    double best = -1;
    int bx = 0, by = 0;
    for (int y = 3; y <= 17; ++y)
      for (int x = 3; x <= 17; ++x)
        if (scores[g.idx(x, y)] > best) {
          best = scores[g.idx(x, y)];
          bx = x;
          by = y;
        }
    CHECK(std::fabs(corners[0].x - bx) <= 1.0);
    CHECK(std::fabs(corners[0].y - by) <= 1.0);
  }

  TEST_CASE("detect_corners validates its inputs") {
    GrayImage g(20, 20, 0);
    CHECK_THROWS_AS(detect_corners(g, {5, 5, 4, 9}, 4, 0.5, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(detect_corners(g, {0, 0, 19, 19}, 0, 0.5, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(detect_corners(g, {0, 0, 25, 19}, 4, 0.5, 3.0), std::invalid_argument);
  }

  TEST_CASE("identical frames track to zero displacement") {
    Rng rng(97);
    const GrayImage g = testsupport::value_noise(64, 64, 6, rng);
    const auto corners = detect_corners(g, {8, 8, 55, 55}, 12, 0.05, 5.0);
    REQUIRE(corners.size() >= 4);
    const auto moved = lk_track(g, g, corners, {});
    for (std::size_t i = 0; i < moved.size(); ++i) {
      CHECK(moved[i].second == TrackStatus::ok);
      CHECK(std::fabs(moved[i].first.x - corners[i].x) < 1e-6);
      CHECK(std::fabs(moved[i].first.y - corners[i].y) < 1e-6);
    }
  }

  TEST_CASE("recovers an integer translation within a quarter pixel") {
    Rng rng(101);
    const GrayImage prev = testsupport::value_noise(64, 64, 6, rng);
    const GrayImage next = testsupport::shift_gray(prev, 2, 0);
    const auto corners = detect_corners(prev, {10, 10, 50, 50}, 10, 0.05, 5.0);
    REQUIRE(corners.size() >= 4);
    const auto moved = lk_track(prev, next, corners, {});
    int good = 0;
    for (std::size_t i = 0; i < moved.size(); ++i) {
      if (moved[i].second != TrackStatus::ok) continue;
      if (std::fabs(moved[i].first.x - corners[i].x - 2.0) <= 0.25 &&
          std::fabs(moved[i].first.y - corners[i].y) <= 0.25)
        ++good;
    }
    CHECK(good * 10 >= static_cast<int>(moved.size()) * 9);
  }

  TEST_CASE("a flat-region point is lost") {
    GrayImage prev(40, 40, 50);
    prev.at(5, 5) = 255;  // texture far from the probe
    GrayImage next = prev;
    const auto moved = lk_track(prev, next, {{30.0, 30.0, 0.0}}, {});
    REQUIRE(moved.size() == 1);
    CHECK(moved[0].second == TrackStatus::lost);
  }

  TEST_CASE("lk_track rejects dimension mismatches") {
    GrayImage a(10, 10, 0), b(12, 10, 0);
    CHECK_THROWS_AS(lk_track(a, b, {}, {}), std::invalid_argument);
  }

  TEST_CASE("advance_bbox translates by the displacement median") {
    TrackState t;
    t.bbox = {10, 10, 20, 30};
    t.alive = true;
    t.points = {{12.0, 12.0, 1.0}, {15.0, 20.0, 1.0}, {18.0, 28.0, 1.0}};

    std::vector<std::pair<Corner, TrackStatus>> moved{
        {{13.0, 14.0, 1.0}, TrackStatus::ok},
        {{16.0, 22.0, 1.0}, TrackStatus::ok},
        {{19.0, 30.0, 1.0}, TrackStatus::ok},
    };
    const TrackState out = advance_bbox(t, moved, 100, 100);
    CHECK(out.alive);
    CHECK(out.bbox == BBox{11, 12, 21, 32});
  }

  TEST_CASE("advance_bbox median resists an outlier") {
    TrackState t;
    t.bbox = {5, 5, 9, 9};
    t.alive = true;
    t.points = {{6.0, 6.0, 1.0}, {7.0, 7.0, 1.0}, {8.0, 8.0, 1.0}};
    std::vector<std::pair<Corner, TrackStatus>> moved{
        {{7.0, 6.0, 1.0}, TrackStatus::ok},
        {{8.0, 7.0, 1.0}, TrackStatus::ok},
        {{13.0, 8.0, 1.0}, TrackStatus::ok},
    };
    const TrackState out = advance_bbox(t, moved, 100, 100);
    CHECK(out.bbox == BBox{6, 5, 10, 9});
  }

  TEST_CASE("advance_bbox kills tracks with fewer than 3 survivors") {
    TrackState t;
    t.bbox = {5, 5, 9, 9};
    t.alive = true;
    t.points = {{6.0, 6.0, 1.0}, {7.0, 7.0, 1.0}, {8.0, 8.0, 1.0}};
    std::vector<std::pair<Corner, TrackStatus>> moved{
        {{6.5, 6.0, 1.0}, TrackStatus::ok},
        {{7.5, 7.0, 1.0}, TrackStatus::ok},
        {{8.0, 8.0, 1.0}, TrackStatus::lost},
    };
    const TrackState out = advance_bbox(t, moved, 100, 100);
    CHECK(!out.alive);
    CHECK(out.points.size() == 2);
  }

  TEST_CASE("advance_bbox is invariant to list order and stays in bounds") {
    TrackState t;
    t.bbox = {0, 0, 4, 4};
    t.alive = true;
    t.points = {{1.0, 1.0, 1.0}, {2.0, 2.0, 1.0}, {3.0, 3.0, 1.0}};
    std::vector<std::pair<Corner, TrackStatus>> moved{
        {{0.0, 0.0, 1.0}, TrackStatus::ok},
        {{1.0, 1.0, 1.0}, TrackStatus::ok},
        {{2.0, 2.0, 1.0}, TrackStatus::ok},
    };
    const TrackState out = advance_bbox(t, moved, 100, 100);
    CHECK(out.bbox.x0 >= 0);
    CHECK(out.bbox.y0 >= 0);

    // reversing both lists leaves the shift unchanged
    TrackState tr = t;
    std::reverse(tr.points.begin(), tr.points.end());
    auto mr = moved;
    std::reverse(mr.begin(), mr.end());
    CHECK(advance_bbox(tr, mr, 100, 100).bbox == out.bbox);
  }
}
