#include <doctest.h>

#include "offside/morphology.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace offside;
using testsupport::Rng;

namespace {

StructuringElement cross3() {
  StructuringElement se;
  se.width = 3;
  se.height = 3;
  se.bits = {0, 1, 0, 1, 1, 1, 0, 1, 0};
  return se;
}

bool subset(const BinaryMask& a, const BinaryMask& b) {
  for (std::size_t i = 0; i < a.bits.size(); ++i)
    if (a.bits[i] && !b.bits[i]) return false;
  return true;
}

}  // namespace

TEST_SUITE("morphology") {
  TEST_CASE("erode single pixel with full 3x3") {
    BinaryMask m(9, 9);
    m.set(4, 4, true);
    CHECK(erode(m, StructuringElement::full(3, 3)).count_true() == 0);
  }

  TEST_CASE("erode all-true keeps the interior only") {
    BinaryMask m(10, 10, true);
    const BinaryMask out = erode(m, StructuringElement::full(3, 3));
    CHECK(out.count_true() == 64);
    for (int y = 0; y < 10; ++y)
      for (int x = 0; x < 10; ++x)
        CHECK(out.get(x, y) == (x >= 1 && x <= 8 && y >= 1 && y <= 8));
  }

  TEST_CASE("dilate single pixel to a 3x3 block") {
    BinaryMask m(11, 11);
    m.set(5, 5, true);
    const BinaryMask out = dilate(m, StructuringElement::full(3, 3));
    CHECK(out.count_true() == 9);
    for (int y = 4; y <= 6; ++y)
      for (int x = 4; x <= 6; ++x) CHECK(out.get(x, y));
  }

  TEST_CASE("dilate of empty is empty") {
    BinaryMask m(8, 8);
    CHECK(dilate(m, StructuringElement::full(3, 3)).count_true() == 0);
  }

  TEST_CASE("open removes sub-SE specks and keeps solid blocks") {
    BinaryMask m(12, 12);
    m.set(2, 2, true);  // isolated speck
    for (int y = 5; y < 10; ++y)
      for (int x = 5; x < 10; ++x) m.set(x, y, true);  // solid 5x5
    const BinaryMask out = open(m, StructuringElement::full(3, 3));
    CHECK(!out.get(2, 2));
    const BinaryMask expected = oracles::naive_open(m, StructuringElement::full(3, 3));
    CHECK(out == expected);
    for (int y = 5; y < 10; ++y)
      for (int x = 5; x < 10; ++x) CHECK(out.get(x, y));
  }

  TEST_CASE("open is idempotent") {
    Rng rng(31);
    const auto se = StructuringElement::full(3, 3);
    for (int trial = 0; trial < 30; ++trial) {
      const BinaryMask m = testsupport::random_mask(24, 24, 0.45, rng);
      const BinaryMask once = open(m, se);
      CHECK(open(once, se) == once);
    }
  }

  TEST_CASE("fill_holes seals a ring and leaves the open sea alone") {
    BinaryMask m(5, 5);
    for (int y = 1; y <= 3; ++y)
      for (int x = 1; x <= 3; ++x) m.set(x, y, true);
    m.set(2, 2, false);
    const BinaryMask out = fill_holes(m);
    CHECK(out.get(2, 2));
    CHECK(out.count_true() == 9);

    BinaryMask empty(6, 6);
    CHECK(fill_holes(empty).count_true() == 0);
  }

  TEST_CASE("all four operators match their naive oracles") {
    Rng rng(37);
    const auto se_full = StructuringElement::full(3, 3);
    const auto se_cross = cross3();
    for (int trial = 0; trial < 40; ++trial) {
      const BinaryMask m = testsupport::random_mask(32, 32, rng.uniform(0.2, 0.8), rng);
      CHECK(erode(m, se_full) == oracles::naive_erode(m, se_full));
      CHECK(dilate(m, se_full) == oracles::naive_dilate(m, se_full));
      CHECK(erode(m, se_cross) == oracles::naive_erode(m, se_cross));
      CHECK(dilate(m, se_cross) == oracles::naive_dilate(m, se_cross));
      CHECK(open(m, se_full) == oracles::naive_open(m, se_full));
      CHECK(fill_holes(m) == oracles::flood_fill_holes(m));
    }
  }

  TEST_CASE("extensivity, anti-extensivity, monotonicity") {
    Rng rng(41);
    const auto se = StructuringElement::full(5, 5);
    for (int trial = 0; trial < 20; ++trial) {
      const BinaryMask m = testsupport::random_mask(20, 20, 0.5, rng);
      CHECK(subset(erode(m, se), m));
      CHECK(subset(m, dilate(m, se)));
      CHECK(subset(open(m, se), m));
      CHECK(subset(m, fill_holes(m)));
      CHECK(fill_holes(fill_holes(m)) == fill_holes(m));

      BinaryMask bigger = m;
      for (int i = 0; i < 12; ++i)
        bigger.set(rng.range(0, 19), rng.range(0, 19), true);
      CHECK(subset(erode(m, se), erode(bigger, se)));
      CHECK(subset(dilate(m, se), dilate(bigger, se)));
    }
  }

  TEST_CASE("fill_holes keeps border-connected background") {
    BinaryMask m(7, 7);
    // a C shape open to the border: interior stays background
    for (int y = 1; y <= 5; ++y) {
      m.set(1, y, true);
      m.set(5, y, true);
    }
    for (int x = 1; x <= 5; ++x) m.set(x, 5, true);
    const BinaryMask out = fill_holes(m);
    CHECK(!out.get(3, 3));
  }

  TEST_CASE("structuring element validation") {
    StructuringElement even;
    even.width = 2;
    even.height = 3;
    even.bits = {1, 1, 1, 1, 1, 1};
    CHECK_THROWS_AS(validate(even), std::invalid_argument);

    StructuringElement no_origin;
    no_origin.width = 3;
    no_origin.height = 3;
    no_origin.bits = {1, 1, 1, 1, 0, 1, 1, 1, 1};
    CHECK_THROWS_AS(validate(no_origin), std::invalid_argument);
  }
}
