#include <doctest.h>

#include "offside/color.hpp"
#include "offside/segmentation.hpp"
#include "test_support.hpp"

using namespace offside;
using testsupport::Rng;

TEST_SUITE("segmentation") {
  TEST_CASE("circular_hue_distance") {
    CHECK(circular_hue_distance(10.0, 350.0) == doctest::Approx(20.0));
    CHECK(circular_hue_distance(120.0, 120.0) == 0.0);
    CHECK(circular_hue_distance(0.0, 180.0) == doctest::Approx(180.0));
  }

  TEST_CASE("color_mask uniform matches") {
    const ColorSpec green{{120.0, 1.0, 1.0}, 25.0, 0.4, 0.4};
    Image img(6, 4, {0, 255, 0});
    CHECK(color_mask(img, green).count_true() == 24);

    Image black(6, 4, {0, 0, 0});
    CHECK(color_mask(black, green).count_true() == 0);
  }

  TEST_CASE("hue test wraps around the red seam") {
    const PixelRGB near_red = hsv_to_rgb({358.0, 1.0, 1.0});
    Image img(1, 1, near_red);
    const ColorSpec spec{{5.0, 1.0, 1.0}, 10.0, 0.1, 0.1};
    CHECK(color_mask(img, spec).get(0, 0));
  }

  TEST_CASE("widening tolerances is monotone") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const Image img = testsupport::random_image(8, 8, rng);
      ColorSpec narrow{{rng.uniform(0.0, 360.0), rng.uniform(), rng.uniform()},
                       rng.uniform(1.0, 90.0), rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.5)};
      ColorSpec wide = narrow;
      wide.h_tol = std::min(180.0, wide.h_tol + rng.uniform(0.0, 90.0));
      wide.s_tol = std::min(1.0, wide.s_tol + rng.uniform(0.0, 0.5));
      wide.v_tol = std::min(1.0, wide.v_tol + rng.uniform(0.0, 0.5));
      const BinaryMask a = color_mask(img, narrow);
      const BinaryMask b = color_mask(img, wide);
      for (std::size_t i = 0; i < a.bits.size(); ++i)
        if (a.bits[i]) CHECK(b.bits[i]);
    }
  }

  TEST_CASE("maximal tolerances accept everything") {
    Rng rng(23);
    const Image img = testsupport::random_image(16, 16, rng);
    const ColorSpec all{{180.0, 0.5, 0.5}, 180.0, 1.0, 1.0};
    CHECK(color_mask(img, all).count_true() == img.pixels.size());
  }

  TEST_CASE("mask is independent of processing order") {
    Rng rng(29);
    const Image img = testsupport::random_image(12, 12, rng);
    const ColorSpec spec{{200.0, 0.5, 0.5}, 60.0, 0.5, 0.5};
    CHECK(color_mask(img, spec) == color_mask(hsv_plane(img), img.width, img.height, spec));
  }

  TEST_CASE("validation rejects bad tolerances") {
    CHECK_THROWS_AS(validate(ColorSpec{{0, 0, 0}, 0.0, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ColorSpec{{0, 0, 0}, 181.0, 0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(validate(ColorSpec{{0, 0, 0}, 10.0, 1.5, 0.5}), std::invalid_argument);
  }
}
