#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "headstab/terrain.hpp"

using namespace headstab;

TEST_CASE("flat") {
  TerrainParams p;
  p.kind = TerrainKind::Flat;
  const TerrainProfile t(p);
  CHECK(terrain_height(t, -3.0) == 0.0);
  CHECK(terrain_height(t, 12.0) == 0.0);
}

TEST_CASE("single slope geometry") {
  TerrainParams p;
  p.kind = TerrainKind::SingleSlope;
  p.slope_deg = 10.0;
  p.rise_length = 2.0;  // long ramp so x = 1 sits on the upslope
  p.flat_length = 1.0;
  const TerrainProfile t(p);
  const double tan10 = 0.17632698070846497;

  CHECK(t.height(-1.0) == 0.0);
  CHECK(t.height(1.0) == doctest::Approx(tan10).epsilon(1e-14));
  const double top = 2.0 * tan10;
  CHECK(t.height(2.0) == doctest::Approx(top));
  CHECK(t.height(2.5) == doctest::Approx(top));   // on the flat
  CHECK(t.height(3.0 - 1e-12) == doctest::Approx(top));
  CHECK(t.height(4.0) == doctest::Approx(top - tan10));  // descending
  CHECK(t.height(5.0) == doctest::Approx(0.0));
  CHECK(t.height(7.0) == 0.0);

  SUBCASE("continuous at the section joints") {
    for (double x0 : {0.0, 2.0, 3.0, 5.0}) {
      CHECK(std::abs(t.height(x0 - 1e-9) - t.height(x0 + 1e-9)) < 1e-9);
    }
  }
}

TEST_CASE("sinusoid") {
  TerrainParams p;
  p.kind = TerrainKind::Sinusoid;
  p.sine_amplitude = 0.03;
  p.sine_wavelength = 1.0;
  const TerrainProfile t(p);
  CHECK(t.height(0.25) == doctest::Approx(0.03).epsilon(1e-14));  // sine peak
  CHECK(t.height(0.0) == doctest::Approx(0.0));
  CHECK(t.height(0.75) == doctest::Approx(-0.03));
  CHECK(t.height(1.25) == doctest::Approx(0.03));
}

TEST_CASE("rugged field") {
  TerrainParams p;
  p.kind = TerrainKind::HighFreqRugged;
  p.bump_amplitude = 0.012;
  p.seed = 42;
  const TerrainProfile a(p);
  const TerrainProfile b(p);

  SUBCASE("deterministic for a fixed seed") {
    for (double x = -1.0; x < 6.0; x += 0.0137) {
      CHECK(a.height(x) == b.height(x));
    }
  }
  SUBCASE("different seeds differ") {
    TerrainParams q = p;
    q.seed = 7;
    const TerrainProfile c(q);
    bool differs = false;
    for (double x = 0.0; x < 2.0; x += 0.01) {
      if (std::abs(a.height(x) - c.height(x)) > 1e-9) {
        differs = true;
        break;
      }
    }
    CHECK(differs);
  }
  SUBCASE("bounded by the summed amplitude") {
    for (double x = -5.0; x < 20.0; x += 0.003) {
      CHECK(std::abs(a.height(x)) <= p.bump_amplitude + 1e-12);
    }
  }
  SUBCASE("band-limited: numerical slope stays finite and modest") {
    const double h = 1e-5;
    double worst = 0.0;
    for (double x = 0.0; x < 4.0; x += 0.001) {
      worst = std::max(worst, std::abs(a.height(x + h) - a.height(x - h)) / (2 * h));
    }
    // max slope is bounded by sum(2 pi a_i / lambda_i) <= 2 pi A / lambda_min
    CHECK(worst <= 2.0 * M_PI * p.bump_amplitude / p.bump_wavelength_min + 1e-6);
  }
}

TEST_CASE("terrain kind names round-trip") {
  for (auto k : {TerrainKind::Flat, TerrainKind::SingleSlope,
                 TerrainKind::HighFreqRugged, TerrainKind::Sinusoid}) {
    CHECK(terrain_kind_from_name(terrain_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(terrain_kind_from_name("bumpy"), std::invalid_argument);
}

TEST_CASE("parameter validation") {
  TerrainParams p;
  p.kind = TerrainKind::SingleSlope;
  p.rise_length = 0.0;
  CHECK_THROWS_AS(TerrainProfile{p}, std::invalid_argument);
  p = TerrainParams{};
  p.kind = TerrainKind::HighFreqRugged;
  p.bump_components = 0;
  CHECK_THROWS_AS(TerrainProfile{p}, std::invalid_argument);
  p = TerrainParams{};
  p.kind = TerrainKind::Sinusoid;
  p.sine_wavelength = 0.0;
  CHECK_THROWS_AS(TerrainProfile{p}, std::invalid_argument);
}
