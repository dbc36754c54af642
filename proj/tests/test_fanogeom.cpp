#include <doctest.h>

#include <json.hpp>

#include "lgmk/error.hpp"
#include "lgmk/fanogeom.hpp"

using namespace lgmk;
using nlohmann::json;

namespace {

GeometryErrorCode rejection(const json& j) {
  try {
    load_pair_json(j.dump());
  } catch (const GeometryError& e) {
    return e.code();
  }
  FAIL("geometry was accepted");
  return GeometryErrorCode::malformed;
}

json preset(const std::string& name) { return json::parse(preset_json(name)); }

}  // namespace

TEST_CASE("P2 preset") {
  const auto p = load_preset("P2");
  CHECK(p.n == 2);
  CHECK(p.m() == 3);
  CHECK(p.rays == std::vector<IntVec>{{1, 0}, {0, 1}, {-1, -1}});
  CHECK(p.r == 1);
  CHECK(p.d_vector({1}) == IntVec{1, 1, 1});
  CHECK(p.degree({1}) == 3);
  CHECK(intersection_number(p, 0, {1}) == 1);
  CHECK(intersection_number(p, 2, {0}) == 0);
  CHECK_THROWS_AS(intersection_number(p, 0, {-1}), DomainError);
}

TEST_CASE("P1xP1 preset") {
  const auto p = load_preset("P1xP1");
  CHECK(p.n == 2);
  CHECK(p.m() == 4);
  CHECK(p.r == 2);
  CHECK(p.intersection == std::vector<IntVec>{{1, 1, 0, 0}, {0, 0, 1, 1}});
  // a ruling meets the divisors of the other factor trivially
  CHECK(intersection_number(p, 2, {1, 0}) == 0);
  CHECK(intersection_number(p, 0, {1, 0}) == 1);
  CHECK(p.degree({1, 1}) == 4);
}

TEST_CASE("every preset loads and validates") {
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const auto p = load_preset(name);
    CHECK(p.name == name);
    p.cohomology().validate();
  }
  CHECK_THROWS_AS(load_preset("P7"), GeometryError);
}

TEST_CASE("chart monomials") {
  const auto p = load_preset("P2");
  CHECK(chart_monomial(p, {1, 0, 0}, 0) == Monomial({0}, {1, 0}));
  CHECK(chart_monomial(p, {0, 0, 1}, 0) == Monomial({1}, {-1, -1}));
  CHECK(chart_monomial(p, {0, 0, 0}, 0) == Monomial({0}, {0, 0}));
  CHECK_THROWS_AS(chart_monomial(p, {1, 1, 1}, 0), DomainError);
  CHECK(p.in_B({2, 0, 1}));
  CHECK_FALSE(p.in_B({1, 1, 1}));
  CHECK_FALSE(p.in_B({-1, 0, 0}));

  const auto q = load_preset("P1");
  CHECK(chart_monomial(q, {0, 1}, 0) == Monomial({1}, {-1}));
}

TEST_CASE("effective classes are ordered by degree") {
  const auto p = load_preset("P1xP1");
  const auto classes = p.effective_classes(4);
  CHECK(classes.size() == 6);
  for (std::size_t i = 1; i < classes.size(); ++i) CHECK(p.degree(classes[i - 1]) <= p.degree(classes[i]));
}

TEST_CASE("invalid geometries are rejected with distinct diagnostics") {
  {
    json j = preset("P2");
    j["c1"] = {0, 2, 0};
    CHECK(rejection(j) == GeometryErrorCode::not_anticanonical);
    try {
      load_pair_json(j.dump());
    } catch (const GeometryError& e) {
      CHECK(std::string(e.what()).find("not anticanonical") != std::string::npos);
    }
  }
  {
    json j = preset("P2");
    j["anticanonical_degree"] = {4};
    CHECK(rejection(j) == GeometryErrorCode::not_anticanonical);
  }
  {
    json j = preset("P2");
    j["rays"] = {{1, 0}, {1, 2}, {-1, -1}};
    CHECK(rejection(j) == GeometryErrorCode::singular_cone);
  }
  {
    json j = preset("P2");
    j["max_cones"] = {{0, 1, 2}};
    CHECK(rejection(j) == GeometryErrorCode::non_simplicial_cone);
  }
  {
    json j = preset("P2");
    j["intersection"] = {{-1, -1, -1}};
    j["anticanonical_degree"] = {-3};
    CHECK(rejection(j) == GeometryErrorCode::not_fano);
  }
  {
    json j = preset("P2");
    j["cohomology"]["integration"] = {0, 0, 0};
    CHECK(rejection(j) == GeometryErrorCode::singular_pairing);
  }
  {
    json j = preset("P2");
    j["intersection"] = {{1, 2, 0}};
    j["anticanonical_degree"] = {3};
    CHECK(rejection(j) == GeometryErrorCode::fan_relation_violated);
  }
  CHECK_THROWS_AS(load_pair_json("{not json"), GeometryError);
  CHECK_THROWS_AS(load_pair("/nonexistent/file.json"), GeometryError);
}
