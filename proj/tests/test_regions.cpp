#include "rtea/json_export.hpp"
#include "rtea/regions.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace rtea;
using namespace rtea::testing;

TEST_CASE("regions of the satellite top path") {
  auto pieces =
      extract_regions(lin({atom("0", "0", "20"), atom("2", "0", "40"), atom("5", "-50", "50")}));
  REQUIRE(pieces.size() == 3);
  CHECK_FALSE(pieces[0].feasible);
  CHECK(pieces[0].x_high == q("20"));

  CHECK(pieces[1].x_low == 20);
  CHECK(pieces[1].x_high == q("40"));
  CHECK(pieces[1].boundary.slope == q("-1/2"));
  CHECK(pieces[1].boundary.at(20) == 12);
  CHECK(pieces[1].value == AffineValue{5, q("5/2"), -110});

  CHECK(pieces[2].x_low == 40);
  CHECK_FALSE(pieces[2].x_high);
  CHECK(pieces[2].boundary.slope == q("-1/5"));
  CHECK(pieces[2].value == AffineValue{5, 1, -50});
}

TEST_CASE("regions of the composed star path") {
  auto pieces =
      extract_regions(lin({atom("0", "0", "30"), atom("4", "0", "50"), atom("5", "-60", "60")}));
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[1].value == AffineValue{5, q("5/4"), q("-145/2")});
  CHECK(pieces[2].x_low == 50);
  CHECK(pieces[2].value == AffineValue{5, 1, -60});
}

TEST_CASE("regions of a single atom") {
  auto pieces = extract_regions(lin({atom("3", "-1", "1")}));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].x_low == 0);
  CHECK(pieces[0].value == AffineValue{3, 1, -1});
  CHECK(pieces[0].boundary == AffineBoundary{q("-1/3"), q("1/3")});
  CHECK(eval_regions(pieces, 0, q("1/3")) == E("0"));
  CHECK(eval_regions(pieces, 0, q("1/4")) == Energy::bottom());

  auto guard = extract_regions(lin({atom("0", "-2", "5")}));
  REQUIRE(guard.size() == 2);
  CHECK_FALSE(guard[0].feasible);
  CHECK(guard[1].value == AffineValue{0, 1, -2});

  auto one = extract_regions(LinearRtef());
  REQUIRE(one.size() == 1);
  CHECK(one[0].value == AffineValue{0, 1, 0});
}

TEST_CASE("region evaluation equals greedy evaluation", "[property]") {
  Gen g(1001);
  for (int i = 0; i < 60; ++i) {
    LinearRtef l = g.linear(4);
    auto pieces = extract_regions(l);
    for (std::size_t k = 1; k < pieces.size(); ++k) {
      REQUIRE(pieces[k].x_low == *pieces[k - 1].x_high);
      if (!l.is_identity()) REQUIRE(pieces[k].value.coef_t == l.last_rate());
    }
    for (int s = 0; s < 1000; ++s) {
      Rational x = g.rational(0, 70);
      Rational t = g.rational(0, 25);
      INFO(to_string(l) << " x=" << x << " t=" << t);
      REQUIRE(eval_regions(pieces, x, t) == eval(l, Energy::finite(x), Duration::finite(t)));
    }
  }
}

TEST_CASE("json export uses exact strings") {
  auto j = to_json(fn({lin({atom("0", "0", "20"), atom("2", "0", "40"), atom("5", "-50", "50")})}));
  const auto& piece = j["components"][0]["pieces"][1];
  CHECK(piece["x_low"] == "20");
  CHECK(piece["x_high"] == "40");
  CHECK(piece["boundary"]["slope"] == "-1/2");
  CHECK(piece["boundary"]["t_at_x_low"] == "12");
  CHECK(piece["value"]["x"] == "5/2");
  CHECK(piece["value"]["c"] == "-110");
  CHECK(j["components"][0]["pieces"][2]["x_high"] == "inf");
  CHECK(j["components"][0]["atoms"][2] == nlohmann::json({"5", "-50", "50"}));
}
