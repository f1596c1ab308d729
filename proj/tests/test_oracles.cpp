#include "rtea/matrix.hpp"
#include "rtea/oracles.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace rtea;
using namespace rtea::oracles;
using namespace rtea::testing;

namespace {

RteaModel load(const std::string& name) {
  std::ifstream in(std::string(RTEA_MODELS_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_model(s.str());
}

DpConfig grid(const Rational& t, const Rational& delta) {
  Rational steps = t / delta;
  return {delta, static_cast<std::size_t>(steps.get_num().get_ui())};
}

}  // namespace

TEST_CASE("dp lower bound on the satellite") {
  RteaModel sat = load("satellite.rtea");
  CHECK(dp_lower_bound(sat, 20, 10, grid(10, 1)) == E("0"));
  CHECK(dp_lower_bound(sat, 19, 10, grid(10, 1)) == Energy::bottom());
  CHECK(dp_lower_bound(sat, 19, 10, grid(10, q("1/8"))) == Energy::bottom());
  CHECK(dp_lower_bound(sat, 0, 0, grid(0, 1)) == Energy::bottom());
  CHECK(dp_lower_bound(sat, 50, 0, grid(0, 1)) == E("0"));
  CHECK_THROWS_AS(dp_lower_bound(sat, 50, 3, DpConfig{1, 2}), std::invalid_argument);
}

TEST_CASE("split oracle") {
  LinearRtef f1 = lin({atom("0", "0", "30"), atom("4", "-10", "30")});
  LinearRtef f2 = lin({atom("0", "0", "20"), atom("1", "0", "40"), atom("5", "-50", "50")});
  CHECK(compose_split_oracle(f1, f2, E("50"), 2, 8) == E("0"));
  CHECK(compose_split_oracle(LinearRtef(), f2, E("45"), 3, 8) == eval(f2, E("45"), T("3")));
  CHECK(compose_split_oracle(f1, f2, Energy::bottom(), 3, 8) == Energy::bottom());
}

TEST_CASE("vertex oracle") {
  std::vector<Atom> seq{atom("0", "-20", "20"), atom("2", "-20", "20"), atom("5", "-10", "10")};
  CHECK(sequence_value_by_vertices(seq, E("30"), 7) == E("0"));
  CHECK(sequence_value_by_vertices(seq, E("10"), 100) == Energy::bottom());
  CHECK(sequence_value_by_vertices(seq, E("60"), 0) == E("10"));
}

TEST_CASE("lasso search") {
  RteaModel pump = load("pump.rtea");
  CHECK(buchi_unroll(pump, 3, 2, 50));
  CHECK_FALSE(buchi_unroll(pump, 3, 1, 50));
  RteaModel paying =
      parse_model("rtea { state p rate 1 initial accepting; trans p -> p price -1 bound 5; }");
  CHECK_FALSE(buchi_unroll(paying, 3, 2, 50));
  RteaModel none = parse_model("rtea { state p rate 1 initial; trans p -> p price 0 bound 5; }");
  CHECK_FALSE(buchi_unroll(none, 30, 2, 50));
}

TEST_CASE("dp is a lower bound that converges", "[property]") {
  Gen g(4101);
  std::vector<RteaModel> models{load("satellite.rtea")};
  for (int i = 0; i < 10; ++i) models.push_back(g.model(3, 5));
  for (const RteaModel& m : models) {
    Rtef behavior = finite_behavior(to_matrix_rep(m));
    for (int s = 0; s < 6; ++s) {
      Rational x0 = g.integer(0, 40);
      Rational t = g.integer(0, 12);
      Energy exact = eval(behavior, Energy::finite(x0), Duration::finite(t));
      Energy previous = Energy::bottom();
      for (Rational delta : {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8)}) {
        Energy lb = dp_lower_bound(m, x0, t, grid(t, delta));
        INFO(serialize(m) << " x0=" << x0 << " t=" << t << " delta=" << delta);
        REQUIRE(lb <= exact);
        REQUIRE(previous <= lb);
        previous = lb;
      }
    }
  }
}

TEST_CASE("lasso search implies buchi", "[property]") {
  Gen g(4202);
  int found = 0;
  for (int i = 0; i < 150; ++i) {
    RteaModel m = g.model(3, 5);
    OmegaVal b = buchi_behavior(to_matrix_rep(m));
    Rational x0 = g.integer(0, 30);
    Rational t = g.integer(0, 10);
    if (buchi_unroll(m, x0, t, 10)) {
      ++found;
      INFO(serialize(m) << " x0=" << x0 << " t=" << t);
      REQUIRE(eval_omega(b, Energy::finite(x0), Duration::finite(t)));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("dp can miss runs whose optimal waits are off the grid") {
  // Waiting 1/2 in each state is the only run; a unit grid cannot split the
  // budget, so the bound is bottom although the exact value is 1/2.
  RteaModel m = parse_model(R"(rtea {
      state a rate 1 initial;
      state b rate 2;
      state c rate 0 accepting;
      trans a -> b price 0 bound 1/2;
      trans b -> c price -1 bound 3/2;
    })");
  Energy exact = eval(finite_behavior(to_matrix_rep(m)), E("0"), T("1"));
  CHECK(exact == E("1/2"));
  CHECK(dp_lower_bound(m, 0, 1, grid(1, 1)) == Energy::bottom());
  CHECK(dp_lower_bound(m, 0, 1, grid(1, q("1/2"))) == E("1/2"));
}
