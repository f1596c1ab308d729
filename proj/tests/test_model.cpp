#include "rtea/model.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace rtea;
using namespace rtea::testing;

namespace {

std::string read_model(const std::string& name) {
  std::ifstream in(std::string(RTEA_MODELS_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ModelError::Code error_code(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ModelError& e) {
    return e.code();
  }
  FAIL("model parsed without error: " << text);
  return ModelError::Code::Syntax;
}

}  // namespace

TEST_CASE("the satellite model parses") {
  RteaModel m = parse_model(read_model("satellite.rtea"));
  CHECK(m.states.size() == 6);
  CHECK(m.transitions.size() == 7);
  CHECK(m.initial_state().name == "closed");

  AutomatonRep rep = to_matrix_rep(m);
  CHECK(rep.m.rows() == 6);
  CHECK(rep.k == 1);
  std::vector<std::size_t> order = matrix_order(m);
  CHECK(m.states[order[0]].name == "operational");
  std::size_t closed = 0, half = 0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (m.states[order[r]].name == "closed") closed = r;
    if (m.states[order[r]].name == "half") half = r;
  }
  CHECK(rep.alpha[closed]);
  CHECK(rep.m(closed, half) == Rtef::atom(atom("0", "-20", "20")));
}

TEST_CASE("numbers and comments") {
  RteaModel m = parse_model(R"(
    # leading comment
    rtea {
      state a rate 5/2 initial;   # trailing
      state b rate 0.5 accepting;
      trans a -> b price -1.5 bound 3/2;
    })");
  CHECK(m.states[0].rate == q("5/2"));
  CHECK(m.states[1].rate == q("1/2"));
  CHECK(m.transitions[0].price == q("-3/2"));
}

TEST_CASE("parallel transitions form a supremum") {
  RteaModel m = parse_model(R"(rtea {
      state a rate 1 initial;
      state b rate 0 accepting;
      trans a -> b price -5 bound 5;
      trans a -> b price 0 bound 9;
    })");
  AutomatonRep rep = to_matrix_rep(m);
  CHECK(rep.m(1, 0).components().size() == 2);
  CHECK(eval(rep.m(1, 0), E("5"), T("0")) == E("0"));
  CHECK(eval(rep.m(1, 0), E("9"), T("0")) == E("9"));

  RteaModel empty = parse_model("rtea { state a rate 1 initial; state b rate 1; }");
  CHECK(to_matrix_rep(empty).m == RtefMatrix(2, 2));
}

TEST_CASE("model errors carry a code and a position") {
  CHECK(error_code("rtea { state a rate 1 initial; trans a -> a price 5 bound 5; }") ==
        ModelError::Code::PositivePrice);
  CHECK(error_code("rtea { state a rate 1 initial; trans a -> a price -10 bound 3; }") ==
        ModelError::Code::BoundBelowPrice);
  CHECK(error_code("rtea { state a rate 1 initial; state a rate 2; }") ==
        ModelError::Code::DuplicateState);
  CHECK(error_code("rtea { state a rate 1; }") == ModelError::Code::MissingInitial);
  CHECK(error_code("rtea { state a rate 1 initial; state b rate 1 initial; }") ==
        ModelError::Code::MultipleInitial);
  CHECK(error_code("rtea { state a rate -1 initial; }") == ModelError::Code::NegativeRate);
  CHECK(error_code("rtea { state a rate 1 initial; trans a -> b price 0 bound 0; }") ==
        ModelError::Code::UndeclaredState);
  CHECK(error_code("rtea { state a rate 1 initial }") == ModelError::Code::Syntax);
  CHECK(error_code("rtea { state a rate x initial; }") == ModelError::Code::Syntax);
  CHECK(error_code("rtea { state a rate 1/0 initial; }") == ModelError::Code::Syntax);
  CHECK(error_code("rtea { } extra") == ModelError::Code::Syntax);
  CHECK(error_code("rtea { state a rate 1 initial; } $") == ModelError::Code::Syntax);

  try {
    parse_model("rtea {\n  state a rate 1 initial;\n  trans a -> a price 3 bound 5;\n}");
    FAIL("expected an error");
  } catch (const ModelError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 22);
  }
}

TEST_CASE("serialize round trips", "[property]") {
  Gen g(3101);
  for (int i = 0; i < 200; ++i) {
    RteaModel m = g.model(static_cast<std::size_t>(g.integer(1, 5)), g.integer(0, 8));
    std::string text = serialize(m);
    RteaModel back = parse_model(text);
    REQUIRE(back == m);
    REQUIRE(serialize(back) == text);
  }
  RteaModel sat = parse_model(read_model("satellite.rtea"));
  CHECK(parse_model(serialize(sat)) == sat);
}
