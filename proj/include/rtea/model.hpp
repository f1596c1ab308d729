// Real-time energy automata and their text format.
//
//   rtea {
//     state closed rate 0 initial;
//     state operational rate 0 accepting;
//     trans closed -> operational price -20 bound 20;   # comment
//   }
//
// Numbers are decimals ("2.5", "-20") or fractions ("5/2").

#pragma once

#include "rtea/matrix.hpp"
#include "rtea/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtea {

struct State {
  std::string name;
  Rational rate;
  bool initial = false;
  bool accepting = false;

  friend bool operator==(const State&, const State&) = default;
};

struct Transition {
  std::string src;
  std::string dst;
  Rational price;
  Rational bound;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct RteaModel {
  std::vector<State> states;  // declaration order
  std::vector<Transition> transitions;

  /// Index into `states`, or npos.
  std::size_t find_state(std::string_view name) const;
  const State& initial_state() const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const RteaModel&, const RteaModel&) = default;
};

class ModelError : public std::runtime_error {
 public:
  enum class Code {
    Syntax,
    DuplicateState,
    MissingInitial,
    MultipleInitial,
    PositivePrice,
    BoundBelowPrice,
    NegativeRate,
    UndeclaredState,
  };

  ModelError(Code code, std::size_t line, std::size_t column, const std::string& what);

  Code code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Code code_;
  std::size_t line_;
  std::size_t column_;
};

const char* to_string(ModelError::Code code);

/// Throws ModelError.
RteaModel parse_model(std::string_view text);

/// Text that parse_model reads back into an equal model.
std::string serialize(const RteaModel& m);

/// Matrix form with accepting states first (in declaration order), then the
/// others. The entry for i -> j is the supremum of the atoms
/// (rate(i), price, bound) of all transitions from i to j.
AutomatonRep to_matrix_rep(const RteaModel& m);

/// Permutation used by to_matrix_rep: order[row] is the state index.
std::vector<std::size_t> matrix_order(const RteaModel& m);

}  // namespace rtea
