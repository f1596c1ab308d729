// JSON form of energy functions and their regions.
//
//   {"components": [{"atoms": [["0","0","20"], ...],
//                    "pieces": [{"x_low": "20", "x_high": "40", "feasible": true,
//                                "boundary": {"slope": "-1/2", "t_at_x_low": "12"},
//                                "value": {"t": "5", "x": "5/2", "c": "-110"}}]}]}
//
// Numbers are canonical "p/q" strings; an unbounded x_high is "inf".
// Components appear in lexicographic order of their atoms.

#pragma once

#include "rtea/rtef.hpp"

#include <nlohmann/json.hpp>

namespace rtea {

nlohmann::json to_json(const LinearRtef& l);
nlohmann::json to_json(const Rtef& f);

}  // namespace rtea
