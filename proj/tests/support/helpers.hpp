#pragma once

#include "rtea/rtef.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace rtea::testing {

inline Rational q(const char* text) { return *parse_rational(text); }

inline Atom atom(const char* r, const char* p, const char* b) { return {q(r), q(p), q(b)}; }

inline LinearRtef lin(std::initializer_list<Atom> atoms) {
  return normalize(std::vector<Atom>(atoms));
}

inline Rtef fn(std::initializer_list<LinearRtef> comps) {
  return Rtef::from_components(std::vector<LinearRtef>(comps));
}

inline Energy E(const char* text) { return Energy::finite(q(text)); }
inline Duration T(const char* text) { return Duration::finite(q(text)); }

}  // namespace rtea::testing
