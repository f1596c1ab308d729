#include "rtea/energy.hpp"

#include <stdexcept>

namespace rtea {

Energy Energy::finite(Rational value) {
  if (sgn(value) < 0) {
    throw std::invalid_argument("negative energy " + to_string(value));
  }
  return Energy(Kind::Finite, std::move(value));
}

std::string to_string(const Energy& e) {
  switch (e.kind()) {
    case Energy::Kind::Bottom:
      return "bot";
    case Energy::Kind::Infinity:
      return "inf";
    case Energy::Kind::Finite:
      break;
  }
  return to_string(e.value());
}

std::ostream& operator<<(std::ostream& os, const Energy& e) { return os << to_string(e); }

Duration Duration::finite(Rational value) {
  if (sgn(value) < 0) {
    throw std::invalid_argument("negative duration " + to_string(value));
  }
  Duration d;
  d.value_ = std::move(value);
  return d;
}

std::string to_string(const Duration& d) {
  return d.is_infinite() ? std::string("inf") : to_string(d.value());
}

std::ostream& operator<<(std::ostream& os, const Duration& d) { return os << to_string(d); }

}  // namespace rtea
