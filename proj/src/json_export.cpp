#include "rtea/json_export.hpp"

#include "rtea/regions.hpp"

namespace rtea {

nlohmann::json to_json(const LinearRtef& l) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const Atom& a : l.atoms()) {
    atoms.push_back({to_string(a.rate), to_string(a.price), to_string(a.bound)});
  }
  nlohmann::json pieces = nlohmann::json::array();
  for (const RegionPiece& p : extract_regions(l)) {
    nlohmann::json piece;
    piece["x_low"] = to_string(p.x_low);
    piece["x_high"] = p.x_high ? to_string(*p.x_high) : "inf";
    piece["feasible"] = p.feasible;
    if (p.feasible) {
      piece["boundary"] = {{"slope", to_string(p.boundary.slope)},
                           {"t_at_x_low", to_string(p.boundary.at(p.x_low))}};
      piece["value"] = {{"t", to_string(p.value.coef_t)},
                        {"x", to_string(p.value.coef_x)},
                        {"c", to_string(p.value.constant)}};
    }
    pieces.push_back(std::move(piece));
  }
  return {{"atoms", std::move(atoms)}, {"pieces", std::move(pieces)}};
}

nlohmann::json to_json(const Rtef& f) {
  nlohmann::json comps = nlohmann::json::array();
  for (const LinearRtef& l : f.components()) comps.push_back(to_json(l));
  return {{"components", std::move(comps)}};
}

}  // namespace rtea
