#pragma once

#include <map>
#include <string>

#include "fnls/field.hpp"

namespace fnls {

// Named initial data, written "name:key=value,key=value".
//   plane:a=,k=             a e^{ikx} (k is snapped to the nearest lattice mode)
//   gaussian:a=,w=,x0=,k0=  a exp(-(x-x0)^2/(2w^2)) e^{i k0 x}
//   sech:a=,w=,x0=,k0=      a sech((x-x0)/w) e^{i k0 x}
//   zero
// Omitted keys take defaults a=1, w=1, x0=0, k=k0=0.
struct InitialDataSpec {
  std::string name;
  std::map<std::string, double> params;

  double get(const std::string& key, double fallback) const;
};

InitialDataSpec parse_initial_data(const std::string& text);

Field make_initial_data(const InitialDataSpec& spec, const Grid& grid);
Field make_initial_data(const std::string& text, const Grid& grid);

}  // namespace fnls
