#include "bellsim/io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

namespace bellsim {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json axis_to_json(const AxisRange& ax) {
  return ordered_json{{"name", ax.name}, {"lo", ax.lo}, {"hi", ax.hi}, {"n", ax.n}};
}

ordered_json grid_to_json(const SweepGrid& grid) {
  const char* target = "transmission";
  ordered_json fixed;
  switch (grid.target) {
    case SweepTarget::kTransmission:
      target = "transmission";
      fixed = ordered_json{{"phi_h", grid.base.phi_h},
                           {"phi_v", grid.base.phi_v},
                           {"chi_h", grid.base.chi_h},
                           {"chi_v", grid.base.chi_v}};
      break;
    case SweepTarget::kPhiPair:
      target = "phi";
      fixed = ordered_json{{"transmission_h", grid.base.transmission_h()},
                           {"transmission_v", grid.base.transmission_v()},
                           {"chi_h", grid.base.chi_h},
                           {"chi_v", grid.base.chi_v}};
      break;
    case SweepTarget::kChiPair:
      target = "chi";
      fixed = ordered_json{{"transmission_h", grid.base.transmission_h()},
                           {"transmission_v", grid.base.transmission_v()},
                           {"phi_h", grid.base.phi_h},
                           {"phi_v", grid.base.phi_v}};
      break;
  }
  ordered_json j{
      {"target", target},
      {"axis1", axis_to_json(grid.axis1)},
      {"axis2", axis_to_json(grid.axis2)},
      {"fixed", fixed},
  };
  if (grid.x.has_value()) {
    j["x"] = *grid.x;
  }
  return j;
}

ordered_json point_to_json(const SweepGrid& grid, const GridPoint& p) {
  return ordered_json{{"i", p.i},
                      {"j", p.j},
                      {"axis1", grid.axis1.at(p.i)},
                      {"axis2", grid.axis2.at(p.j)},
                      {"value", p.value}};
}

ordered_json refined_to_json(const RefinedPoint& p) {
  return ordered_json{{"axis1", p.t1}, {"axis2", p.t2}, {"value", p.value}};
}

}  // namespace

std::string format_sig12(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_fixed12(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

void write_surface_csv(std::ostream& os, const Surface& surface) {
  os << "axis1,axis2,value\n";
  const int n1 = surface.grid.axis1.n;
  const int n2 = surface.grid.axis2.n;
  for (int i = 0; i < n1; ++i) {
    const double t1 = surface.grid.axis1.at(i);
    for (int j = 0; j < n2; ++j) {
      os << format_sig12(t1) << ',' << format_sig12(surface.grid.axis2.at(j)) << ','
         << format_sig12(surface.value_at(i, j)) << '\n';
    }
  }
}

std::string surface_to_json(const Surface& surface, int indent) {
  ordered_json j{
      {"grid", grid_to_json(surface.grid)},
      {"values", surface.values},
      {"argmax", point_to_json(surface.grid, surface.argmax)},
      {"argmin", point_to_json(surface.grid, surface.argmin)},
  };
  if (surface.refined_max.has_value()) {
    j["refined_max"] = refined_to_json(*surface.refined_max);
  }
  if (surface.refined_min.has_value()) {
    j["refined_min"] = refined_to_json(*surface.refined_min);
  }
  return j.dump(indent) + "\n";
}

void write_tradeoff_csv(std::ostream& os, const std::vector<TradeoffRow>& rows) {
  os << "x,max_info_gain,success_probability\n";
  for (const TradeoffRow& r : rows) {
    os << format_sig12(r.x) << ',' << format_sig12(r.max_info_gain) << ','
       << format_sig12(r.success_probability) << '\n';
  }
}

std::string tradeoff_to_json(const std::vector<TradeoffRow>& rows, int indent) {
  ordered_json arr = ordered_json::array();
  for (const TradeoffRow& r : rows) {
    arr.push_back(ordered_json{{"x", r.x},
                               {"max_info_gain", r.max_info_gain},
                               {"success_probability", r.success_probability}});
  }
  return ordered_json{{"rows", arr}}.dump(indent) + "\n";
}

}  // namespace bellsim
