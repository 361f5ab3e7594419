#include "mapenum/substructure_json.hpp"

#include <string>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  require(j.is_object(), "substructure JSON must be an object");
  auto it = j.find(name);
  require(it != j.end(), std::string("substructure JSON is missing \"") + name + "\"");
  return *it;
}

int as_int(const json& j, const char* what) {
  require(j.is_number_integer(), std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> as_int_list(const json& j, const char* what) {
  require(j.is_array(), std::string(what) + " must be an array");
  std::vector<int> out;
  for (const json& item : j) out.push_back(as_int(item, what));
  return out;
}

}  // namespace

json gamma_to_json(const SubstructureGamma& g) {
  json phi = json::object();
  for (const auto& [tail, head] : g.arrows()) phi[std::to_string(tail)] = head;
  return json{{"K", g.columns()},
              {"w", {g.occupancy()[0], g.occupancy()[1]}},
              {"R1", std::vector<int>(g.marks(0).begin(), g.marks(0).end())},
              {"R2", std::vector<int>(g.marks(1).begin(), g.marks(1).end())},
              {"phi", phi}};
}

SubstructureGamma gamma_from_json(const json& j) {
  const int K = as_int(field(j, "K"), "K");
  const json& w = field(j, "w");
  require(w.is_array() && w.size() == 2, "w must be a two-row array");
  Occupancy occupancy{as_int_list(w[0], "w"), as_int_list(w[1], "w")};
  std::array<ColumnSet, 2> marks;
  for (int c : as_int_list(field(j, "R1"), "R1")) marks[0].insert(c);
  for (int c : as_int_list(field(j, "R2"), "R2")) marks[1].insert(c);
  ColumnMap arrows;
  if (auto it = j.find("phi"); it != j.end()) {
    require(it->is_object(), "phi must be an object");
    for (const auto& [key, value] : it->items()) {
      std::size_t used = 0;
      int tail = -1;
      try {
        tail = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      require(used == key.size() && !key.empty(), "phi keys must be column indices");
      arrows[tail] = as_int(value, "phi value");
    }
  }
  return SubstructureGamma(K, std::move(occupancy), std::move(marks), std::move(arrows));
}

json omega_to_json(const SubstructureOmega& o) {
  return json{{"K", o.columns()}, {"R1", o.marks_top()}, {"R2", o.marks_bottom()}, {"w", o.occupancy()}};
}

SubstructureOmega omega_from_json(const json& j) {
  return SubstructureOmega(as_int(field(j, "K"), "K"), as_int(field(j, "R1"), "R1"), as_int(field(j, "R2"), "R2"),
                           as_int_list(field(j, "w"), "w"));
}

}  // namespace mapenum
