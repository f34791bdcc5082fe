#include "picard3/fan_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "picard3/linalg.hpp"

namespace picard3 {

namespace {

using nlohmann::ordered_json;

long long int_field(const ordered_json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string("fan JSON: ") + what + " must be an integer");
  return j.get<long long>();
}

// A loaded fan that coincides with some X(n,b) gets the family tag back, so
// class coordinates stay in the (e,f,g) basis across a save/load round trip.
void recognise_family(Fan& fan) {
  const int n = fan.dimension;
  if (n < 2 || fan.num_rays() != n + 3) return;
  const Int b = -fan.rays[n + 2][n - 1];
  if (b < 0 || b > 1 << 20) return;
  const Fan ref = build_family_fan(n, static_cast<int>(b));
  if (fan.rays != ref.rays) return;
  auto cone_set = [](const Fan& f) {
    auto cones = f.maximal_cones;
    std::sort(cones.begin(), cones.end());
    return cones;
  };
  if (cone_set(fan) != cone_set(ref)) return;
  fan.family = FamilyParams{n, static_cast<int>(b)};
  if (fan.ray_labels.empty()) fan.ray_labels = ref.ray_labels;
}

}  // namespace

Fan fan_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("fan JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("fan JSON: top level must be an object");
  if (!j.contains("dimension") || !j.contains("rays") || !j.contains("maximal_cones"))
    throw std::invalid_argument("fan JSON: need dimension, rays, maximal_cones");

  Fan fan;
  const long long dim = int_field(j["dimension"], "dimension");
  if (dim < 1 || dim > 64) throw std::invalid_argument("fan JSON: dimension out of range");
  fan.dimension = static_cast<int>(dim);

  if (!j["rays"].is_array() || j["rays"].empty())
    throw std::invalid_argument("fan JSON: rays must be a non-empty array");
  std::set<Vec> seen;
  for (const auto& jr : j["rays"]) {
    if (!jr.is_array() || static_cast<int>(jr.size()) != fan.dimension)
      throw std::invalid_argument("fan JSON: each ray needs exactly `dimension` coordinates");
    Vec r;
    for (const auto& c : jr) r.push_back(int_field(c, "ray coordinate"));
    Int g = 0;
    for (const Int& c : r) g = gcd(g, abs(c));
    if (g == 0) throw std::invalid_argument("fan JSON: zero ray generator");
    if (g != 1) throw std::invalid_argument("fan JSON: ray generator is not primitive");
    if (!seen.insert(r).second) throw std::invalid_argument("fan JSON: duplicate ray generator");
    fan.rays.push_back(std::move(r));
  }

  if (!j["maximal_cones"].is_array() || j["maximal_cones"].empty())
    throw std::invalid_argument("fan JSON: maximal_cones must be a non-empty array");
  for (const auto& jc : j["maximal_cones"]) {
    if (!jc.is_array() || jc.empty())
      throw std::invalid_argument("fan JSON: each maximal cone must be a non-empty array");
    std::vector<int> cone;
    for (const auto& ji : jc) {
      const long long idx = int_field(ji, "cone ray index");
      if (idx < 1 || idx > fan.num_rays())
        throw std::invalid_argument("fan JSON: cone ray index out of range (indices are 1-based)");
      cone.push_back(static_cast<int>(idx) - 1);
    }
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw std::invalid_argument("fan JSON: repeated ray index inside a cone");
    fan.maximal_cones.push_back(std::move(cone));
  }

  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != fan.num_rays())
      throw std::invalid_argument("fan JSON: labels must list one string per ray");
    for (const auto& jl : j["labels"]) {
      if (!jl.is_string()) throw std::invalid_argument("fan JSON: labels must be strings");
      fan.ray_labels.push_back(jl.get<std::string>());
    }
  }

  recognise_family(fan);
  return fan;
}

std::string fan_to_json(const Fan& fan) {
  ordered_json j;
  j["dimension"] = fan.dimension;
  j["rays"] = ordered_json::array();
  for (const Vec& r : fan.rays) {
    ordered_json jr = ordered_json::array();
    for (const Int& c : r) jr.push_back(c.convert_to<long long>());
    j["rays"].push_back(std::move(jr));
  }
  j["maximal_cones"] = ordered_json::array();
  for (const auto& cone : fan.maximal_cones) {
    ordered_json jc = ordered_json::array();
    for (int i : cone) jc.push_back(i + 1);
    j["maximal_cones"].push_back(std::move(jc));
  }
  if (!fan.ray_labels.empty()) j["labels"] = fan.ray_labels;
  return j.dump(2) + "\n";
}

Fan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fan file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fan_from_json(buf.str());
}

void save_fan(const Fan& fan, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write fan file: " + path);
  out << fan_to_json(fan);
  if (!out) throw std::runtime_error("failed writing fan file: " + path);
}

}  // namespace picard3
