#include "igt/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace igt {

using nlohmann::json;

bool FrozenConstants::complete() const {
  return c_d_3_2 == c_d_3_2 && C_d_3_2 == C_d_3_2 && kappa == kappa &&
         horocycle_mu_exponent == horocycle_mu_exponent && range_kappa0 == range_kappa0 &&
         range_mu == range_mu;
}

std::string FrozenConstants::to_json() const {
  json j;
  j["c_d_3_2"] = c_d_3_2;
  j["C_d_3_2"] = C_d_3_2;
  j["kappa"] = kappa;
  j["horocycle_mu_exponent"] = horocycle_mu_exponent;
  j["range_kappa0"] = range_kappa0;
  j["range_mu"] = range_mu;
  return j.dump(2) + "\n";
}

FrozenConstants FrozenConstants::from_json(const std::string& text) {
  json j = json::parse(text);
  const char* keys[] = {"c_d_3_2", "C_d_3_2", "kappa", "horocycle_mu_exponent",
                        "range_kappa0", "range_mu"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || (it.key() == k);
    if (!known) throw std::invalid_argument("constants file: unknown key '" + it.key() + "'");
  }
  FrozenConstants c;
  c.c_d_3_2 = j.at("c_d_3_2").get<double>();
  c.C_d_3_2 = j.at("C_d_3_2").get<double>();
  c.kappa = j.at("kappa").get<double>();
  c.horocycle_mu_exponent = j.at("horocycle_mu_exponent").get<double>();
  c.range_kappa0 = j.at("range_kappa0").get<double>();
  c.range_mu = j.at("range_mu").get<double>();
  return c;
}

void FrozenConstants::save(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write constants file: " + path);
  os << to_json();
}

FrozenConstants FrozenConstants::load(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read constants file: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return from_json(ss.str());
}

}  // namespace igt
