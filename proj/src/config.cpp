#include "bdris/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "bdris/baselines.hpp"
#include "bdris/errors.hpp"

namespace bdris {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& v) {
  std::size_t pos = 0;
  const double d = std::stod(v, &pos);
  if (pos != v.size()) throw std::invalid_argument("trailing characters");
  return d;
}

long long to_int(const std::string& v) {
  long long x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size()) throw std::invalid_argument("not an integer");
  return x;
}

std::uint64_t to_u64(const std::string& v) {
  std::uint64_t x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw std::invalid_argument("not an unsigned integer");
  }
  return x;
}

bool to_bool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument("expected true/false");
}

template <typename T, typename Conv>
std::vector<T> to_list(const std::string& v, Conv conv) {
  std::vector<T> out;
  for (const auto& item : split_list(v)) out.push_back(static_cast<T>(conv(item)));
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

using Setter = std::function<void(ExperimentConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"pl_ref_db", [](auto& c, auto& v) { c.scenario.pl_ref_db = to_double(v); }},
      {"d_bs_ue_center", [](auto& c, auto& v) { c.scenario.d_bs_ue_center = to_double(v); }},
      {"ue_radius", [](auto& c, auto& v) { c.scenario.ue_radius = to_double(v); }},
      {"d_bs_ris", [](auto& c, auto& v) { c.scenario.d_bs_ris = to_double(v); }},
      {"d_ris_ue_center", [](auto& c, auto& v) { c.scenario.d_ris_ue_center = to_double(v); }},
      {"gamma_direct", [](auto& c, auto& v) { c.scenario.gamma_direct = to_double(v); }},
      {"gamma_bs_ris", [](auto& c, auto& v) { c.scenario.gamma_bs_ris = to_double(v); }},
      {"gamma_ris_ue", [](auto& c, auto& v) { c.scenario.gamma_ris_ue = to_double(v); }},
      {"seed", [](auto& c, auto& v) { c.scenario.seed = to_u64(v); }},
      {"realizations", [](auto& c, auto& v) { c.scenario.realizations = static_cast<int>(to_int(v)); }},
      {"system",
       [](auto& c, auto& v) {
         if (v == "siso") c.system = SystemKind::siso;
         else if (v == "mumiso") c.system = SystemKind::mumiso;
         else throw std::invalid_argument("expected siso or mumiso");
       }},
      {"channel_model",
       [](auto& c, auto& v) {
         if (v == "pathloss") c.channel_model = ChannelModel::pathloss;
         else if (v == "iid") c.channel_model = ChannelModel::iid;
         else throw std::invalid_argument("expected pathloss or iid");
       }},
      {"N_list", [](auto& c, auto& v) { c.n_list = to_list<int>(v, to_int); }},
      {"L", [](auto& c, auto& v) { c.antennas = static_cast<int>(to_int(v)); }},
      {"K", [](auto& c, auto& v) { c.users = static_cast<int>(to_int(v)); }},
      {"bits", [](auto& c, auto& v) { c.bits = static_cast<int>(to_int(v)); }},
      {"eps", [](auto& c, auto& v) { c.eps = to_double(v); }},
      {"rho", [](auto& c, auto& v) { c.rho = to_double(v); }},
      {"delay_d", [](auto& c, auto& v) { c.delay_d = static_cast<int>(to_int(v)); }},
      {"branch_pruning", [](auto& c, auto& v) { c.branch_pruning = to_bool(v); }},
      {"obstructed", [](auto& c, auto& v) { c.obstructed = to_bool(v); }},
      {"random_root", [](auto& c, auto& v) { c.random_root = to_bool(v); }},
      {"algorithms", [](auto& c, auto& v) { c.algorithms = to_list<std::string>(v, [](auto& s) { return s; }); }},
      {"output_path", [](auto& c, auto& v) { c.output_path = v; }},
      {"rho_list", [](auto& c, auto& v) { c.rho_list = to_list<double>(v, to_double); }},
      {"d_list", [](auto& c, auto& v) { c.d_list = to_list<int>(v, to_int); }},
      {"bits_list", [](auto& c, auto& v) { c.bits_list = to_list<int>(v, to_int); }},
      {"eps_list", [](auto& c, auto& v) { c.eps_list = to_list<double>(v, to_double); }},
      {"repetitions", [](auto& c, auto& v) { c.repetitions = static_cast<int>(to_int(v)); }},
      {"machine", [](auto& c, auto& v) { c.machine = v; }},
      {"record_timing", [](auto& c, auto& v) { c.record_timing = to_bool(v); }},
  };
  return table;
}

}  // namespace

bool ExperimentConfig::has_algorithm(const std::string& name) const {
  return std::find(algorithms.begin(), algorithms.end(), name) != algorithms.end();
}

void ExperimentConfig::validate() const {
  scenario.validate();
  if (n_list.empty()) throw ConfigError("N_list must not be empty");
  for (std::size_t k = 0; k < n_list.size(); ++k) {
    if (n_list[k] < 1) throw ConfigError("N_list entries must be positive");
    if (k > 0 && n_list[k] <= n_list[k - 1]) throw ConfigError("N_list must be strictly ascending");
  }
  if (antennas < 1 || users < 1) throw ConfigError("L and K must be positive");
  if (bits < 1 || bits > 8) throw ConfigError("bits must lie in [1, 8]");
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("eps must lie in (0, 1)");
  if (branch_pruning && !(rho > 0.0)) throw ConfigError("rho must be positive with branch pruning");
  if (delay_d < 0) throw ConfigError("delay_d must be non-negative");
  if (repetitions < 1) throw ConfigError("repetitions must be positive");
  for (const auto& a : algorithms) {
    if (a != "tree" && a != "baseline" && a != "diag_ris" && a != "oracle") {
      throw ConfigError("unknown algorithm '" + a + "'");
    }
    if (a == "baseline" && system == SystemKind::siso) {
      throw ConfigError("baseline is defined for the mumiso system only");
    }
    if (a == "diag_ris" && system == SystemKind::mumiso) {
      throw ConfigError("diag_ris is defined for the siso system only");
    }
  }
  if (has_algorithm("oracle")) {
    for (int n : n_list) {
      if (!oracle_fits(n, bits)) {
        throw SizeGuardError("oracle requested for N=" + std::to_string(n) + ", bits=" +
                             std::to_string(bits) + ", which exceeds 2^20 candidates");
      }
    }
  }
  for (int b : bits_list) {
    if (b < 1 || b > 8) throw ConfigError("bits_list entries must lie in [1, 8]");
  }
  for (double e : eps_list) {
    if (!(e > 0.0 && e < 1.0)) throw ConfigError("eps_list entries must lie in (0, 1)");
  }
  for (double r : rho_list) {
    if (!(r > 0.0)) throw ConfigError("rho_list entries must be positive");
  }
  for (int d : d_list) {
    if (d < 0) throw ConfigError("d_list entries must be non-negative");
  }
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    try {
      it->second(cfg, value);
    } catch (const std::exception& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": bad value '" + value +
                        "' for '" + key + "': " + e.what());
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace bdris
