#include "swarmloc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "swarmloc/errors.hpp"
#include "swarmloc/random.hpp"
#include "swarmloc/report.hpp"

namespace swarmloc {

void DeployConfig::validate() const {
  if (n_sus < 0) throw ConfigError("n_sus", "must be >= 0");
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw ConfigError("half_width", "must be positive and finite");
  if (!(pu_distance >= kMinPuDistance && pu_distance <= kMaxPuDistance))
    throw ConfigError("pu_distance", "must lie in [30000, 100000] m");
  if (!std::isfinite(pu_bearing)) throw ConfigError("pu_bearing", "must be finite");
}

Scenario Scenario::with_emitter(Point p) const {
  Scenario s = *this;
  s.emitter = p;
  return s;
}

Scenario deploy_network(const DeployConfig& cfg) {
  cfg.validate();
  Rng rng = make_rng(cfg.seed, Stream::kDeploy);
  Scenario s;
  s.bs = {0.0, 0.0};
  s.half_width = cfg.half_width;
  s.sus.reserve(static_cast<std::size_t>(cfg.n_sus));
  for (int i = 0; i < cfg.n_sus; ++i) {
    const double x = uniform(rng, -cfg.half_width, cfg.half_width);
    const double y = uniform(rng, -cfg.half_width, cfg.half_width);
    s.sus.push_back(s.bs + Point{x, y});
  }
  s.pu = s.bs + Point{cfg.pu_distance * std::cos(cfg.pu_bearing),
                      cfg.pu_distance * std::sin(cfg.pu_bearing)};
  return s;
}

void write_scenario_csv(std::ostream& out, const Scenario& s) {
  auto row = [&](const char* role, std::size_t index, const Point& p) {
    out << role << ',' << index << ',' << format_double(p.x) << ',' << format_double(p.y) << '\n';
  };
  out << "role,index,x,y\n";
  row("bs", 0, s.bs);
  for (std::size_t i = 0; i < s.sus.size(); ++i) row("su", i, s.sus[i]);
  row("pu", 0, s.pu);
  if (s.emitter) row("emitter", 0, *s.emitter);
}

Scenario read_scenario_csv(std::istream& in) {
  Scenario s;
  std::string line;
  if (!std::getline(in, line) || line.rfind("role,index,x,y", 0) != 0)
    throw UsageError("scenario csv: missing header");
  bool have_bs = false;
  bool have_pu = false;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string role, index, x, y;
    if (!std::getline(row, role, ',') || !std::getline(row, index, ',') ||
        !std::getline(row, x, ',') || !std::getline(row, y))
      throw UsageError("scenario csv: malformed line " + std::to_string(lineno));
    Point p;
    try {
      p = {std::stod(x), std::stod(y)};
    } catch (const std::exception&) {
      throw UsageError("scenario csv: bad coordinate on line " + std::to_string(lineno));
    }
    if (role == "bs") {
      s.bs = p;
      have_bs = true;
    } else if (role == "su") {
      if (std::stoul(index) != s.sus.size())
        throw UsageError("scenario csv: SU rows out of order on line " + std::to_string(lineno));
      s.sus.push_back(p);
    } else if (role == "pu") {
      s.pu = p;
      have_pu = true;
    } else if (role == "emitter") {
      s.emitter = p;
    } else {
      throw UsageError("scenario csv: unknown role '" + role + "'");
    }
  }
  if (!have_bs || !have_pu) throw UsageError("scenario csv: bs and pu rows are required");
  double hw = 0.0;
  for (const Point& p : s.sus) hw = std::max({hw, std::abs(p.x - s.bs.x), std::abs(p.y - s.bs.y)});
  s.half_width = hw;
  return s;
}

}  // namespace swarmloc
