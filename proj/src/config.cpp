#include "epf/config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace epf {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, sep)) {
    tok = trim(tok);
    if (!tok.empty()) out.push_back(tok);
  }
  return out;
}

double parse_double(const std::string& value, const std::string& field) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw structural_error("field '" + field + "': cannot parse number '" + value + "'");
  }
}

long long parse_int(const std::string& value, const std::string& field) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw structural_error("field '" + field + "': cannot parse integer '" + value + "'");
  }
}

bool parse_bool(const std::string& value, const std::string& field) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw structural_error("field '" + field + "': cannot parse boolean '" + value + "'");
}

std::vector<double> parse_numbers(const std::string& value, const std::string& field) {
  std::vector<double> out;
  for (const auto& tok : split(value, ',')) out.push_back(parse_double(tok, field));
  return out;
}

std::vector<GridAxis> parse_axes(const std::string& value, const std::string& field) {
  std::vector<GridAxis> axes;
  for (const auto& part : split(value, ';')) {
    const auto nums = split(part, ',');
    if (nums.size() != 3) throw structural_error("field '" + field + "': axis needs lo,hi,count");
    GridAxis a;
    a.lo = parse_double(nums[0], field);
    a.hi = parse_double(nums[1], field);
    a.count = static_cast<int>(parse_int(nums[2], field));
    axes.push_back(a);
  }
  return axes;
}

// Section -> ordered key/value pairs (duplicate keys kept in order).
using Sections = std::map<std::string, std::vector<std::pair<std::string, std::string>>>;

Sections parse_sections(const std::string& text) {
  Sections out;
  std::string section;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw structural_error("config line " + std::to_string(lineno) + ": bad section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw structural_error("config line " + std::to_string(lineno) + ": expected key = value");
    if (section.empty())
      throw structural_error("config line " + std::to_string(lineno) + ": key outside any [section]");
    out[section].push_back({trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
  }
  return out;
}

void apply_overrides(Sections& sections, const std::vector<std::string>& overrides) {
  for (const auto& ov : overrides) {
    const auto eq = ov.find('=');
    const auto dot = ov.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
      throw structural_error("override '" + ov + "' must look like section.key=value");
    const std::string section = trim(ov.substr(0, dot));
    const std::string key = trim(ov.substr(dot + 1, eq - dot - 1));
    const std::string value = trim(ov.substr(eq + 1));
    auto& entries = sections[section];
    std::erase_if(entries, [&](const auto& kv) { return kv.first == key; });
    entries.push_back({key, value});
  }
}

class SectionReader {
 public:
  SectionReader(const Sections& sections, std::string name) : name_(std::move(name)) {
    auto it = sections.find(name_);
    if (it != sections.end()) entries_ = &it->second;
  }

  bool present() const { return entries_ != nullptr; }

  std::optional<std::string> get(const std::string& key) const {
    if (!entries_) return std::nullopt;
    std::optional<std::string> out;
    for (const auto& [k, v] : *entries_) {
      if (k == key) out = v;  // last occurrence wins
    }
    return out;
  }

  std::string require(const std::string& key) const {
    auto v = get(key);
    if (!v) throw structural_error("missing required field '" + name_ + "." + key + "'");
    return *v;
  }

  std::vector<std::string> all(const std::string& key) const {
    std::vector<std::string> out;
    if (!entries_) return out;
    for (const auto& [k, v] : *entries_) {
      if (k == key) out.push_back(v);
    }
    return out;
  }

  std::string qualified(const std::string& key) const { return name_ + "." + key; }

 private:
  std::string name_;
  const std::vector<std::pair<std::string, std::string>>* entries_ = nullptr;
};

Mat parse_matrix(const std::string& value, int rows, int cols, const std::string& field) {
  // scalar (times identity), diagonal list, or ';'-separated rows
  const auto row_parts = split(value, ';');
  if (row_parts.size() == 1) {
    const auto nums = parse_numbers(row_parts[0], field);
    if (nums.size() == 1) {
      if (rows != cols) throw structural_error("field '" + field + "': scalar form needs a square matrix");
      return nums[0] * Mat::Identity(rows, cols);
    }
    if (static_cast<int>(nums.size()) == rows && rows == cols) {
      Mat m = Mat::Zero(rows, cols);
      for (int i = 0; i < rows; ++i) m(i, i) = nums[static_cast<std::size_t>(i)];
      return m;
    }
    throw structural_error("field '" + field + "': expected scalar, diagonal, or full rows");
  }
  if (static_cast<int>(row_parts.size()) != rows)
    throw structural_error("field '" + field + "': expected " + std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto nums = parse_numbers(row_parts[static_cast<std::size_t>(i)], field);
    if (static_cast<int>(nums.size()) != cols)
      throw structural_error("field '" + field + "': row " + std::to_string(i + 1) + " needs " +
                             std::to_string(cols) + " entries");
    for (int j = 0; j < cols; ++j) m(i, j) = nums[static_cast<std::size_t>(j)];
  }
  return m;
}

ProjectionVariant parse_variant(const std::string& value, const ProjectionVariant& defaults,
                                const std::string& field) {
  ProjectionVariant v = defaults;
  std::istringstream is(value);
  std::string tok;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      throw structural_error("field '" + field + "': variant token '" + tok + "' must be key=value");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    if (key == "name") v.name = val;
    else if (key == "rule") v.rule = val;
    else if (key == "level") v.level = static_cast<int>(parse_int(val, field));
    else if (key == "count") v.count = static_cast<int>(parse_int(val, field));
    else if (key == "bijection") v.bijection = bijection_kind_from_string(val);
    else if (key == "scale") v.scale = parse_double(val, field);
    else if (key == "elide_boundary") v.elide_boundary = parse_bool(val, field);
    else throw structural_error("field '" + field + "': unknown variant key '" + key + "'");
  }
  return v;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text, const std::vector<std::string>& overrides) {
  Sections sections = parse_sections(text);
  apply_overrides(sections, overrides);

  ExperimentConfig cfg;

  // [model]
  SectionReader model(sections, "model");
  if (!model.present()) throw structural_error("missing [model] section");
  cfg.model.dim_x = static_cast<int>(parse_int(model.require("dim_x"), model.qualified("dim_x")));
  cfg.model.dim_w = static_cast<int>(parse_int(model.require("dim_w"), model.qualified("dim_w")));
  cfg.model.dim_y = static_cast<int>(parse_int(model.require("dim_y"), model.qualified("dim_y")));
  if (cfg.model.dim_x < 1 || cfg.model.dim_w < 1 || cfg.model.dim_y < 1)
    throw structural_error("model dimensions must be >= 1");
  for (int k = 1; k <= cfg.model.dim_x; ++k) {
    const std::string key = "f" + std::to_string(k);
    cfg.model.drift.push_back(Polynomial::parse(model.require(key), cfg.model.dim_x));
  }
  for (int k = 1; k <= cfg.model.dim_x; ++k) {
    std::vector<Polynomial> row;
    for (int a = 1; a <= cfg.model.dim_w; ++a) {
      const std::string key = "sigma_" + std::to_string(k) + "_" + std::to_string(a);
      row.push_back(Polynomial::parse(model.require(key), cfg.model.dim_x));
    }
    cfg.model.dispersion.push_back(std::move(row));
  }
  cfg.model.process_noise =
      parse_matrix(model.require("q"), cfg.model.dim_w, cfg.model.dim_w, model.qualified("q"));
  for (int k = 1; k <= cfg.model.dim_y; ++k) {
    const std::string key = "h" + std::to_string(k);
    cfg.model.observation.push_back(Polynomial::parse(model.require(key), cfg.model.dim_x));
  }
  const std::string r = model.get("r").value_or("identity");
  if (r == "identity") {
    cfg.model.observation_noise_diag = Vec::Ones(cfg.model.dim_y);
  } else {
    const auto nums = parse_numbers(r, model.qualified("r"));
    if (nums.size() == 1) {
      cfg.model.observation_noise_diag = Vec::Constant(cfg.model.dim_y, nums[0]);
    } else if (static_cast<int>(nums.size()) == cfg.model.dim_y) {
      cfg.model.observation_noise_diag = Eigen::Map<const Vec>(nums.data(), cfg.model.dim_y);
    } else {
      throw structural_error("field 'model.r': expected 'identity', a scalar, or dim_y entries");
    }
  }

  // [statistics]
  SectionReader stats(sections, "statistics");
  if (!stats.present()) throw structural_error("missing [statistics] section");
  for (const auto& tok : split(stats.require("natural"), ';')) {
    cfg.statistics.push_back(MultiIndex::parse(tok));
  }

  // [manifold] + [quadrature]: the default variant
  ProjectionVariant defaults;
  SectionReader manifold(sections, "manifold");
  if (manifold.present()) {
    if (auto b = manifold.get("bijection")) defaults.bijection = bijection_kind_from_string(*b);
    if (auto s = manifold.get("scale")) defaults.scale = parse_double(*s, manifold.qualified("scale"));
  }
  SectionReader quad(sections, "quadrature");
  if (quad.present()) {
    if (auto rname = quad.get("rule")) defaults.rule = *rname;
    if (auto l = quad.get("level")) defaults.level = static_cast<int>(parse_int(*l, quad.qualified("level")));
    if (auto c = quad.get("count")) defaults.count = static_cast<int>(parse_int(*c, quad.qualified("count")));
    if (auto e = quad.get("elide_boundary"))
      defaults.elide_boundary = parse_bool(*e, quad.qualified("elide_boundary"));
  }

  SectionReader projection(sections, "projection");
  for (const auto& value : projection.all("variant")) {
    cfg.variants.push_back(parse_variant(value, defaults, "projection.variant"));
  }
  if (cfg.variants.empty()) cfg.variants.push_back(defaults);

  // [initial]
  SectionReader initial(sections, "initial");
  if (!initial.present()) throw structural_error("missing [initial] section");
  if (auto theta = initial.get("theta")) {
    const auto nums = parse_numbers(*theta, initial.qualified("theta"));
    cfg.theta0 = Eigen::Map<const Vec>(nums.data(), static_cast<Index>(nums.size()));
  }
  if (auto mean = initial.get("mean")) {
    const auto nums = parse_numbers(*mean, initial.qualified("mean"));
    cfg.init_mean = Eigen::Map<const Vec>(nums.data(), static_cast<Index>(nums.size()));
    cfg.init_cov = parse_matrix(initial.require("cov"), cfg.model.dim_x, cfg.model.dim_x,
                                initial.qualified("cov"));
  }
  {
    const auto nums = parse_numbers(initial.require("x0"), initial.qualified("x0"));
    cfg.x0 = Eigen::Map<const Vec>(nums.data(), static_cast<Index>(nums.size()));
  }

  // [run]
  SectionReader run(sections, "run");
  if (!run.present()) throw structural_error("missing [run] section");
  cfg.dt = parse_double(run.require("dt"), run.qualified("dt"));
  cfg.t_end = parse_double(run.require("t_end"), run.qualified("t_end"));
  cfg.seed = static_cast<std::uint64_t>(parse_int(run.require("seed"), run.qualified("seed")));
  if (auto s = run.get("output_stride"))
    cfg.output_stride = static_cast<int>(parse_int(*s, run.qualified("output_stride")));
  if (auto s = run.get("metric_stride"))
    cfg.metric_stride = static_cast<int>(parse_int(*s, run.qualified("metric_stride")));
  if (auto s = run.get("stepper")) {
    if (*s == "heun") cfg.heun = true;
    else if (*s != "euler") throw structural_error("field 'run.stepper': expected euler|heun");
  }

  // [baselines]
  SectionReader base(sections, "baselines");
  if (base.present()) {
    if (auto v = base.get("kalman_bucy")) cfg.baselines.kalman_bucy = parse_bool(*v, base.qualified("kalman_bucy"));
    if (auto v = base.get("particle_filter"))
      cfg.baselines.particle_filter = parse_bool(*v, base.qualified("particle_filter"));
    if (auto v = base.get("particles"))
      cfg.baselines.particle_count = static_cast<int>(parse_int(*v, base.qualified("particles")));
    if (auto v = base.get("resample")) {
      if (*v == "always") cfg.baselines.always_resample = true;
      else if (*v == "ess") cfg.baselines.always_resample = false;
      else throw structural_error("field 'baselines.resample': expected 'ess' or 'always'");
    }
    if (auto v = base.get("ks_scheme")) {
      if (*v != "none" && *v != "explicit" && *v != "crank_nicolson")
        throw structural_error("field 'baselines.ks_scheme': expected none|explicit|crank_nicolson");
      cfg.baselines.ks_scheme = *v;
    }
    if (auto v = base.get("ks_dt")) cfg.baselines.ks_dt = parse_double(*v, base.qualified("ks_dt"));
    if (auto v = base.get("ks_grid")) cfg.baselines.ks_grid = parse_axes(*v, base.qualified("ks_grid"));
    if (auto v = base.get("stability_limit"))
      cfg.baselines.stability_limit = parse_double(*v, base.qualified("stability_limit"));
  }

  // [compare]
  SectionReader compare(sections, "compare");
  if (compare.present()) {
    if (auto v = compare.get("grid")) cfg.compare.grid = parse_axes(*v, compare.qualified("grid"));
    if (auto v = compare.get("reference")) cfg.compare.reference = *v;
    if (auto v = compare.get("pairs")) {
      for (const auto& pair : split(*v, ';')) {
        const auto names = split(pair, ':');
        if (names.size() != 2) throw structural_error("field 'compare.pairs': each pair is a:b");
        cfg.compare.extra_pairs.push_back({names[0], names[1]});
      }
    }
    if (auto v = compare.get("snapshot_times")) {
      for (const auto& t : split(*v, ';'))
        cfg.compare.snapshot_times.push_back(parse_double(t, compare.qualified("snapshot_times")));
    }
    if (auto v = compare.get("moments")) {
      for (const auto& tok : split(*v, ';')) cfg.compare.moments.push_back(MultiIndex::parse(tok));
    }
  }

  // [output]
  SectionReader output(sections, "output");
  if (output.present()) {
    if (auto v = output.get("dir")) cfg.output_dir = *v;
  }

  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw structural_error("cannot open config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), overrides);
}

void ExperimentConfig::validate() const {
  model.validate();

  if (statistics.empty()) throw structural_error("statistics.natural must list at least one monomial");
  StatisticsBasis probe;
  probe.dim_x = model.dim_x;
  probe.natural = statistics;
  probe.validate();
  // catches observation-span violations before any computation starts
  const auto [assembled, coeffs_probe] =
      assemble_coefficients(model.scaled_to_unit_observation_noise(), statistics);
  (void)coeffs_probe;
  for (const auto& idx : compare.moments) {
    if (idx.dim() != model.dim_x)
      throw structural_error("compare.moments entries must have dim_x exponents");
    if (assembled.index_of(idx) < 0)
      throw capability_error("compare.moments: x^(" + idx.to_string() +
                             ") is not among the extended statistics of this basis");
    if (baselines.kalman_bucy && idx.degree() > 2)
      throw capability_error("compare.moments: x^(" + idx.to_string() +
                             ") exceeds degree 2; Gaussian beliefs provide first and second moments only");
  }

  if (variants.empty()) throw structural_error("at least one projection variant is required");
  for (const auto& v : variants) {
    if (v.rule == "halton") {
      if (v.count < 1) throw structural_error("variant '" + v.name + "': halton needs count >= 1");
    } else if (v.rule == "gauss_chebyshev") {
      if (v.count < 1 && v.level < 1)
        throw structural_error("variant '" + v.name + "': gauss_chebyshev needs count or level");
      if (model.dim_x > 1 && v.count > 0)
        throw structural_error("variant '" + v.name + "': count-based chebyshev is unidimensional; use level");
    } else {
      rule_kind_from_string(v.rule);  // validates the name
      if (v.level < 1) throw structural_error("variant '" + v.name + "': rule needs level >= 1");
    }
    if (!(v.scale > 0.0)) throw structural_error("variant '" + v.name + "': scale must be positive");
  }

  if (theta0.has_value() == init_mean.has_value())
    throw structural_error("initial density: specify exactly one of initial.theta or initial.mean/cov");
  if (theta0 && theta0->size() != static_cast<Index>(statistics.size()))
    throw structural_error("initial.theta must have one entry per natural statistic");
  if (init_mean) {
    if (init_mean->size() != model.dim_x) throw structural_error("initial.mean must have dim_x entries");
    if (init_cov->rows() != model.dim_x || init_cov->cols() != model.dim_x)
      throw structural_error("initial.cov must be dim_x x dim_x");
  }
  if (x0.size() != model.dim_x) throw structural_error("initial.x0 must have dim_x entries");

  if (!(dt > 0.0)) throw structural_error("run.dt must be positive");
  if (!(t_end > 0.0)) throw structural_error("run.t_end must be positive");
  if (output_stride < 1) throw structural_error("run.output_stride must be >= 1");
  if (metric_stride < 1) throw structural_error("run.metric_stride must be >= 1");

  if (baselines.kalman_bucy || baselines.particle_filter) {
    if (!init_mean)
      throw structural_error("kalman_bucy/particle_filter baselines need a Gaussian initial density");
  }
  if (baselines.kalman_bucy) {
    for (int k = 0; k < model.dim_x; ++k) {
      if (model.drift[static_cast<std::size_t>(k)].degree() > 1 ||
          model.drift[static_cast<std::size_t>(k)].constant_term() != 0.0)
        throw structural_error("baselines.kalman_bucy requires linear drift (field model.f" +
                               std::to_string(k + 1) + ")");
      for (int a = 0; a < model.dim_w; ++a) {
        if (model.dispersion[static_cast<std::size_t>(k)][static_cast<std::size_t>(a)].degree() > 0)
          throw structural_error("baselines.kalman_bucy requires constant dispersion");
      }
    }
    for (int k = 0; k < model.dim_y; ++k) {
      if (model.observation[static_cast<std::size_t>(k)].degree() > 1 ||
          model.observation[static_cast<std::size_t>(k)].constant_term() != 0.0)
        throw structural_error("baselines.kalman_bucy requires linear observation (field model.h" +
                               std::to_string(k + 1) + ")");
    }
  }
  if (baselines.particle_filter && baselines.particle_count < 2)
    throw structural_error("baselines.particles must be >= 2");
  if (baselines.ks_scheme != "none") {
    if (baselines.ks_grid.empty()) throw structural_error("baselines.ks_grid required for the KS solver");
    if (static_cast<int>(baselines.ks_grid.size()) != model.dim_x)
      throw structural_error("baselines.ks_grid must have dim_x axes");
    if (!(baselines.ks_dt > 0.0)) throw structural_error("baselines.ks_dt must be positive");
    const double ratio = baselines.ks_dt / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 || ratio < 1.0 - 1e-9)
      throw structural_error("baselines.ks_dt must be an integer multiple of run.dt");
    const double mratio = (metric_stride * dt) / baselines.ks_dt;
    if (std::abs(mratio - std::round(mratio)) > 1e-9 || mratio < 1.0 - 1e-9)
      throw structural_error("run.metric_stride * run.dt must be an integer multiple of baselines.ks_dt");
  }

  const bool metrics_requested = !compare.reference.empty() || !compare.extra_pairs.empty() ||
                                 !compare.snapshot_times.empty() || !compare.moments.empty();
  if (metrics_requested && compare.grid.empty())
    throw structural_error("compare.grid required when comparisons are configured");
  if (!compare.grid.empty() && static_cast<int>(compare.grid.size()) != model.dim_x)
    throw structural_error("compare.grid must have dim_x axes");
  if (baselines.ks_scheme != "none" && !compare.grid.empty()) {
    if (compare.grid.size() != baselines.ks_grid.size())
      throw structural_error("compare.grid and baselines.ks_grid must coincide");
    for (std::size_t a = 0; a < compare.grid.size(); ++a) {
      if (compare.grid[a].lo != baselines.ks_grid[a].lo || compare.grid[a].hi != baselines.ks_grid[a].hi ||
          compare.grid[a].count != baselines.ks_grid[a].count)
        throw structural_error("compare.grid and baselines.ks_grid must coincide");
    }
  }
  for (double t : compare.snapshot_times) {
    if (t < 0.0 || t > t_end + 1e-9)
      throw structural_error("compare.snapshot_times must lie within [0, t_end]");
    const double steps_to_t = t / (metric_stride * dt);
    if (std::abs(steps_to_t - std::round(steps_to_t)) > 1e-6)
      throw structural_error("compare.snapshot_times must fall on metric evaluation times");
  }

  // named solvers in reference/pairs must exist
  auto solver_known = [&](const std::string& name) {
    if (name == "particle") return baselines.particle_filter;
    if (name == "kalman_bucy") return baselines.kalman_bucy;
    if (name == "ks") return baselines.ks_scheme != "none";
    for (const auto& v : variants) {
      if (v.name == name) return true;
    }
    return false;
  };
  if (!compare.reference.empty() && !solver_known(compare.reference))
    throw structural_error("compare.reference names unknown solver '" + compare.reference + "'");
  for (const auto& [a, b] : compare.extra_pairs) {
    if (!solver_known(a)) throw structural_error("compare.pairs names unknown solver '" + a + "'");
    if (!solver_known(b)) throw structural_error("compare.pairs names unknown solver '" + b + "'");
  }
}

std::string config_fingerprint(const std::string& text, const std::vector<std::string>& overrides) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(text);
  for (const auto& ov : overrides) mix(ov);
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace epf
