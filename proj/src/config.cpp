#include "landau/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "landau/errors.hpp"

namespace landau::config {

namespace {

using benchmarks::AffineMap;
using benchmarks::InitialKind;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Recursive-descent parser for affine expressions in z1, z2.
class AffineParser {
 public:
  explicit AffineParser(std::string_view text) : s_(text) {}

  AffineMap parse() {
    AffineMap m = expression();
    skip();
    if (pos_ != s_.size()) {
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    }
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(0, "bad expression '" + std::string(s_) + "': " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  AffineMap expression() {
    AffineMap acc = term();
    for (;;) {
      if (accept('+')) {
        acc = add(acc, term(), 1.0);
      } else if (accept('-')) {
        acc = add(acc, term(), -1.0);
      } else {
        return acc;
      }
    }
  }

  AffineMap term() {
    AffineMap acc = factor();
    for (;;) {
      if (accept('*')) {
        const AffineMap rhs = factor();
        if (acc.is_constant()) {
          acc = scale(rhs, acc.c0);
        } else if (rhs.is_constant()) {
          acc = scale(acc, rhs.c0);
        } else {
          fail("product of two parameter-dependent terms is not affine");
        }
      } else if (accept('/')) {
        const AffineMap rhs = factor();
        if (!rhs.is_constant() || rhs.c0 == 0.0) {
          fail("division only by a non-zero constant");
        }
        acc = scale(acc, 1.0 / rhs.c0);
      } else {
        return acc;
      }
    }
  }

  AffineMap factor() {
    skip();
    if (accept('-')) {
      return scale(factor(), -1.0);
    }
    if (accept('+')) {
      return factor();
    }
    if (accept('(')) {
      AffineMap inner = expression();
      if (!accept(')')) {
        fail("missing ')'");
      }
      return inner;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'z' || s_[pos_] == 'Z')) {
      ++pos_;
      int index = 1;
      if (pos_ < s_.size() && (s_[pos_] == '1' || s_[pos_] == '2')) {
        index = s_[pos_] - '0';
        ++pos_;
      }
      return index == 1 ? AffineMap{0.0, 1.0, 0.0} : AffineMap{0.0, 0.0, 1.0};
    }
    double value = 0.0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) {
      fail(pos_ < s_.size() ? "expected a number or z near '" + std::string(s_.substr(pos_)) + "'"
                            : "unexpected end");
    }
    pos_ += static_cast<std::size_t>(ptr - begin);
    return AffineMap::constant(value);
  }

  static AffineMap add(AffineMap a, AffineMap b, double sign) {
    return {a.c0 + sign * b.c0, a.c1 + sign * b.c1, a.c2 + sign * b.c2};
  }
  static AffineMap scale(AffineMap a, double f) { return {a.c0 * f, a.c1 * f, a.c2 * f}; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

double parse_number(const std::string& value) {
  const AffineMap m = parse_affine(value);
  if (!m.is_constant()) {
    throw ParseError(0, "expected a constant, got '" + value + "'");
  }
  return m.c0;
}

long long parse_integer(const std::string& value) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(0, "expected an integer, got '" + value + "'");
  }
  return v;
}

bool parse_bool(const std::string& value) {
  const std::string v = lower(value);
  if (v == "true" || v == "yes" || v == "on" || v == "1") {
    return true;
  }
  if (v == "false" || v == "no" || v == "off" || v == "0") {
    return false;
  }
  throw ParseError(0, "expected a boolean, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) {
      out.push_back(item);
    }
  }
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw ParseError(0, what);
  }
}

InitialKind parse_kind(const std::string& value) {
  const std::string v = lower(value);
  if (v == "bimodal") return InitialKind::bimodal_radial;
  if (v == "bkw") return InitialKind::bkw;
  if (v == "anisotropic") return InitialKind::anisotropic_gaussian;
  if (v == "triangle") return InitialKind::triangle_gaussians;
  throw ParseError(0, "unknown initial condition '" + value +
                          "' (expected bimodal, bkw, anisotropic or triangle)");
}

Regularization parse_regularization(const std::string& value) {
  const std::string v = lower(value);
  if (v == "antisymmetric") return Regularization::antisymmetric;
  if (v == "symmetric") return Regularization::symmetric;
  throw ParseError(0, "unknown regularization '" + value + "'");
}

std::string to_string(Regularization r) {
  return r == Regularization::antisymmetric ? "antisymmetric" : "symmetric";
}

ParameterSpec& parameter_slot(RunConfig& c, std::size_t index) {
  if (c.parameters.size() <= index) {
    c.parameters.resize(index + 1);
  }
  return c.parameters[index];
}

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = [] {
    std::map<std::string, Setter> t;
    // [run]
    t["run.preset"] = [](RunConfig&, const std::string&) {};
    t["run.dt"] = [](RunConfig& c, const std::string& v) {
      c.dt = parse_number(v);
      require(c.dt > 0.0 && std::isfinite(c.dt), "dt must be positive");
    };
    t["run.t_final"] = [](RunConfig& c, const std::string& v) {
      c.t_final = parse_number(v);
      require(c.t_final >= 0.0 && std::isfinite(c.t_final), "t_final must be non-negative");
    };
    t["run.cadence"] = [](RunConfig& c, const std::string& v) {
      const long long k = parse_integer(v);
      require(k >= 1, "cadence must be at least 1");
      c.cadence = static_cast<int>(k);
    };
    t["run.seed"] = [](RunConfig& c, const std::string& v) {
      const long long s = parse_integer(v);
      require(s >= 0, "seed must be non-negative");
      c.seed = static_cast<std::uint64_t>(s);
    };
    t["run.output"] = [](RunConfig& c, const std::string& v) {
      require(!v.empty(), "output directory must not be empty");
      c.output_dir = v;
    };
    t["run.threads"] = [](RunConfig& c, const std::string& v) {
      const long long k = parse_integer(v);
      require(k >= 0, "threads must be non-negative");
      c.threads = static_cast<int>(k);
    };
    t["run.paper_scale"] = [](RunConfig& c, const std::string& v) { c.paper_scale = parse_bool(v); };
    // [particles]
    t["particles.count"] = [](RunConfig& c, const std::string& v) {
      const long long n = parse_integer(v);
      require(n >= 1, "particle count must be at least 1");
      c.particles = static_cast<std::size_t>(n);
    };
    t["particles.extent"] = [](RunConfig& c, const std::string& v) {
      c.extent = parse_number(v);
      require(c.extent > 0.0, "extent must be positive");
    };
    t["particles.epsilon"] = [](RunConfig& c, const std::string& v) {
      if (lower(v) == "auto") {
        c.epsilon.reset();
        return;
      }
      const double e = parse_number(v);
      require(e > 0.0, "epsilon must be positive");
      c.epsilon = e;
    };
    // [collision]
    t["collision.gamma"] = [](RunConfig& c, const std::string& v) {
      c.gamma = parse_affine(v);
      require(c.gamma.min_on_unit_square() >= -3.0 && c.gamma.max_on_unit_square() <= 1.0,
              "gamma must lie in [-3, 1] on the parameter domain");
    };
    t["collision.strength"] = [](RunConfig& c, const std::string& v) {
      c.strength = parse_number(v);
      require(c.strength > 0.0, "strength must be positive");
    };
    t["collision.regularization"] = [](RunConfig& c, const std::string& v) {
      c.regularization = parse_regularization(v);
    };
    t["collision.quadrature_points"] = [](RunConfig& c, const std::string& v) {
      const long long k = parse_integer(v);
      require(k >= 0, "quadrature_points must be non-negative");
      c.quadrature_points = static_cast<int>(k);
    };
    // [parameter], [parameter2]
    for (std::size_t index = 0; index < 2; ++index) {
      const std::string section = index == 0 ? "parameter." : "parameter2.";
      t[section + "distribution"] = [index](RunConfig& c, const std::string& v) {
        parameter_slot(c, index).distribution = parse_distribution(v);
      };
      t[section + "order"] = [index](RunConfig& c, const std::string& v) {
        const long long m = parse_integer(v);
        require(m >= 0 && m <= 40, "order must lie in [0, 40]");
        parameter_slot(c, index).order = static_cast<int>(m);
      };
      t[section + "nodes"] = [index](RunConfig& c, const std::string& v) {
        if (lower(v) == "auto") {
          parameter_slot(c, index).nodes = 0;
          return;
        }
        const long long l = parse_integer(v);
        require(l >= 1 && l <= 200, "nodes must lie in [1, 200]");
        parameter_slot(c, index).nodes = static_cast<int>(l);
      };
    }
    // [initial]
    t["initial.kind"] = [](RunConfig& c, const std::string& v) { c.initial.kind = parse_kind(v); };
    t["initial.temperature"] = [](RunConfig& c, const std::string& v) {
      c.initial.temperature = parse_affine(v);
      require(c.initial.temperature.min_on_unit_square() > 0.0,
              "temperature must be positive on the parameter domain");
    };
    t["initial.temperature_y"] = [](RunConfig& c, const std::string& v) {
      c.initial.temperature_y = parse_affine(v);
      require(c.initial.temperature_y.min_on_unit_square() > 0.0,
              "temperature_y must be positive on the parameter domain");
    };
    t["initial.radius"] = [](RunConfig& c, const std::string& v) {
      c.initial.radius = parse_number(v);
      require(c.initial.radius >= 0.0, "radius must be non-negative");
    };
    // [output]
    t["output.density_times"] = [](RunConfig& c, const std::string& v) {
      c.density_times.clear();
      for (const auto& item : split_list(v)) {
        const double t = parse_number(item);
        require(t >= 0.0, "density times must be non-negative");
        c.density_times.push_back(t);
      }
    };
    t["output.density_points"] = [](RunConfig& c, const std::string& v) {
      const long long k = parse_integer(v);
      require(k >= 2 && k <= 4000, "density_points must lie in [2, 4000]");
      c.density_points = static_cast<int>(k);
    };
    t["output.density_extent"] = [](RunConfig& c, const std::string& v) {
      if (lower(v) == "auto") {
        c.density_extent = 0.0;
        return;
      }
      c.density_extent = parse_number(v);
      require(c.density_extent > 0.0, "density_extent must be positive");
    };
    // [sweep]
    t["sweep.orders"] = [](RunConfig& c, const std::string& v) {
      c.sweep_orders.clear();
      for (const auto& item : split_list(v)) {
        const long long m = parse_integer(item);
        require(m >= 0 && m <= 40, "sweep orders must lie in [0, 40]");
        c.sweep_orders.push_back(static_cast<int>(m));
      }
      require(!c.sweep_orders.empty(), "sweep orders must not be empty");
    };
    t["sweep.reference_order"] = [](RunConfig& c, const std::string& v) {
      const long long m = parse_integer(v);
      require(m >= 0 && m <= 40, "reference_order must lie in [0, 40]");
      c.reference_order = static_cast<int>(m);
    };
    t["sweep.times"] = [](RunConfig& c, const std::string& v) {
      c.sweep_times.clear();
      for (const auto& item : split_list(v)) {
        const double t = parse_number(item);
        require(t >= 0.0, "sweep times must be non-negative");
        c.sweep_times.push_back(t);
      }
    };
    // [trubnikov]
    t["trubnikov.fit_begin"] = [](RunConfig& c, const std::string& v) { c.fit_begin = parse_number(v); };
    t["trubnikov.fit_end"] = [](RunConfig& c, const std::string& v) { c.fit_end = parse_number(v); };
    // [guards]
    t["guards.momentum"] = [](RunConfig& c, const std::string& v) {
      c.momentum_guard = parse_number(v);
      require(c.momentum_guard > 0.0, "momentum guard must be positive");
    };
    t["guards.mass"] = [](RunConfig& c, const std::string& v) {
      c.mass_guard = parse_number(v);
      require(c.mass_guard > 0.0, "mass guard must be positive");
    };
    return t;
  }();
  return table;
}

struct Entry {
  int line;
  std::string section;
  std::string key;
  std::string value;
};

std::vector<Entry> tokenize(std::string_view text) {
  std::vector<Entry> entries;
  std::string section;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError(line_no, "unterminated section header");
      }
      section = lower(trim(std::string_view(line).substr(1, line.size() - 2)));
      static const char* known[] = {"run",     "particles", "collision", "parameter", "parameter2",
                                    "initial", "output",    "sweep",     "trubnikov", "guards"};
      if (std::find(std::begin(known), std::end(known), section) == std::end(known)) {
        throw ParseError(line_no, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(line_no, "expected 'key = value'");
    }
    if (section.empty()) {
      throw ParseError(line_no, "key outside of any section");
    }
    Entry e{line_no, section, lower(trim(std::string_view(line).substr(0, eq))),
            trim(std::string_view(line).substr(eq + 1))};
    if (e.value.empty()) {
      throw ParseError(line_no, "missing value for '" + e.key + "'");
    }
    entries.push_back(std::move(e));
    if (end == text.size()) break;
  }
  return entries;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out += (k ? ", " : "") + format_double(v[k]);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out += (k ? ", " : "") + std::to_string(v[k]);
  }
  return out;
}

std::string affine_text(const AffineMap& m) {
  std::string out = format_double(m.c0);
  if (m.c1 != 0.0) out += " + " + format_double(m.c1) + "*z1";
  if (m.c2 != 0.0) out += " + " + format_double(m.c2) + "*z2";
  return out;
}

std::string distribution_text(const gpc::ParameterDistribution& d) {
  if (d.kind == gpc::ParameterDistribution::Kind::Uniform01) {
    return "uniform";
  }
  return "beta(" + format_double(d.alpha) + ", " + format_double(d.beta) + ")";
}

}  // namespace

AffineMap parse_affine(std::string_view text) {
  return AffineParser(text).parse();
}

gpc::ParameterDistribution parse_distribution(std::string_view text) {
  const std::string v = lower(trim(text));
  if (v == "uniform") {
    return gpc::ParameterDistribution::uniform();
  }
  if (v.rfind("beta", 0) == 0) {
    const auto open = v.find('(');
    const auto close = v.rfind(')');
    const auto comma = v.find(',');
    if (open == std::string::npos || close == std::string::npos || comma == std::string::npos ||
        !(open < comma && comma < close)) {
      throw ParseError(0, "expected beta(a, b), got '" + std::string(text) + "'");
    }
    const double a = parse_number(trim(std::string_view(v).substr(open + 1, comma - open - 1)));
    const double b = parse_number(trim(std::string_view(v).substr(comma + 1, close - comma - 1)));
    if (!(a > 0.0) || !(b > 0.0)) {
      throw ParseError(0, "Beta shape parameters must be positive");
    }
    return gpc::ParameterDistribution::beta_law(a, b);
  }
  throw ParseError(0, "unknown distribution '" + std::string(text) + "' (expected uniform or beta(a, b))");
}

std::size_t RunConfig::steps() const {
  return static_cast<std::size_t>(std::llround(t_final / dt));
}

double RunConfig::resolved_epsilon() const {
  return epsilon ? *epsilon : default_epsilon(particles, extent);
}

double RunConfig::resolved_density_extent() const {
  if (density_extent > 0.0) {
    return density_extent;
  }
  // Four standard deviations of |v| (sqrt(2 T) per component temperature T), shifted
  // by the triangle radius: truncates well below 1e-6 of the mass.
  double hottest = initial.temperature.max_on_unit_square();
  if (initial.kind == InitialKind::anisotropic_gaussian) {
    hottest = std::max(hottest, initial.temperature_y.max_on_unit_square());
  }
  const double shift = initial.kind == InitialKind::triangle_gaussians ? initial.radius : 0.0;
  return 4.0 * std::sqrt(2.0 * hottest) + shift;
}

VelocityGrid RunConfig::density_grid() const {
  return VelocityGrid{resolved_density_extent(), density_points};
}

std::optional<VelocityGrid> RunConfig::solver_grid() const {
  if (regularization != Regularization::symmetric) {
    return std::nullopt;
  }
  int points = quadrature_points;
  if (points == 0) {
    // Cell size half the mollifier width.
    points = static_cast<int>(std::ceil(4.0 * extent / std::sqrt(resolved_epsilon())));
  }
  return VelocityGrid{extent, points};
}

void RunConfig::validate() const {
  if (parameters.empty() || parameters.size() > 2) {
    throw ConfigurationError("one or two random parameters are supported");
  }
  for (const auto& p : parameters) {
    p.distribution.validate();
    if (p.order < 0) {
      throw ConfigurationError("gPC order must be non-negative");
    }
    if (p.resolved_nodes() < p.order + 1) {
      throw ConfigurationError("quadrature nodes must be at least order + 1");
    }
  }
  if (parameters.size() == 1 && (gamma.c2 != 0.0 || initial.temperature.c2 != 0.0 ||
                                 initial.temperature_y.c2 != 0.0)) {
    throw ConfigurationError("z2 is used but no [parameter2] section is configured");
  }
  if (!(dt > 0.0)) {
    throw ParameterError("dt must be positive");
  }
  if (std::fabs(static_cast<double>(steps()) * dt - t_final) > 1e-9 * std::max(t_final, dt)) {
    throw ConfigurationError("t_final is not reachable in whole steps");
  }
  if (particles < 1) {
    throw ConfigurationError("need at least one particle");
  }
  kernels::CollisionParams probe;
  probe.strength = strength;
  probe.epsilon = resolved_epsilon();
  probe.gamma = gamma.min_on_unit_square();
  probe.validate();
  probe.gamma = gamma.max_on_unit_square();
  probe.validate();
  initial.validate();
  if (fit_end <= fit_begin) {
    throw ConfigurationError("trubnikov fit window is empty");
  }
  if (reference_order < *std::max_element(sweep_orders.begin(), sweep_orders.end())) {
    throw ConfigurationError("reference order must not be below the swept orders");
  }
}

std::string RunConfig::to_text() const {
  std::ostringstream out;
  out << "# resolved configuration\n";
  out << "[run]\n";
  out << "preset = " << preset << "\n";
  out << "paper_scale = " << (paper_scale ? "true" : "false") << "\n";
  out << "dt = " << format_double(dt) << "\n";
  out << "t_final = " << format_double(t_final) << "\n";
  out << "cadence = " << cadence << "\n";
  out << "seed = " << seed << "\n";
  out << "output = " << output_dir << "\n";
  out << "threads = " << threads << "\n";
  out << "\n[particles]\n";
  out << "count = " << particles << "\n";
  out << "extent = " << format_double(extent) << "\n";
  out << "epsilon = " << format_double(resolved_epsilon()) << "\n";
  out << "\n[collision]\n";
  out << "gamma = " << affine_text(gamma) << "\n";
  out << "strength = " << format_double(strength) << "\n";
  out << "regularization = " << to_string(regularization) << "\n";
  out << "quadrature_points = " << quadrature_points << "\n";
  for (std::size_t k = 0; k < parameters.size(); ++k) {
    out << "\n[" << (k == 0 ? "parameter" : "parameter2") << "]\n";
    out << "distribution = " << distribution_text(parameters[k].distribution) << "\n";
    out << "order = " << parameters[k].order << "\n";
    out << "nodes = " << parameters[k].resolved_nodes() << "\n";
  }
  out << "\n[initial]\n";
  out << "kind = " << benchmarks::to_string(initial.kind) << "\n";
  out << "temperature = " << affine_text(initial.temperature) << "\n";
  out << "temperature_y = " << affine_text(initial.temperature_y) << "\n";
  out << "radius = " << format_double(initial.radius) << "\n";
  out << "\n[output]\n";
  if (!density_times.empty()) {
    out << "density_times = " << join(density_times) << "\n";
  }
  out << "density_points = " << density_points << "\n";
  out << "density_extent = " << format_double(resolved_density_extent()) << "\n";
  out << "\n[sweep]\n";
  out << "orders = " << join(sweep_orders) << "\n";
  out << "reference_order = " << reference_order << "\n";
  if (!sweep_times.empty()) {
    out << "times = " << join(sweep_times) << "\n";
  }
  out << "\n[trubnikov]\n";
  out << "fit_begin = " << format_double(fit_begin) << "\n";
  out << "fit_end = " << format_double(fit_end) << "\n";
  out << "\n[guards]\n";
  out << "momentum = " << format_double(momentum_guard) << "\n";
  out << "mass = " << format_double(mass_guard) << "\n";
  return out.str();
}

std::vector<std::string> preset_names() {
  return {"test1",          "test1-coulomb",   "test2",          "test2-beta25",
          "test2-beta52",   "test3",           "test3-beta25",   "test3-beta52",
          "test4",          "test5-maxwell",   "test5-coulomb-a", "test5-coulomb-b",
          "test6"};
}

RunConfig preset(std::string_view name, bool paper_scale) {
  RunConfig c;
  c.preset = std::string(name);
  c.paper_scale = paper_scale;
  const auto scale = [paper_scale](std::size_t desk, std::size_t paper) {
    return paper_scale ? paper : desk;
  };
  const auto uniform_param = [](int order) {
    return ParameterSpec{gpc::ParameterDistribution::uniform(), order, 0};
  };

  const std::string n(name);
  if (n == "test1" || n == "test1-coulomb") {
    c.particles = scale(30 * 30, 50 * 50);
    c.initial.kind = InitialKind::bimodal_radial;
    c.initial.temperature = {1.0, 0.2, 0.0};
    c.gamma = AffineMap::constant(n == "test1" ? 0.0 : -3.0);
    c.parameters = {uniform_param(3)};
    c.t_final = 1.0;
    c.reference_order = paper_scale ? 30 : 12;
    c.sweep_orders = {1, 2, 3, 4, 5, 6};
    c.sweep_times = {1.0};
  } else if (n == "test2" || n == "test2-beta25" || n == "test2-beta52") {
    c.particles = scale(30 * 30, 50 * 50);
    c.initial.kind = InitialKind::bimodal_radial;
    c.initial.temperature = AffineMap::constant(1.0);
    c.gamma = {0.0, -3.0, 0.0};
    c.parameters = {uniform_param(3)};
    if (n == "test2-beta25") {
      c.parameters[0].distribution = gpc::ParameterDistribution::beta_law(2.0, 5.0);
    } else if (n == "test2-beta52") {
      c.parameters[0].distribution = gpc::ParameterDistribution::beta_law(5.0, 2.0);
    }
    c.t_final = 2.0;
    c.reference_order = paper_scale ? 30 : 12;
    c.sweep_orders = {1, 2, 3, 4, 5, 6};
    c.sweep_times = {0.01, 1.0, 2.0};
  } else if (n == "test3" || n == "test3-beta25" || n == "test3-beta52") {
    c.particles = scale(20 * 20, 50 * 50);
    c.initial.kind = InitialKind::bimodal_radial;
    c.initial.temperature = {1.0, 0.2, 0.0};
    c.gamma = {0.0, 0.0, -3.0};
    c.parameters = {uniform_param(3), uniform_param(3)};
    if (n == "test3-beta25") {
      c.parameters[1].distribution = gpc::ParameterDistribution::beta_law(2.0, 5.0);
    } else if (n == "test3-beta52") {
      c.parameters[1].distribution = gpc::ParameterDistribution::beta_law(5.0, 2.0);
    }
    c.t_final = 2.0;
    c.reference_order = paper_scale ? 30 : 8;
    c.sweep_orders = {1, 2, 3, 4, 5, 6};
    c.sweep_times = {0.01, 1.0, 2.0};
  } else if (n == "test4") {
    c.particles = scale(60 * 60, 120 * 120);
    c.initial.kind = InitialKind::bkw;
    c.initial.temperature = {0.5, 0.1, 0.0};
    c.gamma = AffineMap::constant(0.0);
    c.parameters = {uniform_param(3)};
    c.t_final = 5.0;
    c.density_times = {0.0, 1.0, 5.0};
  } else if (n == "test5-maxwell") {
    c.particles = scale(60 * 60, 120 * 120);
    c.initial.kind = InitialKind::anisotropic_gaussian;
    c.initial.temperature = {0.7, 0.1, 0.0};
    c.initial.temperature_y = AffineMap::constant(0.5);
    c.gamma = AffineMap::constant(0.0);
    c.strength = 0.5;
    c.parameters = {uniform_param(3)};
    c.t_final = 1.0;
    c.fit_begin = 0.0;
    c.fit_end = 0.1;
  } else if (n == "test5-coulomb-a" || n == "test5-coulomb-b") {
    c.particles = scale(60 * 60, 120 * 120);
    c.initial.kind = InitialKind::anisotropic_gaussian;
    const double ty = n == "test5-coulomb-a" ? 0.3 : 0.5;
    // Total temperature T(z) = 0.6 + 0.05 z, so T_x = 2 T - T_y.
    c.initial.temperature = {1.2 - ty, 0.1, 0.0};
    c.initial.temperature_y = AffineMap::constant(ty);
    c.gamma = AffineMap::constant(-3.0);
    c.strength = 2.0;
    c.parameters = {uniform_param(3)};
    c.t_final = 1.0;
    c.fit_begin = 0.0;
    c.fit_end = 0.1;
  } else if (n == "test6") {
    c.particles = scale(60 * 60, 120 * 120);
    c.extent = 6.0;
    c.initial.kind = InitialKind::triangle_gaussians;
    c.initial.temperature = {0.5, 0.1, 0.0};
    c.initial.radius = 2.0;
    c.gamma = AffineMap::constant(-3.0);
    c.parameters = {uniform_param(3)};
    c.t_final = paper_scale ? 500.0 : 200.0;
    c.cadence = 100;
    c.density_times = paper_scale ? std::vector<double>{0.0, 50.0, 500.0}
                                  : std::vector<double>{0.0, 50.0, 200.0};
  } else {
    std::string names;
    for (const auto& p : preset_names()) {
      names += (names.empty() ? "" : ", ") + p;
    }
    throw ConfigurationError("unknown preset '" + n + "' (available: " + names + ")");
  }
  c.output_dir = "out/" + n;
  return c;
}

RunConfig parse_config(std::string_view text, bool paper_scale) {
  const std::vector<Entry> entries = tokenize(text);

  RunConfig c;
  for (const auto& e : entries) {
    if (e.section == "run" && e.key == "paper_scale") {
      try {
        paper_scale = paper_scale || parse_bool(e.value);
      } catch (const ParseError& err) {
        throw ParseError(e.line, err.what());
      }
    }
  }
  for (const auto& e : entries) {
    if (e.section == "run" && e.key == "preset") {
      try {
        c = preset(e.value, paper_scale);
      } catch (const Error& err) {
        throw ParseError(e.line, err.what());
      }
    }
  }
  c.paper_scale = paper_scale;

  const auto& table = setters();
  for (const auto& e : entries) {
    const auto it = table.find(e.section + "." + e.key);
    if (it == table.end()) {
      throw ParseError(e.line, "unknown key '" + e.key + "' in [" + e.section + "]");
    }
    try {
      it->second(c, e.value);
    } catch (const ParseError& err) {
      throw ParseError(e.line, err.what());
    } catch (const Error& err) {
      throw ParseError(e.line, err.what());
    }
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path, bool paper_scale) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigurationError("cannot open configuration file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), paper_scale);
}

}  // namespace landau::config
