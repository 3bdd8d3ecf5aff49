#include "landau/runner.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "landau/benchmarks.hpp"
#include "landau/errors.hpp"

namespace landau::runner {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

std::shared_ptr<const gpc::SgBasis> make_basis(const config::RunConfig& cfg) {
  std::vector<gpc::GpcBasis> factors;
  for (const auto& p : cfg.parameters) {
    factors.push_back(gpc::build_basis(p.distribution, p.order, p.resolved_nodes()));
  }
  if (factors.size() == 1) {
    return std::make_shared<const gpc::SgBasis>(std::move(factors[0]));
  }
  if (factors.size() == 2) {
    return std::make_shared<const gpc::SgBasis>(
        gpc::TensorGpcBasis{std::move(factors[0]), std::move(factors[1])});
  }
  throw ConfigurationError("one or two random parameters are supported");
}

std::vector<CollisionParams> node_parameters(const config::RunConfig& cfg, const gpc::SgBasis& basis) {
  std::vector<CollisionParams> out;
  out.reserve(basis.nodes());
  for (std::size_t l = 0; l < basis.nodes(); ++l) {
    CollisionParams p;
    p.gamma = cfg.gamma(basis.node(l));
    p.strength = cfg.strength;
    p.epsilon = cfg.resolved_epsilon();
    p.validate();
    out.push_back(p);
  }
  return out;
}

SolverOptions solver_options(const config::RunConfig& cfg) {
  SolverOptions options;
  options.regularization = cfg.regularization;
  options.grid = cfg.solver_grid();
  return options;
}

Columns columns(const diagnostics::Moments& m, const diagnostics::Entropy& e) {
  return {m.mass, m.px, m.py, m.energy, m.m4, m.tx, m.ty, e.H, e.D};
}

std::array<Columns, 2> statistics(const Snapshot& snapshot, const gpc::SgBasis& basis) {
  const std::size_t nodes = basis.nodes();
  std::vector<Columns> rows(nodes);
  for (std::size_t l = 0; l < nodes; ++l) {
    rows[l] = columns(snapshot.moments[l],
                      snapshot.entropy.empty() ? diagnostics::Entropy{} : snapshot.entropy[l]);
  }
  Columns mean{};
  Columns var{};
  for (std::size_t c = 0; c < mean.size(); ++c) {
    for (std::size_t l = 0; l < nodes; ++l) {
      mean[c] += basis.weight(l) * rows[l][c];
    }
    for (std::size_t l = 0; l < nodes; ++l) {
      const double d = rows[l][c] - mean[c];
      var[c] += basis.weight(l) * d * d;
    }
  }
  return {mean, var};
}

Simulation::Simulation(config::RunConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  options_ = solver_options(cfg_);
  auto basis = make_basis(cfg_);
  auto params = node_parameters(cfg_, *basis);
  state_ = benchmarks::initial_state(cfg_.initial, cfg_.particles, basis, std::move(params), cfg_.seed);
}

const NodalEvaluation& Simulation::evaluation() {
  if (!evaluation_) {
    evaluation_ = evaluate_nodes(state_, options_);
  }
  return *evaluation_;
}

Snapshot Simulation::snapshot(bool with_entropy) {
  Snapshot s;
  s.step = step_;
  s.time = state_.time;
  const std::size_t nodes = basis().nodes();
  if (!with_entropy && !evaluation_) {
    for (std::size_t l = 0; l < nodes; ++l) {
      s.moments.push_back(diagnostics::moments(state_.nodal_ensemble(l)));
    }
    return s;
  }
  const NodalEvaluation& eval = evaluation();
  for (std::size_t l = 0; l < nodes; ++l) {
    const ParticleEnsemble& e = eval.ensembles[l];
    s.moments.push_back(diagnostics::moments(e));
    s.truncated += eval.fields[l].truncated;
    if (!with_entropy) {
      continue;
    }
    if (options_.regularization == Regularization::antisymmetric) {
      s.entropy.push_back(diagnostics::discrete_entropy(e, eval.fields[l], state_.node_params[l]));
    } else {
      s.entropy.push_back(diagnostics::discrete_entropy(e, state_.node_params[l]));
    }
  }
  return s;
}

void Simulation::advance() {
  state_ = sg_advance(state_, evaluation(), cfg_.dt);
  evaluation_.reset();
  ++step_;
  state_.time = static_cast<double>(step_) * cfg_.dt;
}

Guards::Guards(const Snapshot& initial, double momentum_tolerance, double mass_tolerance)
    : momentum_tolerance_(momentum_tolerance), mass_tolerance_(mass_tolerance) {
  for (const auto& m : initial.moments) {
    momentum_.push_back({m.px, m.py});
  }
}

std::optional<std::string> Guards::check(const Snapshot& snapshot) const {
  if (snapshot.moments.size() != momentum_.size()) {
    throw ShapeError("snapshot node count differs from the initial snapshot");
  }
  for (std::size_t l = 0; l < momentum_.size(); ++l) {
    const auto& m = snapshot.moments[l];
    std::ostringstream msg;
    msg.precision(3);
    if (!(std::fabs(m.mass - 1.0) <= mass_tolerance_)) {
      msg << "step " << snapshot.step << ", node " << l << ": mass " << m.mass
          << " differs from 1 by more than " << mass_tolerance_;
      return msg.str();
    }
    const double drift = std::hypot(m.px - momentum_[l][0], m.py - momentum_[l][1]);
    if (!(drift <= momentum_tolerance_)) {
      msg << "step " << snapshot.step << ", node " << l << ": momentum drift " << drift
          << " exceeds " << momentum_tolerance_;
      return msg.str();
    }
  }
  return std::nullopt;
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

MomentsWriter::MomentsWriter(std::ostream& out) : out_(out) {
  out_ << "statistic,node,step,t,mass,px,py,energy,M4,Tx,Ty,H,D\n";
}

void MomentsWriter::write(const Snapshot& snapshot, const gpc::SgBasis& basis) {
  const auto row = [&](const std::string& stat, const std::string& node, const Columns& c) {
    out_ << stat << ',' << node << ',' << snapshot.step << ',' << format_number(snapshot.time);
    for (double v : c) {
      out_ << ',' << format_number(v);
    }
    out_ << '\n';
  };
  for (std::size_t l = 0; l < basis.nodes(); ++l) {
    row("node", std::to_string(l),
        columns(snapshot.moments[l],
                snapshot.entropy.empty() ? diagnostics::Entropy{} : snapshot.entropy[l]));
  }
  const auto stats = statistics(snapshot, basis);
  row("expectation", "", stats[0]);
  row("variance", "", stats[1]);
}

namespace {

struct Hooks {
  std::function<void(Simulation&, const Snapshot&)> on_record;
  std::function<void(Simulation&)> on_step;
};

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigurationError("cannot write '" + path.string() + "'");
  }
  return out;
}

std::string time_label(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

void write_density(Simulation& sim, const fs::path& dir) {
  const VelocityGrid grid = sim.config().density_grid();
  const std::string t = time_label(sim.state().time);
  for (const auto stat : {diagnostics::Statistic::expectation, diagnostics::Statistic::variance}) {
    const auto field = diagnostics::density_field(sim.state(), grid, stat);
    auto out = open_output(dir / ("density_t" + t + "_" + diagnostics::to_string(stat) + ".txt"));
    field.write(out);
  }
}

json base_metadata(const config::RunConfig& cfg, const std::string& command) {
  json meta;
  meta["command"] = command;
  meta["preset"] = cfg.preset;
  meta["paper_scale"] = cfg.paper_scale;
  meta["seed"] = cfg.seed;
  meta["threads"] = omp_get_max_threads();
  meta["particles"] = cfg.particles;
  meta["epsilon"] = cfg.resolved_epsilon();
  meta["dt"] = cfg.dt;
  meta["steps"] = cfg.steps();
  return meta;
}

void write_metadata(const fs::path& dir, json meta, const Outcome& outcome) {
  meta["exit_code"] = outcome.exit_code;
  meta["message"] = outcome.message;
  meta["steps_taken"] = outcome.steps;
  meta["wall_seconds"] = outcome.wall_seconds;
  auto out = open_output(dir / "metadata.json");
  out << meta.dump(2) << '\n';
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool finite_snapshot(const Snapshot& s) {
  for (std::size_t l = 0; l < s.moments.size(); ++l) {
    const auto c = columns(s.moments[l], s.entropy.empty() ? diagnostics::Entropy{} : s.entropy[l]);
    if (!std::all_of(c.begin(), c.end(), [](double v) { return std::isfinite(v); })) {
      return false;
    }
  }
  return true;
}

void prepare(const config::RunConfig& cfg, const fs::path& dir) {
  fs::create_directories(dir);
  auto out = open_output(dir / "config.ini");
  out << cfg.to_text();
}

/// Steps a simulation to t_final, writing moments.csv, density grids and guards.
Outcome drive(const config::RunConfig& cfg, const fs::path& dir, const std::string& command,
              std::ostream& log, const Hooks& hooks, json& meta) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  Simulation sim(cfg);
  const std::size_t steps = cfg.steps();

  std::set<std::size_t> density_steps;
  for (double t : cfg.density_times) {
    const auto s = static_cast<std::size_t>(std::llround(t / cfg.dt));
    if (s > steps) {
      log << "warning: density time " << t << " is beyond t_final and is skipped\n";
      continue;
    }
    density_steps.insert(s);
  }

  auto csv = open_output(dir / "moments.csv");
  MomentsWriter writer(csv);
  std::optional<Guards> guards;
  std::optional<double> l2z_initial;
  double l2z_final = 0.0;
  std::size_t progress = std::max<std::size_t>(steps / 10, 1);

  log << command << ": " << cfg.preset << ", N=" << cfg.particles << ", nodes="
      << sim.basis().nodes() << ", modes=" << sim.basis().modes() << ", steps=" << steps << '\n';

  for (std::size_t step = 0;; ++step) {
    if (hooks.on_step) {
      hooks.on_step(sim);
    }
    if (step % static_cast<std::size_t>(cfg.cadence) == 0 || step == steps) {
      const Snapshot snap = sim.snapshot(true);
      if (!finite_snapshot(snap)) {
        outcome.exit_code = numerical_error;
        outcome.message = "non-finite diagnostics at step " + std::to_string(step);
        break;
      }
      writer.write(snap, sim.basis());
      if (!guards) {
        guards.emplace(snap, cfg.momentum_guard, cfg.mass_guard);
      }
      if (const auto violation = guards->check(snap); violation && outcome.exit_code == ok) {
        outcome.exit_code = guard_violation;
        outcome.message = *violation;
        log << "guard violated: " << *violation << '\n';
      }
      const double l2z = statistics(snap, sim.basis())[0][3];
      if (!l2z_initial) {
        l2z_initial = l2z;
      }
      l2z_final = l2z;
      if (hooks.on_record) {
        hooks.on_record(sim, snap);
      }
    }
    if (density_steps.count(step)) {
      write_density(sim, dir);
    }
    if (step == steps) {
      break;
    }
    try {
      sim.advance();
    } catch (const NumericalError& e) {
      outcome.exit_code = numerical_error;
      outcome.message = "step " + std::to_string(step + 1) + ": " + e.what();
      break;
    }
    outcome.steps = step + 1;
    if (outcome.steps % progress == 0) {
      log << "  step " << outcome.steps << "/" << steps << " t=" << time_label(sim.state().time)
          << " (" << time_label(seconds_since(start)) << " s)\n";
    }
  }
  csv.flush();
  if (outcome.exit_code == numerical_error) {
    log << "error: " << outcome.message << '\n';
  }
  meta["l2z_energy_initial"] = l2z_initial.value_or(0.0);
  meta["l2z_energy_final"] = l2z_final;
  outcome.wall_seconds = seconds_since(start);
  return outcome;
}

Outcome finish(const fs::path& dir, json meta, Outcome outcome, std::ostream& log) {
  write_metadata(dir, std::move(meta), outcome);
  log << "wrote " << dir.string() << " (" << time_label(outcome.wall_seconds) << " s, exit "
      << outcome.exit_code << ")\n";
  return outcome;
}

Outcome dry(const config::RunConfig& cfg, const fs::path& dir, const std::string& command,
            std::ostream& log) {
  make_basis(cfg);
  Outcome outcome;
  outcome.message = "dry run";
  return finish(dir, base_metadata(cfg, command), outcome, log);
}

}  // namespace

Outcome run(const config::RunConfig& cfg, const fs::path& out_dir, bool dry_run, std::ostream& log) {
  prepare(cfg, out_dir);
  if (dry_run) {
    return dry(cfg, out_dir, "run", log);
  }
  json meta = base_metadata(cfg, "run");
  const Outcome outcome = drive(cfg, out_dir, "run", log, {}, meta);
  return finish(out_dir, std::move(meta), outcome, log);
}

Outcome sweep(const config::RunConfig& cfg, const fs::path& out_dir, bool dry_run, std::ostream& log) {
  prepare(cfg, out_dir);
  if (dry_run) {
    return dry(cfg, out_dir, "sweep", log);
  }
  const auto start = std::chrono::steady_clock::now();
  json meta = base_metadata(cfg, "sweep");
  Outcome outcome;

  std::vector<std::size_t> capture;
  for (double t : cfg.sweep_times) {
    const auto s = static_cast<std::size_t>(std::llround(t / cfg.dt));
    if (s > cfg.steps()) {
      throw ConfigurationError("sweep time " + time_label(t) + " is beyond t_final");
    }
    capture.push_back(s);
  }
  const std::size_t last = capture.empty() ? 0 : *std::max_element(capture.begin(), capture.end());

  // Runs one order to the last capture step; states at every capture step.
  const auto states_for = [&](int order) {
    config::RunConfig c = cfg;
    for (auto& p : c.parameters) {
      p.order = order;
      p.nodes = 0;
    }
    const auto t0 = std::chrono::steady_clock::now();
    Simulation sim(c);
    std::map<std::size_t, SgState> states;
    for (std::size_t step = 0;; ++step) {
      if (std::find(capture.begin(), capture.end(), step) != capture.end()) {
        states.emplace(step, sim.state());
      }
      if (step == last) {
        break;
      }
      sim.advance();
    }
    log << "  order " << order << ": " << sim.basis().nodes() << " nodes, "
        << time_label(seconds_since(t0)) << " s\n";
    return states;
  };

  log << "sweep: " << cfg.preset << ", N=" << cfg.particles << ", reference order "
      << cfg.reference_order << '\n';
  std::map<std::size_t, SgState> reference;
  std::vector<std::pair<int, std::map<std::size_t, SgState>>> runs;
  try {
    reference = states_for(cfg.reference_order);
    for (int order : cfg.sweep_orders) {
      runs.emplace_back(order, states_for(order));
    }
  } catch (const NumericalError& e) {
    outcome.exit_code = numerical_error;
    outcome.message = e.what();
    outcome.wall_seconds = seconds_since(start);
    return finish(out_dir, std::move(meta), outcome, log);
  }

  auto csv = open_output(out_dir / "convergence.csv");
  csv << "order,step,t,error_m4\n";
  for (const auto& [order, states] : runs) {
    for (std::size_t s : capture) {
      const double err = diagnostics::sg_error_m4(states.at(s), reference.at(s));
      csv << order << ',' << s << ',' << format_number(states.at(s).time) << ','
          << format_number(err) << '\n';
    }
  }
  meta["reference_order"] = cfg.reference_order;
  outcome.steps = last;
  outcome.wall_seconds = seconds_since(start);
  return finish(out_dir, std::move(meta), outcome, log);
}

Outcome bkw(const config::RunConfig& cfg, const fs::path& out_dir, bool dry_run, std::ostream& log) {
  if (cfg.initial.kind != benchmarks::InitialKind::bkw) {
    throw ConfigurationError("the bkw command needs initial.kind = bkw");
  }
  if (!cfg.gamma.is_constant() || cfg.gamma.c0 != 0.0 || std::fabs(cfg.strength - 1.0 / 16.0) > 1e-15) {
    throw ConfigurationError("the BKW solution holds for gamma = 0 and C = 1/16");
  }
  prepare(cfg, out_dir);
  if (dry_run) {
    return dry(cfg, out_dir, "bkw", log);
  }
  json meta = base_metadata(cfg, "bkw");
  auto csv = open_output(out_dir / "bkw_error.csv");
  bool header = false;
  const VelocityGrid grid = cfg.density_grid();
  const auto temperature = cfg.initial.temperature;

  Hooks hooks;
  hooks.on_record = [&](Simulation& sim, const Snapshot& snap) {
    const double t = snap.time;
    const auto err = diagnostics::l2_relative_density_error(
        sim.state(),
        [t, temperature](Vec2 v, const std::array<double, 2>& z) {
          return benchmarks::bkw_density(v, t, temperature(z));
        },
        grid);
    if (!header) {
      csv << "step,t,expected";
      for (std::size_t l = 0; l < err.per_node.size(); ++l) {
        csv << ",node_" << l;
      }
      csv << '\n';
      header = true;
    }
    csv << snap.step << ',' << format_number(t) << ',' << format_number(err.expected);
    for (double e : err.per_node) {
      csv << ',' << format_number(e);
    }
    csv << '\n';
    meta["final_expected_error"] = err.expected;
  };
  const Outcome outcome = drive(cfg, out_dir, "bkw", log, hooks, meta);
  return finish(out_dir, std::move(meta), outcome, log);
}

Outcome trubnikov(const config::RunConfig& cfg, const fs::path& out_dir, bool dry_run,
                  std::ostream& log) {
  if (cfg.initial.kind != benchmarks::InitialKind::anisotropic_gaussian) {
    throw ConfigurationError("the trubnikov command needs initial.kind = anisotropic");
  }
  if (!cfg.gamma.is_constant() || (cfg.gamma.c0 != 0.0 && cfg.gamma.c0 != -3.0)) {
    throw ConfigurationError("Trubnikov rates are known for gamma = 0 and gamma = -3 only");
  }
  prepare(cfg, out_dir);
  if (dry_run) {
    return dry(cfg, out_dir, "trubnikov", log);
  }
  json meta = base_metadata(cfg, "trubnikov");
  std::vector<double> times;
  std::vector<std::vector<double>> anisotropy;  // [node][step]
  Hooks hooks;
  hooks.on_step = [&](Simulation& sim) {
    const Snapshot snap = sim.snapshot(false);
    anisotropy.resize(snap.moments.size());
    times.push_back(snap.time);
    for (std::size_t l = 0; l < snap.moments.size(); ++l) {
      anisotropy[l].push_back(snap.moments[l].tx - snap.moments[l].ty);
    }
  };
  Outcome outcome = drive(cfg, out_dir, "trubnikov", log, hooks, meta);
  if (outcome.exit_code == numerical_error || times.empty()) {
    return finish(out_dir, std::move(meta), outcome, log);
  }

  const auto basis = make_basis(cfg);
  const std::size_t nodes = basis->nodes();
  std::vector<std::vector<double>> ratio(nodes, std::vector<double>(times.size()));
  std::vector<double> expected(times.size(), 0.0);
  for (std::size_t l = 0; l < nodes; ++l) {
    for (std::size_t s = 0; s < times.size(); ++s) {
      ratio[l][s] = anisotropy[l][s] / anisotropy[l][0];
      expected[s] += basis->weight(l) * ratio[l][s];
    }
  }
  {
    auto csv = open_output(out_dir / "trubnikov.csv");
    csv << "step,t,expectation";
    for (std::size_t l = 0; l < nodes; ++l) {
      csv << ",node_" << l;
    }
    csv << '\n';
    for (std::size_t s = 0; s < times.size(); ++s) {
      csv << s << ',' << format_number(times[s]) << ',' << format_number(expected[s]);
      for (std::size_t l = 0; l < nodes; ++l) {
        csv << ',' << format_number(ratio[l][s]);
      }
      csv << '\n';
    }
  }

  const auto potential =
      cfg.gamma.c0 == 0.0 ? benchmarks::Potential::maxwell : benchmarks::Potential::coulomb;
  const auto predicted_rate = [&](std::size_t l) {
    const double t = cfg.initial.total_temperature(basis->node(l));
    return 1.0 / benchmarks::trubnikov_tau(potential, cfg.strength, 1.0, t);
  };
  auto csv = open_output(out_dir / "trubnikov_fit.csv");
  csv << "series,fitted_rate,predicted_rate,relative_error,points\n";
  const auto emit = [&](const std::string& name, std::span<const double> series, double predicted) {
    const auto fit = benchmarks::fit_decay_rate(times, series, cfg.fit_begin, cfg.fit_end);
    if (fit.truncated) {
      log << "warning: " << name << " fit window truncated at a non-positive value\n";
    }
    const double rel = std::fabs(fit.rate - predicted) / predicted;
    csv << name << ',' << format_number(fit.rate) << ',' << format_number(predicted) << ','
        << format_number(rel) << ',' << fit.points << '\n';
    return std::array<double, 2>{fit.rate, rel};
  };
  double predicted_mean = 0.0;
  for (std::size_t l = 0; l < nodes; ++l) {
    predicted_mean += basis->weight(l) * predicted_rate(l);
  }
  const auto summary = emit("expectation", expected, predicted_mean);
  for (std::size_t l = 0; l < nodes; ++l) {
    emit("node_" + std::to_string(l), ratio[l], predicted_rate(l));
  }
  meta["fitted_rate"] = summary[0];
  meta["predicted_rate"] = predicted_mean;
  meta["relative_error"] = summary[1];
  log << "fitted rate " << summary[0] << ", predicted " << predicted_mean << " (relative error "
      << summary[1] << ")\n";
  return finish(out_dir, std::move(meta), outcome, log);
}

Outcome selftest(std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  int failures = 0;
  const auto report = [&](const std::string& name, bool pass, const std::string& detail) {
    log << (pass ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
    failures += pass ? 0 : 1;
  };
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return std::string(buf);
  };

  // Gauss rule exactness for the Beta(2, 5) law.
  {
    const auto dist = gpc::ParameterDistribution::beta_law(2.0, 5.0);
    const auto rule = gpc::gauss_quadrature(dist, 6);
    double worst = 0.0;
    for (int k = 0; k <= 11; ++k) {
      double s = 0.0;
      for (std::size_t l = 0; l < rule.nodes.size(); ++l) {
        s += rule.weights[l] * std::pow(rule.nodes[l], k);
      }
      worst = std::max(worst, std::fabs(s - dist.moment(k)));
    }
    report("quadrature", worst < 1e-13, "max moment error " + num(worst));
  }

  // Short sG run: mass, momentum, dissipation sign and energy drift.
  {
    config::RunConfig cfg = config::preset("test2");
    cfg.particles = 64;
    cfg.parameters[0].order = 2;
    cfg.t_final = 0.05;
    Simulation sim(cfg);
    const Snapshot first = sim.snapshot(true);
    for (std::size_t s = 0; s < cfg.steps(); ++s) {
      sim.advance();
    }
    const Snapshot last = sim.snapshot(true);
    double momentum = 0.0;
    double energy = 0.0;
    double dmin = 0.0;
    for (std::size_t l = 0; l < first.moments.size(); ++l) {
      momentum = std::max(momentum, std::hypot(last.moments[l].px - first.moments[l].px,
                                               last.moments[l].py - first.moments[l].py));
      energy = std::max(energy, std::fabs(last.moments[l].energy - first.moments[l].energy));
      dmin = std::min({dmin, first.entropy[l].D, last.entropy[l].D});
    }
    report("momentum", momentum < 1e-13, "max drift " + num(momentum));
    report("energy", energy < 1e-4, "max drift " + num(energy));
    report("dissipation", dmin >= -1e-14, "min D " + num(dmin));
  }

  // Configuration echo parses back to the same text.
  {
    const auto cfg = config::preset("test3-beta25");
    const std::string text = cfg.to_text();
    const bool same = config::parse_config(text).to_text() == text;
    report("config", same, same ? "resolved echo round-trips" : "echo differs after re-parsing");
  }

  outcome.exit_code = failures == 0 ? ok : guard_violation;
  outcome.message = std::to_string(failures) + " failure(s)";
  outcome.wall_seconds = seconds_since(start);
  return outcome;
}

}  // namespace landau::runner
