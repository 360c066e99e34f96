#include "podsurge/datagen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "podsurge/errors.hpp"
#include "podsurge/io.hpp"

namespace podsurge::datagen {

void CaseSpec::validate() const {
  if (h_over_d < 2.0 || h_over_d > 6.0)
    throw DomainError("case: H/d " + std::to_string(h_over_d) + " outside [2, 6]");
  if (frequency_hz < 5.0 || frequency_hz > 100.0)
    throw DomainError("case: frequency " + std::to_string(frequency_hz) +
                      " outside [5, 100] Hz");
  if (u_jet < 8.0 || u_jet > 16.0)
    throw DomainError("case: velocity " + std::to_string(u_jet) +
                      " outside [8, 16] m/s");
}

CasePlan taguchi_l25(std::span<const double> h_over_d_levels,
                     std::span<const double> frequency_levels,
                     std::span<const double> u_jet_levels) {
  const auto check_levels = [](std::span<const double> levels, const char* name) {
    if (levels.size() != 5)
      throw ShapeError(std::string("taguchi_l25: ") + name + " needs 5 levels");
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        if (levels[i] == levels[j])
          throw DomainError(std::string("taguchi_l25: duplicate ") + name +
                            " level " + io::format_double(levels[i]));
  };
  check_levels(h_over_d_levels, "H/d");
  check_levels(frequency_levels, "frequency");
  check_levels(u_jet_levels, "velocity");

  CasePlan plan;
  for (std::size_t i = 0; i < 25; ++i) {
    const std::size_t a = i / 5;
    const std::size_t b = i % 5;
    const std::size_t c = (a + b) % 5;
    plan.cases.push_back({h_over_d_levels[a], frequency_levels[b], u_jet_levels[c]});
  }
  for (std::size_t i = 0; i < 21; ++i) plan.train_indices.push_back(i);
  for (std::size_t i = 21; i < 25; ++i) plan.test_indices.push_back(i);
  return plan;
}

double InletSignal::value_at(double t) const {
  double v = 0.0;
  for (const auto& c : components)
    v += c.u_jet *
         (1.0 + 0.75 * std::sin(2.0 * std::numbers::pi * c.frequency_hz * t));
  return v;
}

double InletSignal::mean_velocity() const {
  double v = 0.0;
  for (const auto& c : components) v += c.u_jet;
  return v;
}

namespace {

InletSignal sample_signal(InletKind kind, std::vector<InletComponent> components,
                          std::span<const double> times) {
  if (times.empty()) throw ShapeError("inlet_velocity: empty time grid");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw DomainError("inlet_velocity: times not increasing");
  InletSignal sig;
  sig.kind = kind;
  sig.components = std::move(components);
  sig.times.assign(times.begin(), times.end());
  sig.values.reserve(times.size());
  for (double t : times) sig.values.push_back(sig.value_at(t));
  return sig;
}

}  // namespace

InletSignal inlet_velocity(const CaseSpec& spec, std::span<const double> times) {
  spec.validate();
  return sample_signal(InletKind::Harmonic, {{spec.u_jet, spec.frequency_hz}}, times);
}

InletSignal inlet_velocity(std::span<const InletComponent> components,
                           std::span<const double> times) {
  if (components.empty())
    throw ShapeError("inlet_velocity: no components");
  return sample_signal(InletKind::RandomMulti,
                       {components.begin(), components.end()}, times);
}

std::vector<InletComponent> default_random_components() {
  return {{8.0, 5.0}, {10.0, 25.0}, {12.0, 50.0}, {14.0, 75.0}, {16.0, 100.0}};
}

std::vector<double> SyntheticFieldModel::node_positions() const {
  std::vector<double> s(n_nodes);
  if (n_nodes == 1) {
    s[0] = 0.0;
    return s;
  }
  for (std::size_t i = 0; i < n_nodes; ++i)
    s[i] = -arc_half_length +
           2.0 * arc_half_length * static_cast<double>(i) /
               static_cast<double>(n_nodes - 1);
  return s;
}

void SyntheticFieldModel::validate() const {
  if (n_nodes < 1) throw ShapeError("field model: no nodes");
  if (!(stagnation_peak > 0.0)) throw DomainError("field model: peak must be > 0");
  if (!(decay_width > 0.0)) throw DomainError("field model: width must be > 0");
  if (!(arc_half_length > 0.0))
    throw DomainError("field model: arc half-length must be > 0");
  if (lag_per_unit_s < 0.0)
    throw DomainError("field model: negative lag");
}

pod::SnapshotMatrix synthesize_nu_field(const SyntheticFieldModel& model,
                                        const InletSignal& signal,
                                        std::span<const double> times) {
  model.validate();
  if (signal.components.empty())
    throw ShapeError("synthesize_nu_field: signal has no components");
  const double v_ref = signal.mean_velocity();
  if (!(v_ref > 0.0))
    throw DomainError("synthesize_nu_field: non-positive reference velocity");

  pod::SnapshotMatrix snap;
  snap.times.assign(times.begin(), times.end());
  const auto s = model.node_positions();
  snap.node_coords.resize(model.n_nodes);
  for (std::size_t i = 0; i < model.n_nodes; ++i)
    snap.node_coords[i] = {s[i], 0.0};

  snap.values = linalg::Matrix(model.n_nodes, times.size());
  for (std::size_t i = 0; i < model.n_nodes; ++i) {
    const double envelope =
        std::exp(-s[i] * s[i] / (2.0 * model.decay_width * model.decay_width));
    const double delay = model.lag_per_unit_s * std::abs(s[i]);
    for (std::size_t t = 0; t < times.size(); ++t) {
      const double v = signal.value_at(times[t] - delay);
      snap.values(i, t) =
          model.stagnation_peak *
              std::pow(v / v_ref, model.velocity_exponent) * envelope +
          model.baseline;
    }
  }
  snap.validate();
  return snap;
}

std::vector<double> average_nu(const pod::SnapshotMatrix& field) {
  field.validate();
  std::vector<double> series(field.n_snapshots(), 0.0);
  for (std::size_t t = 0; t < field.n_snapshots(); ++t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < field.n_nodes(); ++i) acc += field.values(i, t);
    series[t] = acc / static_cast<double>(field.n_nodes());
  }
  return series;
}

void write_case_plan_csv(const std::filesystem::path& path, const CasePlan& plan) {
  io::CsvTable rows;
  rows.push_back({"Case", "H/d", "Fr", "V"});
  for (std::size_t i = 0; i < plan.cases.size(); ++i) {
    const auto& c = plan.cases[i];
    rows.push_back({std::to_string(i + 1), io::format_double(c.h_over_d),
                    io::format_double(c.frequency_hz), io::format_double(c.u_jet)});
  }
  io::write_csv(path, rows);
}

CasePlan read_case_plan_csv(const std::filesystem::path& path) {
  const auto rows = io::read_csv(path);
  if (rows.empty() || rows[0] != std::vector<std::string>{"Case", "H/d", "Fr", "V"})
    throw IoError("case plan csv: bad header in " + path.string());
  CasePlan plan;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 4)
      throw IoError("case plan csv: bad row " + std::to_string(i));
    plan.cases.push_back({io::parse_double(rows[i][1]), io::parse_double(rows[i][2]),
                          io::parse_double(rows[i][3])});
  }
  if (plan.cases.size() != 25)
    throw IoError("case plan csv: expected 25 cases, got " +
                  std::to_string(plan.cases.size()));
  for (std::size_t i = 0; i < 21; ++i) plan.train_indices.push_back(i);
  for (std::size_t i = 21; i < 25; ++i) plan.test_indices.push_back(i);
  return plan;
}

}  // namespace podsurge::datagen
