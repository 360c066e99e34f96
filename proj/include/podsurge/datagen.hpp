#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "podsurge/pod.hpp"

namespace podsurge::datagen {

/// One design point of the harmonic-jet study.
struct CaseSpec {
  double h_over_d = 4.0;      // nozzle-to-surface distance over diameter, [2, 6]
  double frequency_hz = 50.0; // pulse frequency, [5, 100]
  double u_jet = 12.0;        // mean jet velocity m/s, [8, 16]
  void validate() const;
};

/// L25 design: 25 cases, strength-2 balanced over three 5-level factors.
/// The last four rows are the held-out test cases.
struct CasePlan {
  std::vector<CaseSpec> cases;
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
};

/// Row i takes level indices (i/5, i%5, (i/5 + i%5) % 5) for
/// (H/d, frequency, velocity). Levels must be distinct within each factor.
CasePlan taguchi_l25(std::span<const double> h_over_d_levels,
                     std::span<const double> frequency_levels,
                     std::span<const double> u_jet_levels);

enum class InletKind { Harmonic, RandomMulti };

struct InletComponent {
  double u_jet = 0.0;
  double frequency_hz = 0.0;
};

/// Sampled inlet-velocity law. `components` carry the analytic definition,
/// so the signal can be re-evaluated at arbitrary (e.g. lag-shifted) times.
struct InletSignal {
  InletKind kind = InletKind::Harmonic;
  std::vector<InletComponent> components;
  std::vector<double> times;
  std::vector<double> values;

  /// sum_i U_i * (1 + 0.75 * sin(2 pi f_i t))
  double value_at(double t) const;
  /// Time-average velocity: sum of component means.
  double mean_velocity() const;
};

InletSignal inlet_velocity(const CaseSpec& spec, std::span<const double> times);
InletSignal inlet_velocity(std::span<const InletComponent> components,
                           std::span<const double> times);

/// The five zipped (U_i, f_i) pairs of the random-frequency scenario:
/// (8,5) (10,25) (12,50) (14,75) (16,100).
std::vector<InletComponent> default_random_components();

/// Analytic stand-in for the full-order solver. Local Nu along the arc:
///   Nu(s, t) = peak * (V(t - lag*|s|) / V_ref)^exponent * exp(-s^2/(2 w^2)) + baseline
/// with V_ref the case mean velocity; peak at the stagnation point s = 0.
struct SyntheticFieldModel {
  std::size_t n_nodes = 200;
  double arc_half_length = 6.0;  // S/d extent, nodes span [-L, L]
  double stagnation_peak = 60.0;
  double decay_width = 2.0;
  double velocity_exponent = 0.8;
  double lag_per_unit_s = 0.002;  // seconds of convective delay per unit |s|
  double baseline = 10.0;

  std::vector<double> node_positions() const;
  void validate() const;
};

pod::SnapshotMatrix synthesize_nu_field(const SyntheticFieldModel& model,
                                        const InletSignal& signal,
                                        std::span<const double> times);

/// Arithmetic mean over nodes, one value per snapshot (uniform spacing).
std::vector<double> average_nu(const pod::SnapshotMatrix& field);

/// Table-3 style CSV with header "Case,H/d,Fr,V"; cases numbered from 1.
void write_case_plan_csv(const std::filesystem::path& path, const CasePlan& plan);
CasePlan read_case_plan_csv(const std::filesystem::path& path);

}  // namespace podsurge::datagen
