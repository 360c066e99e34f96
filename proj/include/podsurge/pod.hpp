#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "podsurge/linalg.hpp"

namespace podsurge::pod {

/// Field values at every node, one column per time instant.
struct SnapshotMatrix {
  linalg::Matrix values;                           // n_nodes x n_snapshots
  std::vector<double> times;                       // strictly increasing
  std::vector<std::array<double, 2>> node_coords;  // optional, (x, y) per node

  std::size_t n_nodes() const { return values.rows(); }
  std::size_t n_snapshots() const { return values.cols(); }
  void validate() const;
};

/// Truncated POD basis. All singular values are retained for energy
/// bookkeeping; only the first n_kept modes and coefficient rows are stored.
/// temporal_coefficients carry the singular values (alpha = Sigma V^T), so
/// values ~ modes * temporal_coefficients (+ node_mean when centered).
struct PodBasis {
  linalg::Matrix modes;                  // n_nodes x n_kept, orthonormal columns
  std::vector<double> singular_values;   // full spectrum, descending
  std::size_t n_kept = 0;
  double energy_captured = 0.0;
  linalg::Matrix temporal_coefficients;  // n_kept x n_snapshots
  std::vector<double> node_mean;         // empty unless centering was requested
};

/// Snapshot POD at the requested energy threshold: keeps the smallest N
/// whose cumulative squared-singular-value fraction reaches the threshold.
/// Modes are sign-normalized (largest-magnitude entry positive). With
/// `center` the per-node temporal mean is removed first and stored.
PodBasis compute_pod(const SnapshotMatrix& snapshots, double energy_threshold,
                     bool center = false);

/// modes^T * (field - node_mean).
std::vector<double> project(const PodBasis& basis, std::span<const double> field);

/// node_mean + modes * coefficients.
std::vector<double> reconstruct(const PodBasis& basis,
                                std::span<const double> coefficients);

/// Entry m: cumulative energy fraction of the first m+1 modes. Non-
/// decreasing, final entry exactly 1.
std::vector<double> cumulative_energy_curve(const PodBasis& basis);

// --- serialization ---------------------------------------------------------

/// CSV layout: header "node[,x,y],<t_0>,<t_1>,...", one row per node.
void write_snapshot_csv(const std::filesystem::path& path, const SnapshotMatrix& snap);
SnapshotMatrix read_snapshot_csv(const std::filesystem::path& path);

/// Writes <stem>.json (singular values, n_kept, energy, node mean) plus
/// <stem>_modes.csv and <stem>_coefficients.csv next to it.
void write_basis(const std::filesystem::path& stem, const PodBasis& basis);
PodBasis read_basis(const std::filesystem::path& json_path);

}  // namespace podsurge::pod
