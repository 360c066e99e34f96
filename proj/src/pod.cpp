#include "podsurge/pod.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "podsurge/errors.hpp"
#include "podsurge/io.hpp"

namespace podsurge::pod {

void SnapshotMatrix::validate() const {
  if (values.rows() == 0 || values.cols() == 0)
    throw ShapeError("snapshot matrix: empty");
  if (times.size() != values.cols())
    throw ShapeError("snapshot matrix: " + std::to_string(times.size()) +
                     " times for " + std::to_string(values.cols()) + " snapshots");
  for (std::size_t i = 1; i < times.size(); ++i)
    if (!(times[i] > times[i - 1]))
      throw DomainError("snapshot matrix: times not strictly increasing");
  if (!values.all_finite())
    throw DomainError("snapshot matrix: non-finite values");
  if (!node_coords.empty() && node_coords.size() != values.rows())
    throw ShapeError("snapshot matrix: node_coords size mismatch");
}

PodBasis compute_pod(const SnapshotMatrix& snapshots, double energy_threshold,
                     bool center) {
  snapshots.validate();
  if (!(energy_threshold > 0.0) || energy_threshold > 1.0)
    throw DomainError("compute_pod: energy threshold must be in (0, 1]");
  if (snapshots.n_snapshots() < 2)
    throw DomainError("compute_pod: need at least 2 snapshots");

  const std::size_t n_nodes = snapshots.n_nodes();
  const std::size_t n_snap = snapshots.n_snapshots();

  linalg::Matrix work = snapshots.values;
  std::vector<double> mean;
  if (center) {
    mean.assign(n_nodes, 0.0);
    for (std::size_t i = 0; i < n_nodes; ++i) {
      double acc = 0.0;
      for (std::size_t s = 0; s < n_snap; ++s) acc += work(i, s);
      mean[i] = acc / static_cast<double>(n_snap);
      for (std::size_t s = 0; s < n_snap; ++s) work(i, s) -= mean[i];
    }
  }

  const auto decomposition = linalg::svd(work);
  const auto& sigma = decomposition.singular_values;

  double total = 0.0;
  for (double s : sigma) total += s * s;
  if (total == 0.0)
    throw DomainError(center ? "compute_pod: snapshot matrix has zero fluctuation"
                             : "compute_pod: all-zero snapshot matrix");

  std::size_t n_kept = 0;
  double running = 0.0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    running += sigma[i] * sigma[i];
    n_kept = i + 1;
    if (running / total >= energy_threshold) break;
  }

  PodBasis basis;
  basis.singular_values = sigma;
  basis.n_kept = n_kept;
  basis.node_mean = std::move(mean);

  basis.modes = linalg::Matrix(n_nodes, n_kept);
  basis.temporal_coefficients = linalg::Matrix(n_kept, n_snap);
  for (std::size_t j = 0; j < n_kept; ++j) {
    // sign convention: the largest-magnitude entry of each mode is positive
    std::size_t arg = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < n_nodes; ++i) {
      const double mag = std::abs(decomposition.u(i, j));
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    const double flip = decomposition.u(arg, j) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n_nodes; ++i)
      basis.modes(i, j) = flip * decomposition.u(i, j);
    for (std::size_t s = 0; s < n_snap; ++s)
      basis.temporal_coefficients(j, s) = flip * sigma[j] * decomposition.vt(j, s);
  }

  double captured = 0.0;
  for (std::size_t j = 0; j < n_kept; ++j) captured += sigma[j] * sigma[j];
  basis.energy_captured = captured / total;
  return basis;
}

std::vector<double> project(const PodBasis& basis, std::span<const double> field) {
  if (field.size() != basis.modes.rows())
    throw ShapeError("project: field length " + std::to_string(field.size()) +
                     " != node count " + std::to_string(basis.modes.rows()));
  if (basis.node_mean.empty())
    return linalg::matvec_transposed(basis.modes, field);
  std::vector<double> centered(field.begin(), field.end());
  for (std::size_t i = 0; i < centered.size(); ++i) centered[i] -= basis.node_mean[i];
  return linalg::matvec_transposed(basis.modes, centered);
}

std::vector<double> reconstruct(const PodBasis& basis,
                                std::span<const double> coefficients) {
  if (coefficients.size() != basis.n_kept)
    throw ShapeError("reconstruct: " + std::to_string(coefficients.size()) +
                     " coefficients for " + std::to_string(basis.n_kept) + " modes");
  auto field = linalg::matvec(basis.modes, coefficients);
  if (!basis.node_mean.empty())
    for (std::size_t i = 0; i < field.size(); ++i) field[i] += basis.node_mean[i];
  return field;
}

std::vector<double> cumulative_energy_curve(const PodBasis& basis) {
  double total = 0.0;
  for (double s : basis.singular_values) total += s * s;
  std::vector<double> curve(basis.singular_values.size());
  double running = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    running += basis.singular_values[i] * basis.singular_values[i];
    curve[i] = running / total;
  }
  return curve;
}

// --- serialization ----------------------------------------------------------

void write_snapshot_csv(const std::filesystem::path& path, const SnapshotMatrix& snap) {
  snap.validate();
  const bool coords = !snap.node_coords.empty();
  io::CsvTable rows;
  std::vector<std::string> header{"node"};
  if (coords) {
    header.push_back("x");
    header.push_back("y");
  }
  for (double t : snap.times) header.push_back(io::format_double(t));
  rows.push_back(std::move(header));
  for (std::size_t i = 0; i < snap.n_nodes(); ++i) {
    std::vector<std::string> row{std::to_string(i)};
    if (coords) {
      row.push_back(io::format_double(snap.node_coords[i][0]));
      row.push_back(io::format_double(snap.node_coords[i][1]));
    }
    for (std::size_t s = 0; s < snap.n_snapshots(); ++s)
      row.push_back(io::format_double(snap.values(i, s)));
    rows.push_back(std::move(row));
  }
  io::write_csv(path, rows);
}

SnapshotMatrix read_snapshot_csv(const std::filesystem::path& path) {
  const auto rows = io::read_csv(path);
  if (rows.size() < 2 || rows[0].empty() || rows[0][0] != "node")
    throw IoError("snapshot csv: bad header in " + path.string());
  const bool coords = rows[0].size() >= 3 && rows[0][1] == "x" && rows[0][2] == "y";
  const std::size_t first_time = coords ? 3 : 1;
  if (rows[0].size() <= first_time)
    throw IoError("snapshot csv: no time columns in " + path.string());

  SnapshotMatrix snap;
  const std::size_t n_snap = rows[0].size() - first_time;
  const std::size_t n_nodes = rows.size() - 1;
  for (std::size_t s = 0; s < n_snap; ++s)
    snap.times.push_back(io::parse_double(rows[0][first_time + s]));
  snap.values = linalg::Matrix(n_nodes, n_snap);
  if (coords) snap.node_coords.resize(n_nodes);
  for (std::size_t i = 0; i < n_nodes; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != rows[0].size())
      throw IoError("snapshot csv: ragged row " + std::to_string(i + 1));
    if (coords) {
      snap.node_coords[i][0] = io::parse_double(row[1]);
      snap.node_coords[i][1] = io::parse_double(row[2]);
    }
    for (std::size_t s = 0; s < n_snap; ++s)
      snap.values(i, s) = io::parse_double(row[first_time + s]);
  }
  snap.validate();
  return snap;
}

namespace {

io::CsvTable matrix_to_csv(const linalg::Matrix& m) {
  io::CsvTable rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::vector<std::string> row;
    row.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(io::format_double(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

linalg::Matrix matrix_from_csv(const io::CsvTable& rows, const std::string& what) {
  if (rows.empty()) throw IoError(what + ": empty matrix csv");
  linalg::Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw IoError(what + ": ragged matrix csv");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m(i, j) = io::parse_double(rows[i][j]);
  }
  return m;
}

}  // namespace

void write_basis(const std::filesystem::path& stem, const PodBasis& basis) {
  const std::string name = stem.filename().string();
  nlohmann::json header;
  header["singular_values"] = basis.singular_values;
  header["n_kept"] = basis.n_kept;
  header["energy_captured"] = basis.energy_captured;
  header["node_mean"] = basis.node_mean;
  header["modes_csv"] = name + "_modes.csv";
  header["coefficients_csv"] = name + "_coefficients.csv";
  io::write_text_file(stem.string() + ".json", header.dump(2) + "\n");
  io::write_csv(stem.string() + "_modes.csv", matrix_to_csv(basis.modes));
  io::write_csv(stem.string() + "_coefficients.csv",
                matrix_to_csv(basis.temporal_coefficients));
}

PodBasis read_basis(const std::filesystem::path& json_path) {
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(io::read_text_file(json_path));
  } catch (const nlohmann::json::exception& e) {
    throw IoError("basis json: " + std::string(e.what()));
  }
  PodBasis basis;
  try {
    basis.singular_values = header.at("singular_values").get<std::vector<double>>();
    basis.n_kept = header.at("n_kept").get<std::size_t>();
    basis.energy_captured = header.at("energy_captured").get<double>();
    basis.node_mean = header.at("node_mean").get<std::vector<double>>();
    const auto dir = json_path.parent_path();
    basis.modes = matrix_from_csv(
        io::read_csv(dir / header.at("modes_csv").get<std::string>()), "modes");
    basis.temporal_coefficients = matrix_from_csv(
        io::read_csv(dir / header.at("coefficients_csv").get<std::string>()),
        "coefficients");
  } catch (const nlohmann::json::exception& e) {
    throw IoError("basis json: " + std::string(e.what()));
  }
  if (basis.modes.cols() != basis.n_kept ||
      basis.temporal_coefficients.rows() != basis.n_kept)
    throw IoError("basis json: inconsistent mode count");
  return basis;
}

}  // namespace podsurge::pod
