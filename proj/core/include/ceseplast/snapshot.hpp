#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "ceseplast/cese.hpp"
#include "ceseplast/config.hpp"
#include "ceseplast/material.hpp"

namespace ceseplast {

struct SnapshotRow {
  double x = 0.0;
  double rho = 0.0;
  double v = 0.0;
  double s11 = 0.0;
  double p = 0.0;
  double t11 = 0.0;
  int gamma = 0;

  double get(SnapshotField f) const;
};

/// Field dump of one level. Rows are ordered by x.
struct Snapshot {
  double time = 0.0;
  std::size_t step = 0;
  std::vector<SnapshotRow> rows;

  std::vector<double> column(SnapshotField f) const;
};

Snapshot make_snapshot(const MeshLevel& level, const MaterialProperties& mat, std::size_t step);

/// "snap_00000042.csv"
std::string snapshot_filename(std::size_t step);

/// CSV with the header `x,rho,v,s11,p,t11,gamma` (or the selected subset, in
/// that order) and numbers printed with 17 significant digits.
void write_snapshot(const Snapshot& snap, const std::filesystem::path& path,
                    const std::vector<SnapshotField>& fields = all_snapshot_fields());

/// Convenience overload: snapshot the level and write it.
void write_snapshot(const MeshLevel& level, const MaterialProperties& mat,
                    const std::filesystem::path& path, std::size_t step = 0);

/// Read a snapshot file written by write_snapshot. Columns missing from the
/// file are left at zero. Time and step are not stored in the CSV and come
/// back as zero. Throws std::runtime_error naming the file and line on
/// malformed input.
Snapshot read_snapshot(const std::filesystem::path& path);

struct ManifestEntry {
  std::string file;
  std::size_t step = 0;
  double time = 0.0;
};

/// Bookkeeping for one run, written as JSON to `<out>/manifest`.
struct RunManifest {
  std::string config_text;  // canonical config echo
  std::string started;      // ISO-8601 UTC
  std::string finished;
  std::string status = "ok";  // or the failure message
  std::size_t steps = 0;
  double cfl_max = 0.0;
  std::vector<ManifestEntry> snapshots;

  void write(const std::filesystem::path& path) const;
  static RunManifest read(const std::filesystem::path& path);
};

/// Current UTC time as "YYYY-MM-DDThh:mm:ssZ".
std::string utc_timestamp();

}  // namespace ceseplast
