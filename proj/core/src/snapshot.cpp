#include "ceseplast/snapshot.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ceseplast/system.hpp"

namespace ceseplast {

double SnapshotRow::get(SnapshotField f) const {
  switch (f) {
    case SnapshotField::X: return x;
    case SnapshotField::Rho: return rho;
    case SnapshotField::V: return v;
    case SnapshotField::S11: return s11;
    case SnapshotField::P: return p;
    case SnapshotField::T11: return t11;
    case SnapshotField::Gamma: return gamma;
  }
  return 0.0;
}

std::vector<double> Snapshot::column(SnapshotField f) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.get(f));
  return out;
}

Snapshot make_snapshot(const MeshLevel& level, const MaterialProperties& mat, std::size_t step) {
  Snapshot s;
  s.time = level.t;
  s.step = step;
  s.rows.reserve(level.nodes.size());
  for (std::size_t k = 0; k < level.nodes.size(); ++k) {
    const PrimitiveState w = to_primitive(level.nodes[k].u);
    SnapshotRow r;
    r.x = level.position(k);
    r.rho = w.rho;
    r.v = w.v;
    r.s11 = w.s11;
    r.p = pressure_from_density(w.rho, mat);
    r.t11 = r.s11 - r.p;
    r.gamma = level.loading[level.cell_of(k)];
    s.rows.push_back(r);
  }
  return s;
}

std::string snapshot_filename(std::size_t step) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%08zu.csv", step);
  return buf;
}

void write_snapshot(const Snapshot& snap, const std::filesystem::path& path,
                    const std::vector<SnapshotField>& fields) {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (!f) throw std::runtime_error("cannot write snapshot " + path.string());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    std::fprintf(f, "%s%s", i ? "," : "", to_string(fields[i]));
  }
  std::fputc('\n', f);
  for (const auto& r : snap.rows) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (fields[i] == SnapshotField::Gamma) {
        std::fprintf(f, "%s%d", i ? "," : "", r.gamma);
      } else {
        std::fprintf(f, "%s%.16e", i ? "," : "", r.get(fields[i]));
      }
    }
    std::fputc('\n', f);
  }
  const bool ok = std::ferror(f) == 0;
  if (std::fclose(f) != 0 || !ok) {
    throw std::runtime_error("I/O error writing snapshot " + path.string());
  }
}

void write_snapshot(const MeshLevel& level, const MaterialProperties& mat,
                    const std::filesystem::path& path, std::size_t step) {
  write_snapshot(make_snapshot(level, mat, step), path);
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open snapshot " + path.string());
  auto bad = [&](std::size_t line, const std::string& what) {
    return std::runtime_error(path.string() + ":" + std::to_string(line) + ": " + what);
  };

  std::string line;
  if (!std::getline(in, line)) throw bad(1, "empty file");
  std::vector<SnapshotField> cols;
  {
    std::stringstream ss(line);
    std::string name;
    while (std::getline(ss, name, ',')) {
      try {
        cols.push_back(snapshot_field_from_string(name));
      } catch (const std::invalid_argument&) {
        throw bad(1, "unknown column \"" + name + "\"");
      }
    }
  }

  Snapshot snap;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    SnapshotRow r;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::size_t end = std::min(line.find(',', pos), line.size());
      if (pos > line.size() || (end == line.size() && i + 1 < cols.size())) {
        throw bad(lineno, "expected " + std::to_string(cols.size()) + " values");
      }
      double value = 0.0;
      const auto res = std::from_chars(line.data() + pos, line.data() + end, value);
      if (res.ec != std::errc() || res.ptr != line.data() + end) {
        throw bad(lineno, "malformed number in column " + std::string(to_string(cols[i])));
      }
      switch (cols[i]) {
        case SnapshotField::X: r.x = value; break;
        case SnapshotField::Rho: r.rho = value; break;
        case SnapshotField::V: r.v = value; break;
        case SnapshotField::S11: r.s11 = value; break;
        case SnapshotField::P: r.p = value; break;
        case SnapshotField::T11: r.t11 = value; break;
        case SnapshotField::Gamma: r.gamma = static_cast<int>(value); break;
      }
      pos = end + 1;
    }
    if (pos <= line.size()) throw bad(lineno, "too many values");
    snap.rows.push_back(r);
  }
  return snap;
}

void RunManifest::write(const std::filesystem::path& path) const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& e : snapshots) {
    list.push_back({{"file", e.file}, {"step", e.step}, {"time", e.time}});
  }
  nlohmann::json config = nlohmann::json::parse(config_text, nullptr, false);
  if (config.is_discarded()) config = config_text;
  const nlohmann::json j = {
      {"config", config},   {"started", started}, {"finished", finished},
      {"status", status},   {"steps", steps},     {"cfl_max", cfl_max},
      {"snapshots", list},
  };
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("I/O error writing manifest " + path.string());
}

RunManifest RunManifest::read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest " + path.string());
  const auto j = nlohmann::json::parse(in);
  RunManifest m;
  m.config_text = j.at("config").dump(2) + "\n";
  m.started = j.at("started").get<std::string>();
  m.finished = j.at("finished").get<std::string>();
  m.status = j.at("status").get<std::string>();
  m.steps = j.at("steps").get<std::size_t>();
  m.cfl_max = j.at("cfl_max").get<double>();
  for (const auto& e : j.at("snapshots")) {
    m.snapshots.push_back(
        {e.at("file").get<std::string>(), e.at("step").get<std::size_t>(), e.at("time").get<double>()});
  }
  return m;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace ceseplast
