#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spe/analysis.hpp"
#include "spe/field.hpp"
#include "spe/pde.hpp"

namespace spe {

inline constexpr const char* kToolVersion = "spelab 1.0.0";

/// 17 significant digits: doubles round-trip exactly.
std::string format_real(double v);

/// Columns: t,W,E0,E1,max_u — one row per save.
void write_trajectory_csv(const Trajectory& traj, const std::string& path);

/// Columns: x,u — one row per node.
void write_snapshot_csv(const PeriodicField& f, const std::string& path);

/// Columns: a,T,C,T0,breaking.
void write_cosine_scan_csv(const std::vector<CosineScanRow>& rows, const std::string& path);

/// Columns: a,b,wellposed,breaking.
void write_gaussian_scan_csv(const std::vector<GaussianScanRow>& rows, const std::string& path);

/// Read a two-column (x,u) CSV on a uniform periodic grid.
PeriodicField load_field_csv(const std::string& path);

std::uint64_t fnv1a64_file(const std::string& path);

/// One manifest per run: the command, its full parameter set, and every
/// output file with size and content hash.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> params;
    std::vector<std::string> outputs;
    double duration_ms = 0.0;
    std::string stop_reason;  // empty when not applicable
};

void write_manifest(const RunManifest& m, const std::string& path);

/// Re-verify that every output listed in a manifest exists with the recorded
/// size and hash. Returns true on success; message explains any mismatch.
bool check_manifest(const std::string& path, std::string& message);

}  // namespace spe
