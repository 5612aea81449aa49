#include "spe/io.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spe/errors.hpp"

namespace spe {

std::string format_real(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

double w_at_time(const Trajectory& traj, double t) {
    const auto it = std::lower_bound(traj.step_times.begin(), traj.step_times.end(), t);
    if (it == traj.step_times.end()) return traj.w_series.back();
    return traj.w_series[static_cast<std::size_t>(it - traj.step_times.begin())];
}

}  // namespace

void write_trajectory_csv(const Trajectory& traj, const std::string& path) {
    auto out = open_out(path);
    out << "t,W,E0,E1,max_u\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        out << format_real(traj.times[i]) << ',' << format_real(w_at_time(traj, traj.times[i]))
            << ',' << format_real(traj.invariant_series[i][0]) << ','
            << format_real(traj.invariant_series[i][1]) << ','
            << format_real(traj.max_u_series[i]) << '\n';
    }
}

void write_snapshot_csv(const PeriodicField& f, const std::string& path) {
    auto out = open_out(path);
    out << "x,u\n";
    for (std::size_t j = 0; j < f.size(); ++j)
        out << format_real(f.node(j)) << ',' << format_real(f[j]) << '\n';
}

void write_cosine_scan_csv(const std::vector<CosineScanRow>& rows, const std::string& path) {
    auto out = open_out(path);
    out << "a,T,C,T0,breaking\n";
    for (const auto& r : rows)
        out << format_real(r.a) << ',' << format_real(r.t_break) << ',' << format_real(r.c) << ','
            << format_real(r.t0) << ',' << (r.breaking_predicted ? 1 : 0) << '\n';
}

void write_gaussian_scan_csv(const std::vector<GaussianScanRow>& rows, const std::string& path) {
    auto out = open_out(path);
    out << "a,b,wellposed,breaking\n";
    for (const auto& r : rows)
        out << format_real(r.a) << ',' << format_real(r.b) << ',' << (r.wellposed ? 1 : 0) << ','
            << (r.breaking ? 1 : 0) << '\n';
}

PeriodicField load_field_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open field file: " + path);
    std::string line;
    std::vector<double> xs, us;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("x,", 0) == 0 || line.rfind("#", 0) == 0) continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            throw InvalidArgument("malformed field row: " + line);
        xs.push_back(std::stod(a));
        us.push_back(std::stod(b));
    }
    if (xs.size() < 8) throw InvalidArgument("field file has fewer than 8 samples");
    const double h = xs[1] - xs[0];
    for (std::size_t j = 1; j < xs.size(); ++j)
        if (std::abs(xs[j] - xs[0] - h * static_cast<double>(j)) > 1e-9 * std::max(1.0, std::abs(xs[j])))
            throw InvalidArgument("field file grid is not uniform");
    const double L = h * static_cast<double>(xs.size());
    return PeriodicField(L, std::move(us));
}

std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for hashing: " + path);
    std::uint64_t h = 1469598103934665603ull;
    char buf[1 << 14];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
    }
    return h;
}

void write_manifest(const RunManifest& m, const std::string& path) {
    nlohmann::json j;
    j["command"] = m.command;
    j["version"] = kToolVersion;
    j["params"] = m.params;
    j["duration_ms"] = m.duration_ms;
    if (!m.stop_reason.empty()) j["stop_reason"] = m.stop_reason;
    j["outputs"] = nlohmann::json::array();
    for (const auto& p : m.outputs) {
        nlohmann::json o;
        o["path"] = p;
        o["bytes"] = std::filesystem::file_size(p);
        char hex[20];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64_file(p)));
        o["fnv1a64"] = hex;
        j["outputs"].push_back(o);
    }
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

bool check_manifest(const std::string& path, std::string& message) {
    std::ifstream in(path);
    if (!in) {
        message = "cannot open manifest: " + path;
        return false;
    }
    nlohmann::json j;
    in >> j;
    for (const auto& o : j.at("outputs")) {
        const std::string p = o.at("path").get<std::string>();
        if (!std::filesystem::exists(p)) {
            message = "missing output: " + p;
            return false;
        }
        if (std::filesystem::file_size(p) != o.at("bytes").get<std::uintmax_t>()) {
            message = "size mismatch: " + p;
            return false;
        }
        char hex[20];
        std::snprintf(hex, sizeof(hex), "%016llx",
                      static_cast<unsigned long long>(fnv1a64_file(p)));
        if (o.at("fnv1a64").get<std::string>() != hex) {
            message = "content hash mismatch: " + p;
            return false;
        }
    }
    message = "ok";
    return true;
}

}  // namespace spe
