#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "fronts/analysis.hpp"
#include "fronts/config.hpp"
#include "fronts/errors.hpp"

namespace fronts {

namespace detail {

/// 17 significant digits: doubles survive a text round trip unchanged.
inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

inline std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path.string());
    return out;
}

/// Minimal SVG line chart: one panel for the speed history, one for the
/// delay x_c(t) - sigma_star*t when a reference speed is available.
inline void write_svg_chart(const std::filesystem::path& path, const RunRecord& record,
                            std::optional<double> sigma_star) {
    struct Series {
        std::string label;
        std::vector<double> y;
    };
    std::vector<Series> panels;
    panels.push_back({"sigma_LY(t)", record.ly_speeds});
    if (sigma_star) {
        Series delay{"x_c(t) - sigma*." + std::string("t"), {}};
        delay.label = "x_c(t) - sigma* t";
        delay.y.reserve(record.size());
        for (std::size_t i = 0; i < record.size(); ++i)
            delay.y.push_back(record.level_positions[i] - *sigma_star * record.times[i]);
        panels.push_back(std::move(delay));
    }

    const double width = 800.0, panel_h = 220.0, margin = 45.0;
    auto out = open_for_write(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << panel_h * panels.size() << "\">\n";
    const double t0 = record.times.front();
    const double t1 = record.times.back();
    for (std::size_t p = 0; p < panels.size(); ++p) {
        const auto& y = panels[p].y;
        double lo = y.front(), hi = y.front();
        for (const double v : y) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo < 1e-12) hi = lo + 1.0;
        const double top = p * panel_h;
        out << "<rect x=\"" << margin << "\" y=\"" << top + 15 << "\" width=\""
            << width - 2 * margin << "\" height=\"" << panel_h - 45
            << "\" fill=\"none\" stroke=\"#888\"/>\n";
        out << "<text x=\"" << margin << "\" y=\"" << top + 12 << "\" font-size=\"12\">"
            << panels[p].label << " [" << fmt6(lo) << ", " << fmt6(hi) << "],  t in ["
            << fmt6(t0) << ", " << fmt6(t1) << "]</text>\n";
        out << "<polyline fill=\"none\" stroke=\"#06c\" stroke-width=\"1\" points=\"";
        for (std::size_t i = 0; i < record.size(); ++i) {
            const double px =
                margin + (width - 2 * margin) * (t1 > t0 ? (record.times[i] - t0) / (t1 - t0) : 0.0);
            const double py = top + 15 + (panel_h - 45) * (1.0 - (y[i] - lo) / (hi - lo));
            out << fmt6(px) << "," << fmt6(py) << " ";
        }
        out << "\"/>\n";
    }
    out << "</svg>\n";
}

}  // namespace detail

/// Writes timeseries.csv, snapshots/, fit.txt (when a fit is present)
/// and a chart of the recorded histories into dir.
inline void emit_outputs(const RunRecord& record, const std::optional<FitResult>& fit,
                         const std::string& dir,
                         std::optional<double> sigma_star = std::nullopt) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create directory " + dir + ": " + ec.message());

    {
        auto out = detail::open_for_write(fs::path(dir) / "timeseries.csv");
        out << "t,dt,sigma_ly,x_c\n";
        for (std::size_t i = 0; i < record.size(); ++i) {
            out << detail::fmt17(record.times[i]) << "," << detail::fmt17(record.dts[i]) << ","
                << detail::fmt17(record.ly_speeds[i]) << ","
                << detail::fmt17(record.level_positions[i]) << "\n";
        }
        if (!out) throw io_error("failed writing " + (fs::path(dir) / "timeseries.csv").string());
    }

    if (!record.snapshots.empty()) {
        const fs::path snapdir = fs::path(dir) / "snapshots";
        fs::create_directories(snapdir, ec);
        if (ec) throw io_error("cannot create directory " + snapdir.string());
        auto index = detail::open_for_write(snapdir / "index.csv");
        index << "snapshot,t\n";
        for (std::size_t k = 0; k < record.snapshots.size(); ++k) {
            const auto& [t, profile] = record.snapshots[k];
            index << k << "," << detail::fmt17(t) << "\n";
            auto out = detail::open_for_write(snapdir / ("snapshot_" + std::to_string(k) + ".csv"));
            out << "x,u\n";
            for (int i = 0; i < profile.size(); ++i)
                out << detail::fmt17(record.grid.x(i)) << "," << detail::fmt17(profile[i])
                    << "\n";
        }
    }

    if (fit) {
        auto out = detail::open_for_write(fs::path(dir) / "fit.txt");
        out << "alpha = " << detail::fmt17(fit->alpha) << "\n"
            << "beta = " << detail::fmt17(fit->beta) << "\n"
            << "gamma = " << detail::fmt17(fit->gamma) << "\n"
            << "residual_rms = " << detail::fmt17(fit->residual_rms) << "\n"
            << "window = [" << detail::fmt17(fit->window.first) << ", "
            << detail::fmt17(fit->window.second) << "]\n";
    }

    if (record.size() >= 2) {
        detail::write_svg_chart(fs::path(dir) / "chart.svg", record, sigma_star);
    }
}

}  // namespace fronts
