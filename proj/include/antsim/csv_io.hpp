#pragma once
// CSV emitters for run series, final metrics, and sweep tables. Output is a
// pure function of the data: fixed headers, rows in a fixed order, numbers
// printed with 6 significant digits.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "antsim/engine.hpp"
#include "antsim/sweep.hpp"

namespace antsim {

inline std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

namespace detail {
inline std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary);  // binary: byte-identical across platforms
    if (!out) throw std::runtime_error("cannot open '" + file.string() + "' for writing");
    return out;
}
inline void finish(std::ofstream& out, const std::filesystem::path& file) {
    out.flush();
    if (!out) throw std::runtime_error("failed while writing '" + file.string() + "'");
}
}  // namespace detail

// series.csv: one row per sample, ordered by step. final.csv: one row of
// final metrics.
inline void emit_run_csv(const RunResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    {
        const auto file = dir / "series.csv";
        auto out = detail::open_out(file);
        out << "step,bits_collected_per_coop,bits_delivered_per_coop,frac_collected,"
               "frac_delivered\n";
        for (const SeriesSample& s : result.series) {
            out << s.step << ',' << format_sig(s.bits_collected_per_coop) << ','
                << format_sig(s.bits_delivered_per_coop) << ',' << format_sig(s.frac_collected)
                << ',' << format_sig(s.frac_delivered) << '\n';
        }
        detail::finish(out, file);
    }
    {
        const auto file = dir / "final.csv";
        auto out = detail::open_out(file);
        out << "bits_collected_per_coop,bits_delivered_per_coop,frac_collected,frac_delivered,"
               "second_find_fraction\n";
        const Metrics& m = result.final_metrics;
        out << format_sig(m.bits_collected_per_coop) << ','
            << format_sig(m.bits_delivered_per_coop) << ',' << format_sig(m.frac_collected)
            << ',' << format_sig(m.frac_delivered) << ',' << format_sig(m.second_find_fraction)
            << '\n';
        detail::finish(out, file);
    }
}

// sweep.csv: one row per (axis1, axis2, metric), sorted by axis1, then
// axis2, then metric name. The metric name array is already alphabetical.
inline void emit_sweep_csv(const SweepTable& table, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    const auto file = dir / "sweep.csv";
    auto out = detail::open_out(file);
    out << "axis1,axis2,metric,mean,stddev\n";
    std::vector<SweepCell> cells = table.cells;
    std::sort(cells.begin(), cells.end(), [](const SweepCell& a, const SweepCell& b) {
        if (a.axis1 != b.axis1) return a.axis1 < b.axis1;
        return a.axis2 < b.axis2;
    });
    for (const SweepCell& cell : cells) {
        for (int metric = 0; metric < 5; ++metric) {
            out << format_sig(cell.axis1) << ',' << format_sig(cell.axis2) << ','
                << kMetricNames[metric] << ',' << format_sig(cell.stats[metric].mean) << ','
                << format_sig(cell.stats[metric].stddev) << '\n';
        }
    }
    detail::finish(out, file);
}

}  // namespace antsim
