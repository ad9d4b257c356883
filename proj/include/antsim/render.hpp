#pragma once
// Headless frame renderer: binary PPM (P6) snapshots, W x H pixels, one
// frame per sampled step. Per cell the strongest channel wins and its color
// scales linearly with intensity; nest and food cells are fixed markers;
// each ant is a single pixel.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>
#include <vector>

#include "antsim/engine.hpp"

namespace antsim {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
};

namespace palette {
inline constexpr Rgb home{0, 0, 255};          // blue
inline constexpr Rgb food_coop{0, 255, 0};     // green
inline constexpr Rgb food_mislead{255, 0, 0};  // red
inline constexpr Rgb cautionary{255, 255, 0};  // yellow
inline constexpr Rgb nest_marker{130, 130, 130};
inline constexpr Rgb food_marker{230, 180, 60};
inline constexpr Rgb cooperator{255, 255, 255};
inline constexpr Rgb detractor{255, 0, 255};
}  // namespace palette

inline void write_ppm(const std::filesystem::path& file, int width, int height,
                      const std::vector<Rgb>& pixels) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + file.string() + "' for writing");
    out << "P6\n" << width << ' ' << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels.data()),
              static_cast<std::streamsize>(pixels.size() * sizeof(Rgb)));
    out.flush();
    if (!out) throw std::runtime_error("failed while writing '" + file.string() + "'");
}

inline std::vector<Rgb> render_frame(const SimConfig& cfg, const PheromoneGrid& grid,
                                     std::span<const Ant> ants) {
    const int width = static_cast<int>(std::llround(cfg.world_w));
    const int height = static_cast<int>(std::llround(cfg.world_h));
    std::vector<Rgb> pixels(static_cast<std::size_t>(width) * height);

    // One color per cell, then blit the cell onto its pixel block.
    const int cells = grid.cell_count();
    std::vector<Rgb> cell_color(cells);
    for (int idx = 0; idx < cells; ++idx) {
        const CellKind kind = grid.kind(idx);
        if (kind == CellKind::Nest) {
            cell_color[idx] = palette::nest_marker;
            continue;
        }
        if (kind == CellKind::Food) {
            cell_color[idx] = palette::food_marker;
            continue;
        }
        double best = 0.0;
        Rgb base{};
        const Channel channels[] = {Channel::Home, Channel::FoodCoop, Channel::FoodMislead,
                                    Channel::Cautionary};
        const Rgb colors[] = {palette::home, palette::food_coop, palette::food_mislead,
                              palette::cautionary};
        for (int ch = 0; ch < kChannelCount; ++ch) {
            const double v = grid.value(idx, channels[ch]);
            if (v > best) {
                best = v;
                base = colors[ch];
            }
        }
        if (best > 0.0) {
            const double brightness = std::min(best, kMaxIntensity) / kMaxIntensity;
            cell_color[idx] = {static_cast<std::uint8_t>(base.r * brightness),
                               static_cast<std::uint8_t>(base.g * brightness),
                               static_cast<std::uint8_t>(base.b * brightness)};
        }
    }
    for (int py = 0; py < height; ++py) {
        for (int px = 0; px < width; ++px) {
            const int idx = grid.cell_index({px + 0.5, py + 0.5});
            pixels[static_cast<std::size_t>(py) * width + px] = cell_color[idx];
        }
    }
    for (const Ant& ant : ants) {
        const int px = std::clamp(static_cast<int>(ant.pos.x), 0, width - 1);
        const int py = std::clamp(static_cast<int>(ant.pos.y), 0, height - 1);
        pixels[static_cast<std::size_t>(py) * width + px] =
            ant.role == Role::Cooperator ? palette::cooperator : palette::detractor;
    }
    return pixels;
}

inline std::vector<Rgb> render_frame(const World& world) {
    return render_frame(world.config(), world.grid(), world.ants());
}

// Run the simulation and write frame_XXXXXXXX.ppm at step 0 and every
// `interval` steps. Returns the emitted paths in step order.
inline std::vector<std::filesystem::path> render_frames(const SimConfig& cfg, long long interval,
                                                        const std::filesystem::path& dir) {
    if (interval < 1) throw ConfigError("frame interval must be >= 1");
    std::filesystem::create_directories(dir);
    std::vector<std::filesystem::path> files;
    const SnapshotFn snapshot = [&](long long step, const World& world) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%08lld.ppm", step);
        const auto file = dir / name;
        write_ppm(file, static_cast<int>(std::llround(cfg.world_w)),
                  static_cast<int>(std::llround(cfg.world_h)), render_frame(world));
        files.push_back(file);
    };
    run(cfg, snapshot, interval);
    return files;
}

}  // namespace antsim
