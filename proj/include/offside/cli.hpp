#pragma once

#include <filesystem>

namespace offside {

// Exit codes shared by both subcommands: 0 success, 1 usage error, 2 data error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

struct ProcessOptions {
  std::filesystem::path frames_dir;
  std::filesystem::path config_path;
  std::filesystem::path out_dir;
  bool dump_masks = false;
};

struct SynthOptions {
  std::filesystem::path scene_path;
  std::filesystem::path out_dir;
};

// Processes a directory of numerically-ordered PPM frames: writes
// annotated_<index>.ppm per frame, report.jsonl (config header, one line per
// frame, summary line), and optional intermediate mask dumps.
int run_process(const ProcessOptions& opt);

// Renders a scene description to PPM frames plus truth.jsonl.
int run_synth(const SynthOptions& opt);

}  // namespace offside
