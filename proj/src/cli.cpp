#include "offside/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "offside/config.hpp"
#include "offside/ppm.hpp"
#include "offside/report.hpp"
#include "offside/synthgen.hpp"

namespace offside {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open file: " + path.string());
  return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

std::optional<long long> trailing_number(const std::string& stem) {
  std::size_t end = stem.size();
  while (end > 0 && std::isdigit(static_cast<unsigned char>(stem[end - 1]))) --end;
  if (end == stem.size()) return std::nullopt;
  try {
    return std::stoll(stem.substr(end));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::vector<fs::path> list_frames(const fs::path& dir) {
  struct Entry {
    long long number;
    std::string name;
    fs::path path;
  };
  std::vector<Entry> entries;
  if (fs::exists(dir) && fs::is_directory(dir)) {
    for (const auto& e : fs::directory_iterator(dir)) {
      if (!e.is_regular_file() || e.path().extension() != ".ppm") continue;
      const auto num = trailing_number(e.path().stem().string());
      entries.push_back({num.value_or(std::numeric_limits<long long>::max()),
                         e.path().filename().string(), e.path()});
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.number != b.number) return a.number < b.number;
    return a.name < b.name;
  });
  std::vector<fs::path> out;
  out.reserve(entries.size());
  for (const Entry& e : entries) out.push_back(e.path);
  return out;
}

}  // namespace

int run_process(const ProcessOptions& opt) {
  try {
    const PipelineConfig cfg = parse_pipeline_config(read_file(opt.config_path));

    const auto frames = list_frames(opt.frames_dir);
    if (frames.empty()) throw std::runtime_error("no frames found");

    fs::create_directories(opt.out_dir);
    std::ofstream report(opt.out_dir / "report.jsonl", std::ios::trunc);
    if (!report) throw std::runtime_error("cannot open report for writing");
    report << nlohmann::json{{"config", config_to_json(cfg)}}.dump() << '\n';

    Pipeline pipeline(cfg);
    std::size_t detect_frames = 0;
    double total_ms = 0.0;
    int height = 0;

    for (std::size_t i = 0; i < frames.size(); ++i) {
      const Image img = load_ppm(frames[i]);
      height = img.height;

      FrameDebug debug;
      const auto t0 = std::chrono::steady_clock::now();
      const FrameResult res = pipeline.process(i, img, opt.dump_masks ? &debug : nullptr);
      const auto t1 = std::chrono::steady_clock::now();
      total_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
      if (res.mode == FrameMode::detect) ++detect_frames;

      save_ppm(opt.out_dir / ("annotated_" + std::to_string(i) + ".ppm"),
               annotate_frame(img, res, cfg));
      if (opt.dump_masks) {
        const std::string suffix = "_" + std::to_string(i) + ".ppm";
        save_ppm(opt.out_dir / ("field" + suffix), mask_to_image(debug.field));
        save_ppm(opt.out_dir / ("white" + suffix), mask_to_image(debug.white));
        save_ppm(opt.out_dir / ("team_a" + suffix), mask_to_image(debug.team_a));
        save_ppm(opt.out_dir / ("team_b" + suffix), mask_to_image(debug.team_b));
      }

      report << frame_result_json(res, height).dump() << '\n';
    }

    // Wall-clock timing goes to stdout only, so the report stays byte-stable.
    report << nlohmann::json{{"summary",
                              {{"frames", frames.size()},
                               {"detect_frames", detect_frames},
                               {"track_frames", frames.size() - detect_frames}}}}
                  .dump()
           << '\n';
    if (!report) throw std::runtime_error("report write failed");

    std::cout << "processed " << frames.size() << " frames (" << detect_frames << " detect, "
              << frames.size() - detect_frames << " track), mean "
              << total_ms / static_cast<double>(frames.size()) << " ms/frame\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}

int run_synth(const SynthOptions& opt) {
  try {
    const SceneSpec scene = parse_scene_spec(read_file(opt.scene_path));
    const std::size_t n = emit_sequence(scene, opt.out_dir);
    std::cout << n << " frames written to " << opt.out_dir.string() << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace offside
