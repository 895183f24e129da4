#include <string>

#include <CLI11.hpp>

#include "offside/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Offside line marker: field segmentation, player detection and "
               "tracking, vanishing-point offside line per frame"};
  app.require_subcommand(1);

  std::string frames_dir, config_path, out_dir;
  bool dump_masks = false;
  CLI::App* process = app.add_subcommand("process", "Process a directory of PPM frames");
  process->add_option("--frames", frames_dir, "Directory of numerically-ordered .ppm frames")
      ->required();
  process->add_option("--config", config_path, "Pipeline config JSON")->required();
  process->add_option("--out", out_dir, "Output directory")->required();
  process->add_flag("--dump-masks", dump_masks, "Write intermediate masks per frame");

  std::string scene_path, synth_out;
  CLI::App* synth = app.add_subcommand("synth", "Render a synthetic ground-truth sequence");
  synth->add_option("--scene", scene_path, "Scene description JSON")->required();
  synth->add_option("--out", synth_out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? offside::kExitOk : offside::kExitUsage;
  }

  if (process->parsed())
    return offside::run_process({frames_dir, config_path, out_dir, dump_masks});
  return offside::run_synth({scene_path, synth_out});
}
