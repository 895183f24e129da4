#pragma once

#include <string>

#include <json.hpp>

#include "offside/pipeline.hpp"
#include "offside/synthgen.hpp"

namespace offside {

// Strict flat-JSON config: every key under PipelineConfig is required and
// unknown keys are hard errors, each named in the thrown message.
PipelineConfig parse_pipeline_config(const std::string& text);

// Full echo of a config, used for the report header.
nlohmann::json config_to_json(const PipelineConfig& cfg);

// Scene description for the synth subcommand; same strictness.
SceneSpec parse_scene_spec(const std::string& text);

// Config matching the synthetic scene palette.
PipelineConfig default_pipeline_config();

}  // namespace offside
