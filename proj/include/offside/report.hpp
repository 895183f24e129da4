#pragma once

#include <json.hpp>

#include "offside/pipeline.hpp"

namespace offside {

// One report.jsonl line per frame. img_height pins the offside line's bottom
// endpoint row.
nlohmann::json frame_result_json(const FrameResult& r, int img_height);

}  // namespace offside
