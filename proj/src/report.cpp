#include "offside/report.hpp"

namespace offside {

nlohmann::json frame_result_json(const FrameResult& r, int img_height) {
  using nlohmann::json;
  json j;
  j["frame_index"] = r.frame_index;
  j["mode"] = r.mode == FrameMode::detect ? "detect" : "track";
  j["top_row"] = r.top_row;

  json players;
  for (Team team : {Team::a, Team::b}) {
    json arr = json::array();
    for (const BBox& b : r.players[team_index(team)]) arr.push_back({b.x0, b.y0, b.x1, b.y1});
    players[team == Team::a ? "a" : "b"] = std::move(arr);
  }
  j["players"] = std::move(players);

  if (r.vanishing_point)
    j["vanishing_point"] = {r.vanishing_point->x, r.vanishing_point->y};
  else
    j["vanishing_point"] = nullptr;

  if (r.offside) {
    j["offside"] = {
        {"defender_index", r.offside->defender_index},
        {"bottom_x", r.offside->bottom_x},
        {"line",
         {{r.offside->vp.x, r.offside->vp.y},
          {r.offside->bottom_x, static_cast<double>(img_height - 1)}}}};
  } else {
    j["offside"] = nullptr;
  }

  json intercepts = json::array();
  for (const auto& [idx, x] : r.diagnostics.intercepts) intercepts.push_back({idx, x});
  j["diagnostics"] = {{"rejected_pairs", r.diagnostics.rejected_pairs},
                      {"lost_tracks", r.diagnostics.lost_tracks},
                      {"intercepts", std::move(intercepts)}};
  return j;
}

}  // namespace offside
