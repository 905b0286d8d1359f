#include "navcot/observation.hpp"

#include <algorithm>
#include <cmath>

#include "navcot/errors.hpp"

namespace navcot {

bool ObservationSet::valid_label(char label) const {
  return label >= 'A' &&
         label < static_cast<char>('A' + static_cast<int>(options.size()));
}

std::string ObservationSet::valid_labels() const {
  std::string labels;
  for (const auto& opt : options) labels.push_back(opt.option_label);
  return labels;
}

std::string describe_observation(DirectionPhrase direction,
                                 const std::string& caption) {
  if (caption.empty()) throw EmptyCaption("empty caption for observation");
  return to_string(direction) + " to <" + caption + ">";
}

ObservationSet build_observation_set(const NavGraph& g,
                                     const CaptionTable& captions,
                                     const std::string& scan,
                                     const std::string& current,
                                     const Pose& agent_pose,
                                     const ObservationOptions& opts) {
  const auto& here = g.viewpoint(current);

  struct Candidate {
    std::string id;
    RelativeDirection rel;
  };
  std::vector<Candidate> candidates;
  for (const auto& nbr : g.neighbors(current)) {
    candidates.push_back(
        {nbr, relative_direction(here.position, agent_pose,
                                 g.viewpoint(nbr).position)});
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.rel.delta_heading_deg != b.rel.delta_heading_deg) {
                return a.rel.delta_heading_deg < b.rel.delta_heading_deg;
              }
              return a.id < b.id;
            });
  if (candidates.size() > 25) {
    throw GraphInvariantError("viewpoint " + current +
                              " has more neighbors than option labels");
  }

  ObservationSet set;
  set.options.push_back(ObservationDescription{'A', std::nullopt, "", "stop"});
  char label = 'B';
  for (const auto& c : candidates) {
    const auto& caption = captions.get(scan, current, c.id);
    const auto phrase =
        map_direction(c.rel.delta_heading_deg, c.rel.delta_elevation_deg,
                      opts.bins);
    std::string text = describe_observation(phrase, caption);
    if (opts.fine_direction) {
      const auto h = static_cast<long>(std::lround(c.rel.delta_heading_deg));
      const auto e = static_cast<long>(std::lround(c.rel.delta_elevation_deg));
      text = to_string(phrase) + " (heading " + std::to_string(h) +
             " degrees, elevation " + std::to_string(e) + " degrees) to <" +
             caption + ">";
    }
    set.options.push_back(
        ObservationDescription{label, phrase, caption, std::move(text)});
    set.neighbor_by_label[label] = c.id;
    ++label;
  }
  return set;
}

}  // namespace navcot
