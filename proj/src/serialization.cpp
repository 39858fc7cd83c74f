#include "ptmon/serialization.hpp"

#include <ostream>
#include <stdexcept>

namespace ptmon {

nlohmann::json transformation_to_json(const PartTransformation& t) {
  nlohmann::json j;
  j["blocks_sizes"] = t.partition().sizes();
  nlohmann::json fbar = nlohmann::json::array();
  for (int v : t.block_images()) {
    fbar.push_back(v + 1);
  }
  j["fbar"] = std::move(fbar);
  nlohmann::json blocks = nlohmann::json::array();
  for (int i = 0; i < t.partition().num_blocks(); ++i) {
    nlohmann::json component = nlohmann::json::array();
    for (int v : t.block_map(i)) {
      component.push_back(v + 1);
    }
    blocks.push_back(std::move(component));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

PartTransformation transformation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("blocks_sizes") || !j.contains("fbar")
      || !j.contains("blocks")) {
    throw std::invalid_argument(
        "transformation JSON needs blocks_sizes, fbar and blocks");
  }
  std::vector<int> sizes = j.at("blocks_sizes").get<std::vector<int>>();
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i - 1] < sizes[i]) {
      throw std::invalid_argument(
          "transformation JSON: blocks_sizes must be sorted non-increasingly");
    }
  }
  Partition p(sizes);
  std::vector<int> fbar = j.at("fbar").get<std::vector<int>>();
  std::vector<std::vector<int>> blocks
      = j.at("blocks").get<std::vector<std::vector<int>>>();
  for (int& v : fbar) {
    --v;
  }
  for (auto& component : blocks) {
    for (int& v : component) {
      --v;
    }
  }
  return PartTransformation(p, std::move(fbar), std::move(blocks));
}

void write_json_lines(std::ostream& os, const ElementSet& set) {
  for (const auto& t : set) {
    os << transformation_to_json(t).dump() << '\n';
  }
}

nlohmann::json element_set_to_json(const ElementSet& set) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : set) {
    out.push_back(transformation_to_json(t));
  }
  return out;
}

nlohmann::json word_to_json(const GeneratorWord& word) {
  nlohmann::json j;
  j["word"] = word.letters;
  return j;
}

GeneratorWord word_from_json(const nlohmann::json& j) {
  GeneratorWord out;
  out.letters = j.at("word").get<std::vector<int>>();
  return out;
}

}  // namespace ptmon
