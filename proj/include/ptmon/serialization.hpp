#ifndef PTMON_SERIALIZATION_HPP_
#define PTMON_SERIALIZATION_HPP_

#include <iosfwd>

#include <json.hpp>

#include "ptmon/element_set.hpp"
#include "ptmon/generators.hpp"
#include "ptmon/transformation.hpp"

namespace ptmon {

// Wire format for a transformation, all entries 1-indexed:
//   {"blocks_sizes": [n1, ...], "fbar": [...], "blocks": [[...], ...]}
// fbar[i] is the image block of block i and blocks[i] lists the images of
// block i's points inside that block.  blocks_sizes must be sorted
// non-increasingly, matching the canonical block order.
nlohmann::json transformation_to_json(const PartTransformation& t);
PartTransformation transformation_from_json(const nlohmann::json& j);

// One transformation per line.
void write_json_lines(std::ostream& os, const ElementSet& set);

nlohmann::json element_set_to_json(const ElementSet& set);

// {"word": [i1, i2, ...]} with 0-based indices into the generating set's
// canonical order.
nlohmann::json word_to_json(const GeneratorWord& word);
GeneratorWord word_from_json(const nlohmann::json& j);

}  // namespace ptmon

#endif  // PTMON_SERIALIZATION_HPP_
