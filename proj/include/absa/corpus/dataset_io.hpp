#pragma once

#include <filesystem>
#include <string>

#include "absa/corpus/schema.hpp"

namespace absa::corpus {

// UTF-8 JSONL, one record per line:
//   {"id": "...", "text": "...", "labels": [{"category": "...", "polarity": "..."}]}
// Text is normalized on load; records must survive normalization non-empty.
// When require_labels is false a missing "labels" field means "no annotations"
// (prediction inputs).
Dataset load_dataset(const std::filesystem::path& path, std::string split,
                     bool require_labels = true);

std::string serialize_dataset(const Dataset& dataset);
void save_dataset(const Dataset& dataset, const std::filesystem::path& path);

}  // namespace absa::corpus
