#include "absa/corpus/dataset_io.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "absa/corpus/text.hpp"
#include "absa/util/errors.hpp"
#include "absa/util/fileio.hpp"

namespace absa::corpus {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::vector<Annotation> parse_labels(const json& labels, std::size_t line_no) {
  std::vector<Annotation> annotations;
  if (!labels.is_array()) {
    throw DataError("line " + std::to_string(line_no) + ": 'labels' must be an array");
  }
  for (const json& entry : labels) {
    if (!entry.is_object() || !entry.contains("category") || !entry.contains("polarity")) {
      throw DataError("line " + std::to_string(line_no) +
                      ": label entries need 'category' and 'polarity'");
    }
    const std::string cat_name = entry.at("category").get<std::string>();
    const auto cat = category_index(cat_name);
    if (!cat) {
      throw DataError("line " + std::to_string(line_no) + ": unknown category '" +
                      cat_name + "'");
    }
    const std::string pol_name = entry.at("polarity").get<std::string>();
    const auto pol = polarity_from_name(pol_name);
    if (!pol || *pol == Polarity::kNeutral) {
      throw DataError("line " + std::to_string(line_no) + ": invalid polarity '" +
                      pol_name + "' (expected positive or negative)");
    }
    Annotation a;
    a.category = static_cast<std::uint8_t>(*cat);
    a.polarity = *pol;
    // reject conflicts, collapse duplicates
    bool duplicate = false;
    for (const Annotation& seen : annotations) {
      if (seen.category == a.category) {
        if (seen.polarity != a.polarity) {
          throw DataError("line " + std::to_string(line_no) +
                          ": conflicting annotation for category '" + cat_name + "'");
        }
        duplicate = true;
      }
    }
    if (!duplicate) annotations.push_back(a);
  }
  std::sort(annotations.begin(), annotations.end());
  return annotations;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& path, std::string split,
                     bool require_labels) {
  const std::string content = util::read_file(path);
  Dataset ds;
  ds.split = std::move(split);
  std::unordered_set<std::string> seen_ids;

  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) eol = content.size();
    const std::string_view line(content.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": malformed JSON: " + e.what());
    }
    if (!rec.is_object() || !rec.contains("id") || !rec.at("id").is_string() ||
        !rec.contains("text") || !rec.at("text").is_string()) {
      throw DataError("line " + std::to_string(line_no) +
                      ": record needs string fields 'id' and 'text'");
    }

    Review r;
    r.id = rec.at("id").get<std::string>();
    if (!seen_ids.insert(r.id).second) {
      throw DataError("line " + std::to_string(line_no) + ": duplicate id '" + r.id + "'");
    }
    r.text = normalize_text(rec.at("text").get<std::string>());
    if (r.text.empty()) {
      throw DataError("record '" + r.id + "': text empty after normalization");
    }
    if (rec.contains("labels")) {
      r.annotations = parse_labels(rec.at("labels"), line_no);
    } else if (require_labels) {
      throw DataError("line " + std::to_string(line_no) + ": missing 'labels' field");
    }
    ds.reviews.push_back(std::move(r));
  }
  return ds;
}

std::string serialize_dataset(const Dataset& dataset) {
  std::string out;
  for (const Review& r : dataset.reviews) {
    ordered_json rec;
    rec["id"] = r.id;
    rec["text"] = r.text;
    ordered_json labels = ordered_json::array();
    for (const Annotation& a : r.annotations) {
      labels.push_back({{"category", category_names()[a.category]},
                        {"polarity", polarity_name(a.polarity)}});
    }
    rec["labels"] = std::move(labels);
    out += rec.dump();
    out += '\n';
  }
  return out;
}

void save_dataset(const Dataset& dataset, const std::filesystem::path& path) {
  util::write_file_atomic(path, serialize_dataset(dataset));
}

}  // namespace absa::corpus
