#include <json.hpp>

#include "absa/metrics/metrics.hpp"
#include "absa/util/errors.hpp"
#include "absa/util/fileio.hpp"

namespace absa::metrics {

namespace {
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
}  // namespace

std::vector<PredictionRecord> load_predictions(const std::filesystem::path& path) {
  const std::string content = util::read_file(path);
  std::vector<PredictionRecord> records;

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
    if (!rec.is_object() || !rec.contains("id") || !rec.at("id").is_string()) {
      throw DataError("line " + std::to_string(line_no) + ": record needs string 'id'");
    }

    PredictionRecord r;
    r.id = rec.at("id").get<std::string>();
    if (rec.contains("labels")) {
      const json& labels = rec.at("labels");
      if (!labels.is_array()) {
        throw DataError("line " + std::to_string(line_no) + ": 'labels' must be an array");
      }
      for (const json& entry : labels) {
        if (!entry.is_object() || !entry.contains("category") ||
            !entry.contains("polarity")) {
          throw DataError("line " + std::to_string(line_no) +
                          ": label entries need 'category' and 'polarity'");
        }
        const std::string cat_name = entry.at("category").get<std::string>();
        const auto cat = corpus::category_index(cat_name);
        if (!cat) {
          throw DataError("line " + std::to_string(line_no) + ": unknown category '" +
                          cat_name + "'");
        }
        const std::string pol_name = entry.at("polarity").get<std::string>();
        const auto pol = corpus::polarity_from_name(pol_name);
        if (!pol || *pol == Polarity::kNeutral) {
          throw DataError("line " + std::to_string(line_no) + ": invalid polarity '" +
                          pol_name + "'");
        }
        const Polarity existing = r.set.class_of(*cat);
        if (existing != Polarity::kNeutral && existing != *pol) {
          throw DataError("line " + std::to_string(line_no) +
                          ": conflicting annotation for category '" + cat_name + "'");
        }
        r.set.set(*cat, *pol);
      }
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string serialize_predictions(const std::vector<PredictionRecord>& records) {
  std::string out;
  for (const PredictionRecord& r : records) {
    ordered_json rec;
    rec["id"] = r.id;
    ordered_json labels = ordered_json::array();
    for (const CompositeLabel& l : r.set.labels()) {
      labels.push_back({{"category", corpus::category_names()[l.category]},
                        {"polarity", corpus::polarity_name(l.polarity)}});
    }
    rec["labels"] = std::move(labels);
    out += rec.dump();
    out += '\n';
  }
  return out;
}

void save_predictions(const std::vector<PredictionRecord>& records,
                      const std::filesystem::path& path) {
  util::write_file_atomic(path, serialize_predictions(records));
}

EvalPair align(const std::vector<PredictionRecord>& predicted,
               const std::vector<PredictionRecord>& gold) {
  if (predicted.size() != gold.size()) {
    throw AlignmentError("prediction/gold size mismatch: " +
                         std::to_string(predicted.size()) + " vs " +
                         std::to_string(gold.size()));
  }
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i].id != gold[i].id) {
      throw AlignmentError("id mismatch at record " + std::to_string(i + 1) +
                           ": prediction '" + predicted[i].id + "' vs gold '" +
                           gold[i].id + "'");
    }
  }
  EvalPair pair;
  pair.predicted.reserve(predicted.size());
  pair.gold.reserve(gold.size());
  for (const PredictionRecord& r : predicted) pair.predicted.push_back(r.set);
  for (const PredictionRecord& r : gold) pair.gold.push_back(r.set);
  return pair;
}

}  // namespace absa::metrics
