#include "absa/corpus/vocab.hpp"

#include <algorithm>
#include <map>

#include "absa/corpus/text.hpp"
#include "absa/util/errors.hpp"
#include "absa/util/fileio.hpp"

namespace absa::corpus {

void Vocabulary::add(std::string token) {
  const auto id = static_cast<std::uint32_t>(tokens_.size());
  if (ids_.emplace(token, id).second) {
    tokens_.push_back(std::move(token));
  }
}

Vocabulary Vocabulary::build(const Dataset& corpus, std::uint32_t min_count) {
  if (corpus.reviews.empty()) throw DataError("empty corpus");
  if (min_count < 1) throw ConfigError("min_count must be >= 1");

  std::unordered_map<std::string, std::uint64_t> freq;
  for (const Review& r : corpus.reviews) {
    for (std::string& tok : tokenize(r.text)) {
      ++freq[std::move(tok)];
    }
  }

  std::vector<std::pair<std::string, std::uint64_t>> kept;
  kept.reserve(freq.size());
  for (auto& [tok, n] : freq) {
    if (n >= min_count) kept.emplace_back(tok, n);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary v;
  v.min_count_ = min_count;
  v.add("<pad>");
  v.add("<unk>");
  for (auto& [tok, n] : kept) v.add(std::move(tok));
  return v;
}

std::uint32_t Vocabulary::id_or_unk(std::string_view token) const {
  const auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnkId : it->second;
}

std::string Vocabulary::serialize() const {
  std::string out;
  for (std::size_t id = 0; id < tokens_.size(); ++id) {
    out += tokens_[id];
    out += '\t';
    out += std::to_string(id);
    out += '\n';
  }
  return out;
}

void Vocabulary::save(const std::filesystem::path& path) const {
  util::write_file_atomic(path, serialize());
}

Vocabulary Vocabulary::load(const std::filesystem::path& path) {
  const std::string content = util::read_file(path);
  Vocabulary v;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string::npos) eol = content.size();
    const std::string_view line(content.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) {
      throw DataError("vocabulary line " + std::to_string(line_no) + ": missing tab");
    }
    const std::string tok(line.substr(0, tab));
    const std::string id_str(line.substr(tab + 1));
    std::uint32_t id = 0;
    try {
      id = static_cast<std::uint32_t>(std::stoul(id_str));
    } catch (const std::exception&) {
      throw DataError("vocabulary line " + std::to_string(line_no) + ": bad id '" +
                      id_str + "'");
    }
    if (id != v.tokens_.size()) {
      throw DataError("vocabulary line " + std::to_string(line_no) +
                      ": ids must be contiguous from 0");
    }
    v.add(tok);
  }
  if (v.size() < 2 || v.tokens_[kPadId] != "<pad>" || v.tokens_[kUnkId] != "<unk>") {
    throw DataError("vocabulary file missing reserved <pad>/<unk> entries");
  }
  return v;
}

util::Sha256Digest Vocabulary::content_hash() const {
  return util::sha256(serialize());
}

std::vector<std::uint32_t> Vocabulary::encode(const std::vector<std::string>& tokens,
                                              std::size_t max_len) const {
  std::vector<std::uint32_t> ids(max_len, kPadId);
  const std::size_t n = std::min(tokens.size(), max_len);
  for (std::size_t i = 0; i < n; ++i) ids[i] = id_or_unk(tokens[i]);
  return ids;
}

}  // namespace absa::corpus
