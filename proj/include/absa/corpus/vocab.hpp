#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absa/corpus/schema.hpp"
#include "absa/util/sha256.hpp"

namespace absa::corpus {

// Token -> contiguous id map with reserved PAD=0 and UNK=1. Ids are assigned
// in descending corpus frequency, ties broken lexicographically.
class Vocabulary {
 public:
  static constexpr std::uint32_t kPadId = 0;
  static constexpr std::uint32_t kUnkId = 1;

  static Vocabulary build(const Dataset& corpus, std::uint32_t min_count);

  std::uint32_t id_or_unk(std::string_view token) const;
  const std::string& token(std::uint32_t id) const { return tokens_.at(id); }
  std::size_t size() const { return tokens_.size(); }
  std::uint32_t min_count() const { return min_count_; }

  // One "token<TAB>id" line per entry, in id order.
  std::string serialize() const;
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path);

  util::Sha256Digest content_hash() const;

  // OOV tokens map to UNK; short sequences are PAD-padded on the right,
  // long ones truncated to the first max_len tokens.
  std::vector<std::uint32_t> encode(const std::vector<std::string>& tokens,
                                    std::size_t max_len) const;

 private:
  Vocabulary() = default;
  void add(std::string token);

  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> tokens_;
  std::uint32_t min_count_ = 1;
};

}  // namespace absa::corpus
