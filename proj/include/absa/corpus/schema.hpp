#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace absa::corpus {

// Polarity doubles as the class index of each category head:
// neutral means "this category is not discussed in the review".
enum class Polarity : std::uint8_t { kNeutral = 0, kNegative = 1, kPositive = 2 };

inline constexpr std::size_t kNumCategories = 9;
inline constexpr std::size_t kNumClasses = 3;

// Fixed category order; determines head index and class index everywhere.
const std::array<std::string_view, kNumCategories>& category_names();
std::optional<std::size_t> category_index(std::string_view name);

std::string_view polarity_name(Polarity p);
std::optional<Polarity> polarity_from_name(std::string_view name);

struct Annotation {
  std::uint8_t category = 0;                 // index into category_names()
  Polarity polarity = Polarity::kNeutral;    // kNegative or kPositive in gold data

  friend bool operator==(const Annotation&, const Annotation&) = default;
  friend auto operator<=>(const Annotation&, const Annotation&) = default;
};

// 9x3 one-hot target, stored as the class index per category (each row of the
// one-hot matrix sums to 1 by construction).
class LabelMatrix {
 public:
  LabelMatrix() { classes_.fill(Polarity::kNeutral); }

  Polarity class_of(std::size_t category) const { return classes_[category]; }
  void set_class(std::size_t category, Polarity p) { classes_[category] = p; }

  std::array<std::array<std::uint8_t, kNumClasses>, kNumCategories> to_matrix() const;

  friend bool operator==(const LabelMatrix&, const LabelMatrix&) = default;

 private:
  std::array<Polarity, kNumCategories> classes_;
};

// Annotated categories become one-hot at their polarity class; all other
// categories go to neutral. Throws DataError("conflicting annotation") when
// one category carries both polarities.
LabelMatrix transform_labels(const std::vector<Annotation>& annotations);

struct Review {
  std::string id;
  std::string text;  // normalized
  std::vector<Annotation> annotations;  // sorted by category, unique
};

struct Dataset {
  std::string split;
  std::vector<Review> reviews;

  std::size_t size() const { return reviews.size(); }
};

}  // namespace absa::corpus
