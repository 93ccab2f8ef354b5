#include "absa/metrics/metrics.hpp"

#include "absa/util/errors.hpp"

namespace absa::metrics {

std::size_t label_index(const CompositeLabel& l) {
  return l.category * 2 + (l.polarity == Polarity::kPositive ? 1 : 0);
}

CompositeLabel label_at(std::size_t index) {
  CompositeLabel l;
  l.category = static_cast<std::uint8_t>(index / 2);
  l.polarity = (index % 2 == 1) ? Polarity::kPositive : Polarity::kNegative;
  return l;
}

std::string label_name(const CompositeLabel& l) {
  return std::string(corpus::category_names()[l.category]) + "/" +
         std::string(corpus::polarity_name(l.polarity));
}

PredictionSet PredictionSet::from_classes(
    const std::array<Polarity, kNumCategories>& classes) {
  PredictionSet s;
  s.classes_ = classes;
  return s;
}

std::size_t PredictionSet::size() const {
  std::size_t n = 0;
  for (Polarity p : classes_) n += (p != Polarity::kNeutral);
  return n;
}

std::vector<CompositeLabel> PredictionSet::labels() const {
  std::vector<CompositeLabel> out;
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    if (classes_[c] != Polarity::kNeutral) {
      out.push_back({static_cast<std::uint8_t>(c), classes_[c]});
    }
  }
  return out;
}

PredictionSet decode_to_set(const corpus::LabelMatrix& matrix) {
  PredictionSet s;
  for (std::size_t c = 0; c < kNumCategories; ++c) s.set(c, matrix.class_of(c));
  return s;
}

PredictionSet decode_to_set(const std::array<Polarity, kNumCategories>& classes) {
  return PredictionSet::from_classes(classes);
}

std::vector<corpus::Annotation> to_annotations(const PredictionSet& set) {
  std::vector<corpus::Annotation> out;
  for (const CompositeLabel& l : set.labels()) {
    out.push_back({l.category, l.polarity});
  }
  return out;
}

namespace {

struct SetCounts {
  std::size_t intersection = 0;
  std::size_t set_union = 0;
  std::size_t sym_diff = 0;
};

SetCounts count_sets(const PredictionSet& a, const PredictionSet& b) {
  SetCounts counts;
  for (std::size_t c = 0; c < kNumCategories; ++c) {
    const Polarity pa = a.class_of(c);
    const Polarity pb = b.class_of(c);
    const bool a_in = pa != Polarity::kNeutral;
    const bool b_in = pb != Polarity::kNeutral;
    const bool match = a_in && b_in && pa == pb;
    counts.intersection += match;
    counts.set_union += std::size_t(a_in) + std::size_t(b_in) - std::size_t(match);
    counts.sym_diff += std::size_t(a_in) + std::size_t(b_in) - 2 * std::size_t(match);
  }
  return counts;
}

void require_nonempty(const EvalPair& pairs) {
  if (pairs.predicted.size() != pairs.gold.size()) {
    throw DataError("evaluation pair length mismatch");
  }
  if (pairs.predicted.empty()) throw DataError("cannot evaluate zero samples");
}

}  // namespace

double jaccard_index(const EvalPair& pairs) {
  require_nonempty(pairs);
  double sum = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const SetCounts c = count_sets(pairs.predicted[i], pairs.gold[i]);
    // Empty vs empty is a fully correct prediction.
    sum += c.set_union == 0 ? 1.0
                            : static_cast<double>(c.intersection) /
                                  static_cast<double>(c.set_union);
  }
  return sum / static_cast<double>(pairs.size());
}

double hamming_loss(const EvalPair& pairs) {
  require_nonempty(pairs);
  std::uint64_t total_diff = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    total_diff += count_sets(pairs.predicted[i], pairs.gold[i]).sym_diff;
  }
  return static_cast<double>(total_diff) /
         (static_cast<double>(pairs.size()) * static_cast<double>(kNumLabels));
}

std::vector<PerLabelStats> per_label_report(const EvalPair& pairs) {
  require_nonempty(pairs);
  std::vector<PerLabelStats> stats(kNumLabels);
  for (std::size_t l = 0; l < kNumLabels; ++l) stats[l].label = label_at(l);

  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t c = 0; c < kNumCategories; ++c) {
      const Polarity pp = pairs.predicted[i].class_of(c);
      const Polarity pg = pairs.gold[i].class_of(c);
      if (pg != Polarity::kNeutral) {
        PerLabelStats& s = stats[label_index({static_cast<std::uint8_t>(c), pg})];
        ++s.support;
        if (pp == pg) {
          ++s.tp;
        } else {
          ++s.fn;
        }
      }
      if (pp != Polarity::kNeutral && pp != pg) {
        ++stats[label_index({static_cast<std::uint8_t>(c), pp})].fp;
      }
    }
  }

  for (PerLabelStats& s : stats) {
    if (s.tp + s.fp > 0) {
      s.precision = static_cast<double>(s.tp) / static_cast<double>(s.tp + s.fp);
      s.precision_defined = true;
    }
    if (s.tp + s.fn > 0) {
      s.recall = static_cast<double>(s.tp) / static_cast<double>(s.tp + s.fn);
      s.recall_defined = true;
    }
    if (s.precision + s.recall > 0.0 && s.precision_defined && s.recall_defined) {
      s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
      s.f1_defined = true;
    }
  }
  return stats;
}

}  // namespace absa::metrics
