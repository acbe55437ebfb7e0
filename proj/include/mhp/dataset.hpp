#pragma once

#include <cstddef>
#include <vector>

#include "mhp/contract.hpp"

namespace mhp {

enum class Recorded { strict, indifferent };

// One observed choice: `first` chosen over (strict) or judged equal to
// (indifferent) `second`.
struct ChoiceRecord {
  Contract first;
  Contract second;
  Recorded verdict;
};

struct ChoiceDataset {
  std::vector<ChoiceRecord> records;
};

struct DatasetReport {
  bool consistent = true;
  // Each cycle lists record indices forming a preference cycle that contains
  // at least one strict record (weak-order violation); one shortest cycle per
  // offending strict record, duplicates removed.
  std::vector<std::vector<std::size_t>> cycles;
  // Records ranking a lower sure prize at least as high as a higher one.
  std::vector<std::size_t> monotonicity_violations;
  // Strict records `first > second` where the data show second(s) >= first(s)
  // in every state.
  std::vector<std::size_t> dominance_violations;
};

// Throws InputError if records mix output spaces.
DatasetReport dataset_consistency(const ChoiceDataset& d);

}  // namespace mhp
