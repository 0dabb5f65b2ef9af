#pragma once

#include <memory>
#include <random>
#include <string>

#include "dgd/group.hpp"

namespace testing {

inline dgd::GroupPtr make(const std::string& spec) {
  return std::make_shared<const dgd::FiniteGroup>(dgd::build_group(spec));
}

inline std::mt19937_64 rng() { return std::mt19937_64(dgd::kDefaultSeed); }

// Class index whose class has the given size; -1 if none or ambiguous.
inline int class_with_size(const dgd::ConjugacyData& cd, int size) {
  int found = -1;
  for (int c = 0; c < cd.num_classes(); ++c)
    if (cd.class_size(c) == size) {
      if (found >= 0) return -1;
      found = c;
    }
  return found;
}

}  // namespace testing
