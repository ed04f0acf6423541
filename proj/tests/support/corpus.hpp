#pragma once

#include <string>
#include <vector>

#include "khtight/braid.hpp"

namespace khtight::testing {

struct Family {
  std::string name;
  std::string templ;
  int r_min = 0;
  int r_max = 0;
};

Family family_e125();
Family family_e141();
Family family_e130();
Family family_nonexample();

BraidWord member(const Family& f, int r);

/// Braids used by the corpus-wide property checks, at most 12 crossings.
std::vector<BraidWord> corpus();

/// Corpus words whose closure is a knot.
std::vector<BraidWord> knot_corpus();

}  // namespace khtight::testing
