#include "corpus.hpp"

namespace khtight::testing {

Family family_e125() { return {"e125", "-1*{r},2,1,1,1,2", 0, 8}; }
Family family_e141() { return {"e141", "-1*{r},2,1,1,1,2,2", 0, 6}; }
Family family_e130() { return {"e130", "-1*{r},2,1,1,2,2,3,-2,3", 0, 5}; }
Family family_nonexample() { return {"nonexample", "-1*{r},2,1,1,2", 0, 5}; }

BraidWord member(const Family& f, int r) { return parse_braid(expand_template(f.templ, r)); }

std::vector<BraidWord> corpus() {
  std::vector<BraidWord> words;
  for (const auto& f : {family_e125(), family_e141(), family_e130(), family_nonexample()})
    for (int r = f.r_min; r <= f.r_max; ++r) {
      auto w = member(f, r);
      if (w.length() <= 12) words.push_back(w);
    }
  for (const char* extra : {"1,1,1", "-1,-1,-1", "1,-2,1,-2", "1,1,1,1,1", "1,2,1,2,1,2,1,2", "1,-2,3,-2,1,3"})
    words.push_back(parse_braid(extra));
  words.push_back(parse_braid("", 1));
  words.push_back(parse_braid("1", 2));
  return words;
}

std::vector<BraidWord> knot_corpus() {
  std::vector<BraidWord> knots;
  for (const auto& w : corpus())
    if (closure_diagram(w).components == 1) knots.push_back(w);
  return knots;
}

}  // namespace khtight::testing
