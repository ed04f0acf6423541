#include "doctest.h"

#include "corpus.hpp"
#include "json.hpp"
#include "khtight/json_io.hpp"

using namespace khtight;
using nlohmann::json;

TEST_CASE("verdict reports round trip") {
  for (auto w : {testing::member(testing::family_e125(), 5), testing::member(testing::family_e125(), 4),
                 testing::member(testing::family_nonexample(), 3)}) {
    auto r = tightness_verdict(w);
    auto back = verdict_from_json(to_json(r));
    CHECK(to_json(back) == to_json(r));
    CHECK(back.braid == r.braid);
    CHECK(back.kh == r.kh);
    CHECK(back.s == r.s);
    CHECK(back.psi_grading == r.psi_grading);
    CHECK(back.verdict == r.verdict);
  }
}

TEST_CASE("surgery diagrams round trip") {
  auto s = braid_to_surgery(testing::member(testing::family_e141(), 4));
  auto back = surgery_from_json(to_json(s, 2));
  CHECK(back.components == s.components);
  CHECK(back.linking == s.linking);
  CHECK_THROWS_AS(surgery_from_json("{\"components\": []"), MathError);
  CHECK_THROWS_AS(surgery_from_json("{\"components\":[{\"tb\":-1,\"rot\":0,\"coeff\":-1}],\"linking\":[[5]]}"),
                  MathError);
}

TEST_CASE("gram matrices from text") {
  auto a = gram_from_text("[[-2,1],[1,-2]]");
  auto b = gram_from_text("-2,1\n1,-2\n");
  auto c = gram_from_text("{\"gram\": [[-2,1],[1,-2]], \"labels\": [\"x\",\"y\"]}");
  CHECK(a.gram == b.gram);
  CHECK(a.gram == c.gram);
  CHECK(c.labels == std::vector<std::string>{"x", "y"});
  CHECK(a.labels == std::vector<std::string>{"v1", "v2"});
  CHECK_THROWS_AS(gram_from_text(""), MathError);
  CHECK_THROWS_AS(gram_from_text("-2,x"), MathError);
  CHECK_THROWS_AS(gram_from_text("[[2]]"), MathError);
}

TEST_CASE("writers emit valid JSON") {
  auto w = testing::member(testing::family_e125(), 5);
  auto emb = enumerate_embeddings(plumbing_e125(), 8);
  auto comp = orthogonal_complement(emb[0]);
  std::vector<std::string> texts{
      to_json(qa_verify(w)),
      to_json(d3(braid_to_surgery(w))),
      to_json(plumbing_e125()),
      to_json(emb),
      to_json(comp),
      to_json(parity_obstruction(comp.lattice, 11)),
      to_json(pages(parse_bifiltered("g x A=0 I=0\ng y A=-1 I=1\nd x -> y\n"), Filtration::I, 2)),
  };
  for (const auto& t : texts) CHECK(json::accept(t));
  auto d = json::parse(to_json(d3(braid_to_surgery(w))));
  CHECK(d["d3"] == "-1/2");
  auto p = json::parse(to_json(parity_obstruction(comp.lattice, 11)));
  CHECK(p["obstructed"] == true);
}
