#include <gtest/gtest.h>

#include "mapenum/errors.hpp"
#include "mapenum/substructure_json.hpp"

using namespace mapenum;
using nlohmann::json;

TEST(GammaJson, RoundTrip) {
  const SubstructureGamma g(3, {std::vector<int>{1, 0, 2}, std::vector<int>{1, 1, 1}}, {ColumnSet{2}, ColumnSet{0, 2}},
                            {{1, 0}});
  const json j = gamma_to_json(g);
  EXPECT_EQ(j.dump(), R"({"K":3,"R1":[2],"R2":[0,2],"phi":{"1":0},"w":[[1,0,2],[1,1,1]]})");
  EXPECT_EQ(gamma_from_json(j), g);
}

TEST(GammaJson, PhiIsOptional) {
  const json j = json::parse(R"({"K":1,"w":[[2],[2]],"R1":[0],"R2":[0]})");
  EXPECT_TRUE(gamma_from_json(j).arrows().empty());
}

TEST(GammaJson, RejectsMalformedInput) {
  EXPECT_THROW(gamma_from_json(json::parse("[]")), PreconditionError);
  EXPECT_THROW(gamma_from_json(json::parse(R"({"K":1,"w":[[1]],"R1":[0],"R2":[0]})")), PreconditionError);
  EXPECT_THROW(gamma_from_json(json::parse(R"({"K":1,"w":[[1],[1]],"R1":[0],"R2":[0],"phi":{"x":0}})")),
               PreconditionError);
  EXPECT_THROW(gamma_from_json(json::parse(R"({"K":"1","w":[[1],[1]],"R1":[0],"R2":[0]})")), PreconditionError);
  EXPECT_THROW(gamma_from_json(json::parse(R"({"K":2,"w":[[1,0],[0,1]],"R1":[5],"R2":[0]})")), PreconditionError);
}

TEST(OmegaJson, RoundTrip) {
  const SubstructureOmega o(3, 1, 2, {2, 0, 1});
  const json j = omega_to_json(o);
  EXPECT_EQ(j.dump(), R"({"K":3,"R1":1,"R2":2,"w":[2,0,1]})");
  EXPECT_EQ(omega_from_json(j), o);
  EXPECT_THROW(omega_from_json(json::parse(R"({"K":3,"R1":1,"w":[1,1,1]})")), PreconditionError);
}
