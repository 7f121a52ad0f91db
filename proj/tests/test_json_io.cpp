#include "flexcat/errors.hpp"
#include "flexcat/json_io.hpp"
#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace th;
using nlohmann::json;
namespace jio = flexcat::json_io;

namespace {
Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_argument;
}
}  // namespace

TEST(Json, Rational) {
  EXPECT_EQ(jio::to_json(q("2/4")), "1/2");
  EXPECT_EQ(jio::rational_from_json("0.29"), q("29/100"));
  EXPECT_EQ(jio::rational_from_json(3), q("3"));
  EXPECT_EQ(code_of([] { jio::rational_from_json(0.5); }), Errc::schema_violation);
  EXPECT_EQ(code_of([] { jio::rational_from_json(json::array()); }), Errc::schema_violation);
}

TEST(Json, MultisetRoundTrip) {
  for (const GMultiset& m : {Z({{0, 4}, {1, 5}, {2, 1}}), omega_a(),
                             MS(GroupKind::zvec, 2, {{z2(-1, 2), 3}, {z2(0, -3), 1}}),
                             MS(GroupKind::rat, 1, {{GroupElement::rat(q("-1/3")), 2}})}) {
    const json j = jio::to_json(m);
    EXPECT_EQ(jio::multiset_from_json(j), m);
    EXPECT_EQ(jio::multiset_from_json(json::parse(j.dump())), m);
  }
}

TEST(Json, MultisetWireFormat) {
  const json j = jio::to_json(omega_a());
  EXPECT_EQ(j.at("group"), "magphase");
  EXPECT_EQ(j.at("elems")[1].at("e").at("phase"), "1/3");
  EXPECT_EQ(j.at("elems")[1].at("m"), "2");
  EXPECT_EQ(jio::to_json(Z({{3, 1}})).at("elems")[0].at("e"), json::array({"3"}));
}

TEST(Json, MultisetSchemaErrors) {
  const char* bad[] = {
      R"({"elems":[]})",
      R"({"group":"zvec","elems":[]})",
      R"({"group":"zvec","elems":[{"e":["1"],"m":"0"}]})",
      R"({"group":"zvec","elems":[{"e":["1"],"m":"-2"}]})",
      R"({"group":"zvec","elems":[{"e":["1","2"],"m":"1"}]})",
      R"({"group":"magphase","elems":[{"e":{"mag":"0","phase":"0"},"m":"1"}]})",
      R"({"group":"magphase","elems":[{"e":{"mag":"1","phase":"3/2"},"m":"1"}]})",
      R"({"group":"lattice","elems":[{"e":["1"],"m":"1"}]})",
      R"({"group":"zvec","arity":0,"elems":[{"e":[],"m":"1"}]})",
      R"([1,2])",
  };
  for (const char* b : bad) EXPECT_THROW(jio::multiset_from_json(json::parse(b)), Error) << b;
}

TEST(Json, Polynomial) {
  const IntPolynomial p = construct_negativity_n(4);
  EXPECT_EQ(jio::polynomial_from_json(jio::to_json(p)), p);
  const json j = json::parse(R"({"arity":2,"terms":[{"exp":[1,0],"coeff":"3"},{"exp":[1,0],"coeff":-3},{"exp":[0,2],"coeff":"5"}]})");
  const IntPolynomial r = jio::polynomial_from_json(j);
  EXPECT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(code_of([] { jio::polynomial_from_json(json::parse(R"({"arity":1,"terms":[{"exp":[-1],"coeff":"1"}]})")); }),
            Errc::schema_violation);
  EXPECT_EQ(code_of([] { jio::polynomial_from_json(json::parse(R"({"arity":1,"terms":[{"exp":[1,2],"coeff":"1"}]})")); }),
            Errc::schema_violation);
  EXPECT_EQ(code_of([] { jio::polynomial_from_json(json::parse(R"({"arity":1,"terms":[{"exp":[1],"coeff":"x"}]})")); }),
            Errc::parse_error);
}

TEST(Json, ProbVector) {
  const ProbVector v = jio::prob_vector_from_json(json::parse(R"(["0.5","0.29","21/100","0"])"));
  EXPECT_EQ(v, locc_b());
  EXPECT_EQ(jio::to_json(v), json::parse(R"(["1/2","29/100","21/100","0"])"));
  EXPECT_EQ(code_of([] { jio::prob_vector_from_json(json::parse(R"(["1/2"])")); }), Errc::schema_violation);
}

TEST(Json, StatesAndCycles) {
  const TTInstance tt = kPMprop;
  CatalystCycle c;
  c.catalysts = {omega_a(), omega_b()};
  c.discards = {State(omega_a()), std::nullopt};
  const CatalystCycle back = jio::cycle_from_json(jio::to_json(c), tt);
  ASSERT_EQ(back.length(), 2u);
  EXPECT_EQ(std::get<GMultiset>(back.catalysts[1]), omega_b());
  EXPECT_TRUE(back.discards[0]);
  EXPECT_FALSE(back.discards[1]);
  EXPECT_EQ(code_of([] { jio::state_from_json(jio::to_json(Z({{0, 1}})), kPMprop); }), Errc::schema_violation);
  EXPECT_EQ(code_of([] { jio::state_from_json(jio::to_json(locc_a()), kZeq); }), Errc::schema_violation);
}

TEST(Json, MajorizationCheck) {
  const json j = jio::to_json(check_majorization(V({"4/10", "4/10", "1/10", "1/10"}), locc_b()));
  EXPECT_EQ(j, json::parse(R"({"majorizes":false,"first_violation":{"k":2,"lhs":"4/5","rhs":"79/100"}})"));
}

TEST(Json, Checkpoint) {
  const IntPolynomial p = P({1, 1, 1, -1, 1, -1, 1, 1, 1}), qq = P({1, 1, 1, 1});
  PositivityScan s(p, qq);
  for (int i = 0; i < 4; ++i) s.step();
  PositivityScan r = jio::checkpoint_from_json(json::parse(jio::checkpoint_to_json(s).dump()));
  EXPECT_EQ(r.next_n(), 4u);
  EXPECT_EQ(r.step(), s.step());
  json broken = jio::checkpoint_to_json(s);
  broken["next_n"] = 2;
  EXPECT_THROW(jio::checkpoint_from_json(broken), Error);
}

TEST(Json, FlexReport) {
  const std::vector<State> s{omega_a(), omega_b()};
  const json j = jio::to_json(flex_cycle_search(kPMprop, omega_a(), omega_b(), s, false));
  EXPECT_EQ(j.at("edges"), json::parse(R"([["absent","present"],["present","absent"]])"));
  EXPECT_EQ(j.at("cycle"), json::array({0, 1}));
  EXPECT_EQ(j.at("every_node_has_successor"), true);
}
