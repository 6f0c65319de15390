#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "agdec/code_io.hpp"
#include "agdec/errors.hpp"
#include "oracles.hpp"

using namespace agdec;
using agdec::testing::fixture;
using nlohmann::json;

namespace {

json fixture_json(const std::string& name) { return json::parse(read_text_file(fixture(name))); }

}  // namespace

TEST(CodeModel, FixturesLoadAndValidate) {
  for (const char* name : {"hermitian_f9_26.json", "klein_f8_q1.json", "klein_f8_q2.json", "rs_f64_63.json",
                           "rs_f8_7.json"}) {
    SCOPED_TRACE(name);
    const CodeData code = load_code_file(fixture(name));
    EXPECT_NO_THROW(validate(code));
    const CodeData again = parse_code(serialize_code(code));
    EXPECT_EQ(serialize_code(again), serialize_code(code));
  }
}

TEST(CodeModel, HermitianParameters) {
  const CodeData code = load_code_file(fixture("hermitian_f9_26.json"));
  EXPECT_EQ(code.gamma, 3);
  EXPECT_EQ(code.a, (std::vector<int>{0, 4, 8}));
  EXPECT_EQ(code.b, (std::vector<int>{-15, -14, -10}));
  const auto support = message_support(code);
  EXPECT_EQ(support.size(), 15u);
  EXPECT_EQ(support.front(), -15);
  EXPECT_EQ(std::count(support.begin(), support.end(), -13), 0);
  EXPECT_EQ(phi_of(-13, code).in_semigroup(), false);
  EXPECT_EQ(phi_of(0, code), (PhiIndex{5, 0}));
  EXPECT_EQ(phi_of(-1, code), (PhiIndex{3, 2}));
}

// y_i * ybar_m from the table agrees with the pointwise product
TEST(CodeModel, MulYMatchesPointwiseProduct) {
  const CodeData code = load_code_file(fixture("klein_f8_q1.json"));
  const Field& F = code.field;
  for (int i = 0; i < code.gamma; ++i) {
    for (int m = 0; m < code.gamma; ++m) {
      const auto f = rbar_monomial(code, m, 2);
      const auto vals = eval_rbar(mul_y(i, f, code), code);
      const auto base = eval_rbar(f, code);
      for (int t = 0; t < code.n; ++t) {
        const auto ti = static_cast<std::size_t>(t);
        EXPECT_EQ(vals[ti], F.mul(code.ev_y[static_cast<std::size_t>(i)][ti], base[ti]));
      }
    }
  }
}

TEST(CodeModel, EncodeIsLinear) {
  const CodeData code = load_code_file(fixture("hermitian_f9_26.json"));
  const Field& F = code.field;
  const auto basis = make_encoder_basis(code);
  std::vector<Elem> m1(15, F.zero()), m2(15, F.zero()), sum(15);
  m1[3] = F.from_power(5);
  m2[3] = F.one();
  m2[14] = F.from_power(2);
  for (std::size_t i = 0; i < 15; ++i) sum[i] = F.add(m1[i], m2[i]);
  const auto c1 = encode(m1, code, basis), c2 = encode(m2, code, basis), cs = encode(sum, code, basis);
  for (std::size_t t = 0; t < cs.size(); ++t) EXPECT_EQ(cs[t], F.add(c1[t], c2[t]));
  EXPECT_THROW(encode(std::vector<Elem>(14, F.zero()), code, basis), DimensionError);
}

TEST(CodeModel, RejectsMalformedFiles) {
  EXPECT_THROW(parse_code("{not json"), ParseError);
  EXPECT_THROW(load_code_file(fixture("missing.json")), ParseError);

  auto expect_malformed = [](json doc, const char* what) {
    SCOPED_TRACE(what);
    EXPECT_THROW(parse_code(doc.dump()), Error);
  };
  const json base = fixture_json("hermitian_f9_26.json");
  {
    json d = base;
    d.erase("table");
    EXPECT_THROW(parse_code(d.dump()), ParseError);
  }
  {
    json d = base;
    d["a"][0] = 3;
    expect_malformed(d, "a_0 != 0");
  }
  {
    json d = base;
    d["b"][1] = -13;
    expect_malformed(d, "residue of b_1");
  }
  {
    json d = base;
    d["ev_x"][0] = json::array({1, 3});
    EXPECT_THROW(parse_code(d.dump()), MalformedCode);
  }
  {
    json d = base;
    d["ev_y"][1][7] = d["ev_y"][1][8];
    if (d["ev_y"][1][7] == base["ev_y"][1][7]) d["ev_y"][1][7] = json::array({2, 2});
    EXPECT_THROW(parse_code(d.dump()), MalformedCode);
  }
  {
    json d = base;
    d["field"]["modulus"] = json::array({1, 0, 1});
    EXPECT_THROW(parse_code(d.dump()), MalformedCode);
  }
  {
    json d = base;
    d["ev_x"].erase(0);
    EXPECT_THROW(parse_code(d.dump()), MalformedCode);
  }
}
