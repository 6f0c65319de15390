#include <gtest/gtest.h>

#include <filesystem>

#include "agdec/code_io.hpp"
#include "agdec/precompute.hpp"
#include "oracles.hpp"
#include "worked_examples.hpp"

using namespace agdec;
using agdec::testing::fixture;
using agdec::testing::poly_of;

namespace {

const PrecomputedCode& cached(const std::string& name) {
  static std::map<std::string, PrecomputedCode> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, precompute(load_code_file(fixture(name)))).first;
  return it->second;
}

// x^hi - x^lo (signs collapse in characteristic 2)
Poly binom(const Field& F, int hi, int lo) { return poly_of(F, {{F.one(), hi}, {F.from_int(-1), lo}}); }

void expect_diagonal_eta(const PrecomputedCode& pc, const std::vector<std::pair<int, int>>& expected) {
  const Field& F = pc.code.field;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    for (std::size_t j = 0; j < expected.size(); ++j) {
      SCOPED_TRACE(::testing::Message() << "eta_" << i << " column " << j);
      if (i == j) {
        EXPECT_EQ(pc.eta[i].c[j], binom(F, expected[i].first, expected[i].second));
      } else {
        EXPECT_TRUE(pc.eta[i].c[j].is_zero());
      }
    }
  }
}

std::map<int, int> nu_map(std::initializer_list<std::pair<const int, int>> l) { return std::map<int, int>(l); }

}  // namespace

TEST(Precompute, EtaHermitian) { expect_diagonal_eta(cached("hermitian_f9_26.json"), {{8, 0}, {9, 1}, {9, 1}}); }

TEST(Precompute, EtaKlein) {
  expect_diagonal_eta(cached("klein_f8_q1.json"), {{7, 0}, {7, 0}, {8, 1}});
  expect_diagonal_eta(cached("klein_f8_q2.json"), {{8, 1}, {7, 0}, {7, 0}});
}

TEST(Precompute, EtaVanishesAndLeadDegreesSumToN) {
  for (const char* name : {"hermitian_f9_26.json", "klein_f8_q1.json", "klein_f8_q2.json", "rs_f64_63.json",
                           "rs_f8_7.json"}) {
    SCOPED_TRACE(name);
    const auto& pc = cached(name);
    int sum = 0;
    for (std::size_t i = 0; i < pc.eta.size(); ++i) {
      const auto vals = eval_rbar(pc.eta[i], pc.code);
      for (auto v : vals) EXPECT_TRUE(v.is_zero());
      sum += pc.eta_lead_xdeg[i];
      EXPECT_LE(pc.eta[i].c[i].deg(), pc.bounds.n_eta);
    }
    EXPECT_EQ(sum, pc.n());
    EXPECT_EQ(pc.footprint.size(), static_cast<std::size_t>(pc.n()));
  }
}

TEST(Precompute, LagrangeBasisIsDual) {
  for (const char* name : {"hermitian_f9_26.json", "klein_f8_q1.json", "rs_f8_7.json"}) {
    SCOPED_TRACE(name);
    const auto& pc = cached(name);
    const Field& F = pc.code.field;
    for (int i = 0; i < pc.n(); ++i) {
      const auto vals = eval_rbar(pc.lagrange[static_cast<std::size_t>(i)], pc.code);
      for (int t = 0; t < pc.n(); ++t) EXPECT_EQ(vals[static_cast<std::size_t>(t)], t == i ? F.one() : F.zero());
    }
  }
}

TEST(Precompute, LagrangeHermitianFirstPoint) {
  const auto& pc = cached("hermitian_f9_26.json");
  const Field& F = pc.code.field;
  const auto& h1 = pc.lagrange[0];
  EXPECT_TRUE(h1.c[0].is_zero());
  EXPECT_EQ(h1.c[1], poly_of(F, {{F.from_power(6), 8}, {F.from_power(2), 0}}));
  EXPECT_EQ(h1.c[2], poly_of(F, {{F.from_int(-1), 8}, {F.one(), 0}}));
  EXPECT_TRUE(pc.warnings.empty());
}

TEST(Precompute, HvOfWorkedExample) {
  const auto& pc = cached("hermitian_f9_26.json");
  const Field& F = pc.code.field;
  const auto hv = compute_hv(agdec::testing::hermitian_received(F), pc);
  const auto expected = agdec::testing::hermitian_hv(F);
  for (int j = 0; j < 3; ++j) EXPECT_EQ(hv.c[static_cast<std::size_t>(j)], expected.c[static_cast<std::size_t>(j)]) << j;
  EXPECT_EQ(rbar_delta(hv, pc.code), 11);
}

TEST(Precompute, NuTables) {
  EXPECT_EQ(cached("hermitian_f9_26.json").nu_table,
            nu_map({{0, 9}, {-1, 10}, {-2, 11}, {-3, 12}, {-4, 13}, {-5, 14}, {-6, 15}, {-7, 16}, {-8, 17},
                    {-9, 18}, {-10, 19}, {-11, 20}, {-12, 21}, {-14, 23}, {-15, 24}}));
  EXPECT_EQ(cached("klein_f8_q1.json").nu_table,
            nu_map({{0, 5}, {-1, 5}, {-2, 6}, {-3, 7}, {-4, 8}, {-5, 9}, {-6, 10}, {-7, 11}, {-8, 12}, {-9, 13},
                    {-10, 14}, {-11, 15}, {-12, 16}, {-13, 17}, {-14, 18}, {-17, 21}}));
  EXPECT_EQ(cached("klein_f8_q2.json").nu_table,
            nu_map({{0, 4}, {-1, 5}, {-2, 6}, {-3, 7}, {-4, 8}, {-5, 9}, {-6, 10}, {-7, 11}, {-8, 12}, {-9, 13},
                    {-10, 14}, {-11, 15}, {-12, 16}, {-13, 17}, {-14, 18}, {-16, 20}}));
  EXPECT_EQ(cached("hermitian_f9_26.json").d_lo, 9);
  EXPECT_EQ(cached("klein_f8_q1.json").d_lo, 5);
  EXPECT_EQ(cached("klein_f8_q2.json").d_lo, 4);
  EXPECT_EQ(cached("rs_f64_63.json").d_lo, 25);
  EXPECT_EQ(cached("rs_f8_7.json").d_lo, 5);
}

TEST(Precompute, ComplexityBounds) {
  const auto h = cached("hermitian_f9_26.json").bounds;
  EXPECT_EQ(h.n_h, 10);
  EXPECT_EQ(h.n_eta, 9);
  EXPECT_EQ(h.n_deg, 13);
  EXPECT_EQ(h.n_iter, 32);
  const auto rs = cached("rs_f64_63.json").bounds;
  EXPECT_EQ(rs.n_h, 62);
  EXPECT_EQ(rs.n_eta, 63);
  EXPECT_EQ(rs.n_deg, 63);
  EXPECT_EQ(rs.n_iter, 63);
}

TEST(Precompute, CacheRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "agdec_cache_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "hermitian.json";
  std::filesystem::copy_file(fixture("hermitian_f9_26.json"), file, std::filesystem::copy_options::overwrite_existing);
  std::filesystem::remove(cache_path_for(file));

  const auto first = load_precomputed(file, true);
  ASSERT_TRUE(std::filesystem::exists(cache_path_for(file)));
  const auto second = load_precomputed(file, true);
  EXPECT_EQ(second.nu_table, first.nu_table);
  EXPECT_EQ(second.d_lo, first.d_lo);
  EXPECT_EQ(second.footprint.size(), first.footprint.size());
  for (std::size_t i = 0; i < first.lagrange.size(); ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(second.lagrange[i].c[j], first.lagrange[i].c[j]);
  }

  const auto text = read_text_file(fixture("hermitian_f9_26.json"));
  const auto doc = serialize_precomputed(first, content_hash(text));
  EXPECT_FALSE(parse_precomputed(doc, load_code_file(file), content_hash(text) + 1).has_value());
  std::filesystem::remove_all(dir);
}
