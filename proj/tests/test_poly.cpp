#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracle.hpp"
#include "zdiv/poly.hpp"
#include "zdiv/ring_spec.hpp"
#include "zdiv/zero_divisor_graph.hpp"

using namespace zdiv;

namespace {

Poly zn_poly(const FiniteRing& r, const std::vector<unsigned>& c) {
  return Poly(r, std::vector<Index>(c.begin(), c.end()));
}

FiniteRing zn(unsigned n) {
  const FiniteRing r = parse_ring("Z" + std::to_string(n));
  for (Index i = 0; i < r.order(); ++i) EXPECT_EQ(r.render(i), std::to_string(i));
  return r;
}

unsigned coefficient_gcd(const std::vector<unsigned>& c, unsigned n) {
  unsigned g = n;
  for (unsigned x : c) g = std::gcd(g, x);
  return g;
}

}  // namespace

TEST(PolyArithmetic, Examples) {
  const FiniteRing z4 = zn(4);
  const Poly f = parse_poly(z4, "2x+2");
  EXPECT_TRUE((f * f).is_zero());
  const FiniteRing z8 = zn(8);
  EXPECT_EQ(scale(2, parse_poly(z8, "x+3")), parse_poly(z8, "2x+6"));
  const Poly g = parse_poly(z8, "5x^3+x");
  EXPECT_EQ(g + Poly(z8, {}), g);
  EXPECT_EQ(g.degree(), 3);
  EXPECT_EQ(Poly(z8, {}).degree(), -1);
  EXPECT_EQ(Poly(z8, {1, 0, 0}).degree(), 0);
}

TEST(PolyArithmetic, ProductMatchesIntegerConvolution) {
  for (unsigned n : {4u, 6u, 8u, 9u}) {
    const FiniteRing r = zn(n);
    const auto polys = oracle::all_polys(n, 1);
    for (const auto& a : polys)
      for (const auto& b : polys) {
        const Poly p = zn_poly(r, a) * zn_poly(r, b);
        EXPECT_EQ(p, zn_poly(r, oracle::poly_mul_mod(a, b, n)));
      }
  }
}

TEST(PolyText, RoundTrip) {
  for (const char* text : {"Z8", "Z2xZ4", "GF(2)[x]/(x^2)"}) {
    const FiniteRing r = parse_ring(text);
    for (std::uint64_t code = 0; code < r.order() * r.order() * r.order(); ++code) {
      const Poly f = decode(r, code, 2);
      EXPECT_EQ(parse_poly(r, render(f)), f) << render(f);
      EXPECT_EQ(encode(f), code);
    }
  }
  EXPECT_EQ(render(parse_poly(zn(8), "2x^2+3x+1")), "2x^2+3x+1");
  EXPECT_THROW(parse_poly(zn(8), "2x^^2"), ParseError);
}

TEST(McCoy, Examples) {
  const FiniteRing z4 = zn(4);
  EXPECT_EQ(mccoy_witness(parse_poly(z4, "2x+2")), Index{2});
  EXPECT_FALSE(mccoy_witness(parse_poly(z4, "x+1")).has_value());
  EXPECT_EQ(mccoy_witness(parse_poly(zn(6), "3x")), Index{2});
  EXPECT_THROW(mccoy_witness(Poly(z4, {})), Error);
}

TEST(McCoy, WitnessIsSmallestAnnihilatingScalar) {
  for (unsigned n : {4u, 6u, 8u, 9u, 12u}) {
    const FiniteRing r = zn(n);
    for (const auto& c : oracle::all_polys(n, 2)) {
      if (oracle::all_zero(c)) continue;
      std::optional<Index> expected;
      for (unsigned s = 1; s < n && !expected; ++s)
        if (oracle::all_zero(oracle::poly_mul_mod({s}, c, n))) expected = s;
      EXPECT_EQ(mccoy_witness(zn_poly(r, c)), expected);
    }
  }
}

TEST(ContentDecompose, Examples) {
  const FiniteRing z8 = zn(8);
  auto d = content_decompose(parse_poly(z8, "2x+6"));
  EXPECT_EQ(d.content, 2u);
  EXPECT_EQ(d.cofactor, parse_poly(z8, "x+3"));
  const FiniteRing z9 = zn(9);
  d = content_decompose(parse_poly(z9, "3"));
  EXPECT_EQ(d.content, 3u);
  EXPECT_EQ(d.cofactor, parse_poly(z9, "1"));
  const FiniteRing z4 = zn(4);
  d = content_decompose(parse_poly(z4, "2x^2+2x"));
  EXPECT_EQ(d.content, 2u);
  EXPECT_EQ(d.cofactor, parse_poly(z4, "x^2+x"));
  EXPECT_THROW(content_decompose(Poly(z4, {})), PolyError);
  EXPECT_THROW(ContentDecomposer(parse_ring("Z12")), PolyError);
}

TEST(ContentDecompose, ContentGeneratesCoefficientIdealOverZn) {
  for (unsigned n : {4u, 8u, 9u, 16u, 27u}) {
    const FiniteRing r = zn(n);
    const ContentDecomposer dec(r);
    for (const auto& c : oracle::all_polys(n, n > 9 ? 1 : 2)) {
      if (oracle::all_zero(c)) continue;
      const Poly f = zn_poly(r, c);
      const auto d = dec(f);
      EXPECT_EQ(scale(d.content, d.cofactor), f);
      EXPECT_FALSE(mccoy_witness(d.cofactor).has_value());
      EXPECT_EQ(std::gcd(static_cast<unsigned>(d.content), n), coefficient_gcd(c, n)) << render(f);
    }
  }
}

TEST(ContentDecompose, ProductRings) {
  for (const char* text : {"Z2xZ4", "Z3xZ4", "Z4xGF(2)[x]/(x^2)"}) {
    const FiniteRing r = parse_ring(text);
    const ContentDecomposer dec(r);
    for (std::uint64_t code = 1; code < r.order() * r.order(); ++code) {
      const Poly f = decode(r, code, 1);
      const auto d = dec(f);
      EXPECT_EQ(scale(d.content, d.cofactor), f) << text << " " << render(f);
      EXPECT_FALSE(mccoy_witness(d.cofactor).has_value()) << text << " " << render(f);
    }
  }
}

TEST(Fragment, Examples) {
  const Fragment z4 = zero_divisor_fragment(zn(4), 1);
  EXPECT_EQ(z4.graph.labels(), (std::vector<std::string>{"2", "2x", "2x+2"}));
  EXPECT_EQ(z4.graph.size(), 0u);

  const FiniteRing z9 = zn(9);
  EXPECT_EQ(zero_divisor_fragment_graph(z9, 0), gamma_complement(z9).graph);

  const Graph z8 = zero_divisor_fragment_graph(zn(8), 1);
  EXPECT_TRUE(z8.adjacent(z8.at("2"), z8.at("6x")));
  EXPECT_FALSE(z8.adjacent(z8.at("4"), z8.at("4x+4")));
}

TEST(Fragment, AdjacencyIsNonzeroProduct) {
  for (unsigned n : {4u, 6u, 8u, 9u}) {
    const FiniteRing r = zn(n);
    const unsigned d = n <= 6 ? 3 : 2;
    const Graph g = zero_divisor_fragment_graph(r, d);
    std::vector<std::vector<unsigned>> zd;
    for (const auto& c : oracle::all_polys(n, d)) {
      if (oracle::all_zero(c)) continue;
      for (unsigned s = 1; s < n; ++s)
        if (oracle::all_zero(oracle::poly_mul_mod({s}, c, n))) {
          zd.push_back(c);
          break;
        }
    }
    ASSERT_EQ(g.order(), zd.size()) << n;
    for (std::size_t i = 0; i < zd.size(); ++i) {
      EXPECT_EQ(g.label(i), render(zn_poly(r, zd[i])));
      for (std::size_t j = i + 1; j < zd.size(); ++j)
        EXPECT_EQ(g.adjacent(i, j), !oracle::all_zero(oracle::poly_mul_mod(zd[i], zd[j], n)));
    }
  }
}

TEST(Fragment, CapExceeded) {
  EXPECT_THROW(zero_divisor_fragment(zn(8), 4), CapExceeded);
  EXPECT_THROW(zero_divisor_fragment(zn(4), 5, 1000), CapExceeded);
  EXPECT_NO_THROW(zero_divisor_fragment(zn(4), 5));
}

TEST(Corollary, Z4DegreeThree) {
  const CorollaryResult res = corollary_check(zn(4), 3);
  EXPECT_TRUE(res.holds);
  EXPECT_EQ(res.zero_divisors, 15u);
  EXPECT_EQ(res.pairs_checked, 105u);
  EXPECT_EQ(res.diagonal_checked, 15u);
}

TEST(Corollary, HoldsOverProductsOfLocalPirs) {
  for (const char* text : {"Z8", "Z9", "Z2xZ4", "Z3xZ4", "GF(2)[x]/(x^3)"}) {
    const CorollaryResult res = corollary_check(parse_ring(text), 1);
    EXPECT_TRUE(res.holds) << text;
    EXPECT_FALSE(res.counterexample.has_value()) << text;
  }
}

TEST(Corollary, OracleAgreesOnGcdCriterion) {
  // fg = 0 exactly when gcd(f) gcd(g) vanishes mod n
  for (unsigned n : {4u, 8u, 9u}) {
    std::vector<std::vector<unsigned>> zd;
    for (const auto& c : oracle::all_polys(n, 2))
      if (!oracle::all_zero(c) && coefficient_gcd(c, n) != 1) zd.push_back(c);
    for (const auto& a : zd)
      for (const auto& b : zd)
        EXPECT_EQ(oracle::all_zero(oracle::poly_mul_mod(a, b, n)),
                  coefficient_gcd(a, n) * coefficient_gcd(b, n) % n == 0);
    EXPECT_TRUE(corollary_check(zn(n), 2).holds);
  }
}

TEST(Corollary, SampledBudgetIsDeterministic) {
  const CorollaryBudget budget{false, 500, 42};
  const auto a = corollary_check(zn(8), 2, budget);
  const auto b = corollary_check(zn(8), 2, budget);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.pairs_checked, b.pairs_checked);
  EXPECT_LE(a.pairs_checked, 500u);
}

TEST(LiftOrientation, Z8DegreeOne) {
  const FiniteRing r = zn(8);
  const Fragment frag = zero_divisor_fragment(r, 1);
  const Orientation d = lift_orientation(r, local_orientation(r), frag);
  EXPECT_TRUE(validate_orientation(frag.graph, d));
  const auto arcs = d.pairs();
  const auto has = [&](const char* u, const char* v) {
    return std::find(arcs.begin(), arcs.end(), std::make_pair(frag.graph.at(u), frag.graph.at(v))) != arcs.end();
  };
  EXPECT_TRUE(has("2", "6"));
  EXPECT_TRUE(has("2", "6x"));
}

TEST(LiftOrientation, ValidAndLabelledAcrossRings) {
  struct Case {
    const char* ring;
    unsigned degree;
  };
  for (const Case c : {Case{"Z4", 2}, Case{"Z8", 1}, Case{"Z9", 1}, Case{"Z16", 1}, Case{"Z2xZ4", 1},
                       Case{"Z2xZ8", 1}, Case{"GF(2)[x]/(x^3)", 1}}) {
    const FiniteRing r = parse_ring(c.ring);
    const Graph base_graph = gamma_complement(r).graph;
    const auto base = recognize(base_graph);
    ASSERT_TRUE(base) << c.ring;
    const Fragment frag = zero_divisor_fragment(r, c.degree);
    const Orientation d = lift_orientation(r, *base, frag);
    ASSERT_TRUE(validate_orientation(frag.graph, d)) << c.ring;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (const auto& a : d.arcs) arcs.emplace_back(a.from, a.to);
    EXPECT_TRUE(oracle::valid_orientation(frag.graph.order(), arcs)) << c.ring;
    const DivisorLabeling f = synthesize_labeling(frag.graph, d);
    EXPECT_TRUE(validate_labeling(frag.graph, f).valid) << c.ring;
  }
}

TEST(LiftOrientation, RejectsInvalidBase) {
  const FiniteRing r = zn(16);
  const Fragment frag = zero_divisor_fragment(r, 0);
  EXPECT_THROW(lift_orientation(r, Orientation{}, frag), Error);
}
