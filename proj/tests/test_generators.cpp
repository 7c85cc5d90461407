#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "plab/errors.hpp"
#include "plab/generators.hpp"
#include "plab/graph.hpp"
#include "plab/powerlaw.hpp"

using namespace plab;
using doctest::Approx;

TEST_CASE("sampler draws deterministically and respects boundaries") {
  PowerLawSampler s(2.5);
  CHECK(s.cdf(1) == Approx(1.0 / 1.3414872572509172).epsilon(1e-9));
  CHECK(s.draw_at(0.0, 1000) == 1);
  CHECK(s.draw_at(s.cdf(1), 1000) == 1);
  CHECK(s.draw_at(std::nextafter(s.cdf(1), 1.0), 1000) == 2);
  CHECK(s.draw_at(s.cdf(17), 1000) == 17);
  CHECK(s.draw_at(std::nextafter(s.cdf(17), 1.0), 1000) == 18);
  CHECK(s.draw_at(1.0 - 1e-16, 50) == 50);  // clamped to maxval
  CHECK(s.draw_at(0.9, 1) == 1);
  double prev = 0;
  for (uint64_t k = 1; k < 4000; ++k) {
    double c = s.cdf(k);
    CHECK(c > prev);
    CHECK(c <= 1.0);
    prev = c;
  }
  CHECK(s.cdf(100000000) == Approx(1.0).epsilon(1e-6));

  std::mt19937_64 r1(42), r2(42);
  for (int i = 0; i < 1000; ++i) CHECK(s.draw(r1, 1 << 20) == s.draw(r2, 1 << 20));
}

TEST_CASE("sampler mass matches the target law") {
  SUBCASE("alpha 2.5 ground-state mass") {
    PowerLawSampler s(2.5);
    std::mt19937_64 rng(7);
    int n = 1000000, ones = 0, twos = 0;
    for (int i = 0; i < n; ++i) {
      uint64_t k = s.draw(rng, 1 << 30);
      ones += k == 1;
      twos += k == 2;
    }
    CHECK(static_cast<double>(ones) / n == Approx(1.0 / 1.3414872572509172).epsilon(0.005));
    CHECK(static_cast<double>(twos) / n ==
          Approx(std::pow(2.0, -2.5) / 1.3414872572509172).epsilon(0.02));
  }
  SUBCASE("alpha 20 is almost surely 1") {
    PowerLawSampler s(20.0);
    std::mt19937_64 rng(3);
    int n = 100000, ones = 0;
    for (int i = 0; i < n; ++i) ones += s.draw(rng, 1 << 30) == 1;
    CHECK(ones >= n - 2);
  }
}

TEST_CASE("sample_powerlaw_degrees stays inside the simple-graph range") {
  auto d = sample_powerlaw_degrees(300000, 2.4, 11);
  REQUIRE(d.size() == 300000);
  uint32_t ones = 0;
  for (uint32_t x : d) {
    CHECK(x >= 1);
    CHECK(x <= 299999);
    ones += x == 1;
  }
  CHECK(static_cast<double>(ones) / 300000 == Approx(1.0 / 1.3833428588407357).epsilon(0.005));
  CHECK(sample_powerlaw_degrees(300000, 2.4, 11) == d);
  CHECK(sample_powerlaw_degrees(300000, 2.4, 12) != d);
  CHECK(sample_powerlaw_degrees(1, 2.5, 1).size() == 1);
}

TEST_CASE("repair_degree_sequence walks to the nearest graphical sequence") {
  std::vector<uint32_t> a = {3, 1};
  repair_degree_sequence(a);
  CHECK(a == std::vector<uint32_t>{1, 1});

  std::vector<uint32_t> b = {1, 1, 1};
  repair_degree_sequence(b);
  CHECK(b == std::vector<uint32_t>{2, 1, 1});

  std::vector<uint32_t> c = {2, 2, 2};
  repair_degree_sequence(c);
  CHECK(c == std::vector<uint32_t>{2, 2, 2});

  std::vector<uint32_t> d = {5, 5, 1, 1, 1, 1};
  repair_degree_sequence(d);
  CHECK(d == std::vector<uint32_t>{3, 3, 1, 1, 1, 1});

  std::mt19937_64 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    uint32_t n = 2 + static_cast<uint32_t>(rng() % 199);
    std::vector<uint32_t> seq(n);
    for (auto& x : seq) x = 1 + static_cast<uint32_t>(rng() % (n - 1));
    repair_degree_sequence(seq);
    CHECK(is_graphical(seq));
  }
}

TEST_CASE("generate_powerlaw_graph realizes the repaired sample exactly") {
  uint32_t n = 10000;
  auto want = sample_powerlaw_degrees(n, 2.5, 7);
  repair_degree_sequence(want);
  Graph g = generate_powerlaw_graph(n, 2.5, 7);
  REQUIRE(g.num_vertices() == n);
  for (uint32_t v = 0; v < n; ++v) CHECK(g.degree(v) == want[v]);

  Graph tiny = generate_powerlaw_graph(2, 2.5, 1);
  CHECK(tiny.num_vertices() == 2);
  CHECK_THROWS_AS(generate_powerlaw_graph(1, 2.5, 1), DomainError);
}

TEST_CASE("generated edge counts land near the expected mass") {
  Graph g = generate_powerlaw_graph(300000, 2.4, 1);
  double ratio = static_cast<double>(g.num_edges()) / 327631.0;
  CHECK(ratio > 0.9);
  CHECK(ratio < 1.1);
}

TEST_CASE("preferential attachment tracks its log") {
  SUBCASE("m=1 grows a tree over the seed edge") {
    BaResult r = generate_ba(50, 1, 5);
    CHECK(r.g.num_vertices() == 50);
    CHECK(r.g.num_edges() == 1 + 48);  // K2 seed plus one edge per vertex
    CHECK(r.log.n0 == 2);
    CHECK(r.log.m == 1);
    REQUIRE(r.log.attach.size() == 48);
    for (size_t i = 0; i < r.log.attach.size(); ++i) {
      REQUIRE(r.log.attach[i].size() == 1);
      CHECK(r.log.attach[i][0] < 2 + i);
      CHECK(r.g.adjacent(static_cast<uint32_t>(2 + i), r.log.attach[i][0]));
    }
  }
  SUBCASE("m=3 draws distinct earlier vertices") {
    BaResult r = generate_ba(200, 3, 9);
    CHECK(r.log.n0 == 4);
    CHECK(r.g.num_edges() == 6 + 3 * 196);
    for (size_t i = 0; i < r.log.attach.size(); ++i) {
      auto t = r.log.attach[i];
      REQUIRE(t.size() == 3);
      std::sort(t.begin(), t.end());
      CHECK(t[0] < t[1]);
      CHECK(t[1] < t[2]);
      CHECK(t[2] < 4 + i);
    }
    for (uint32_t v = 4; v < 200; ++v) CHECK(r.g.degree(v) >= 3);
  }
  SUBCASE("determinism in the seed") {
    CHECK(generate_ba(300, 2, 4).g.edge_list() == generate_ba(300, 2, 4).g.edge_list());
    CHECK(generate_ba(300, 2, 4).g.edge_list() != generate_ba(300, 2, 5).g.edge_list());
  }
  SUBCASE("custom seed graph") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    BaResult r = generate_ba(10, 2, 1, &p3);
    CHECK(r.log.n0 == 3);
    CHECK(r.g.num_edges() == 2 + 2 * 7);
    CHECK(r.g.adjacent(0, 1));
    CHECK(r.g.adjacent(1, 2));
    CHECK_FALSE(r.g.adjacent(0, 2));
  }
  SUBCASE("degree distribution has the cubic tail") {
    BaResult r = generate_ba(100000, 3, 123);
    double a = fit_alpha_mle(degree_histogram(r.g), 5);
    CHECK(a > 2.5);
    CHECK(a < 3.5);
  }
  SUBCASE("invalid requests") {
    CHECK_THROWS_AS(generate_ba(10, 0, 1), DomainError);
    CHECK_THROWS_AS(generate_ba(3, 3, 1), DomainError);  // n <= n0
    Graph sparse_seed = Graph::from_edges(5, {{0, 1}});
    CHECK_THROWS_AS(generate_ba(20, 3, 1, &sparse_seed), DomainError);  // 2 attachable < m
    Graph empty_seed = Graph::from_edges(5, {});
    CHECK_THROWS_AS(generate_ba(20, 3, 1, &empty_seed), DomainError);
  }
}

TEST_CASE("online attachment labels decode the whole adjacency matrix") {
  uint32_t n = 1000, m = 2;
  BaResult r = generate_ba(n, m, 77);
  BaLabelSet ls = ba_online_labels(r.log, n);
  REQUIRE(ls.labels.size() == n);
  uint32_t idb = ls.scheme.idbits;
  CHECK(idb == idbits_for(n));
  CHECK(ls.scheme.cntbits == idbits_for(ls.scheme.n0));
  uint64_t bound = static_cast<uint64_t>(m + 1) * idb + ls.scheme.cntbits;
  for (uint32_t v = 0; v < n; ++v) {
    CHECK(ls.labels[v].nbits <= bound);
    if (v >= ls.scheme.n0) CHECK(ls.labels[v].nbits == (m + 1) * idb);
  }
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b)
      CHECK(ba_decode(ls.labels[a], ls.labels[b], ls.scheme) == r.g.adjacent(a, b));
}

TEST_CASE("ba label parsing rejects malformed input") {
  BaResult r = generate_ba(20, 2, 3);
  BaLabelSet ls = ba_online_labels(r.log, 20);
  Label ok = ls.labels[10];
  Label zero;  // id 0
  zero.nbits = ls.labels[10].nbits;
  zero.bytes.assign(ls.labels[10].bytes.size(), 0);
  CHECK_THROWS_AS(ba_decode(zero, ok, ls.scheme), MalformedLabel);
  Label trunc = ok;
  trunc.nbits -= 3;
  CHECK_THROWS_AS(ba_decode(trunc, ok, ls.scheme), MalformedLabel);

  AttachmentLog bad = r.log;
  bad.attach.pop_back();
  CHECK_THROWS_AS(ba_online_labels(bad, 20), DomainError);
  AttachmentLog arity = r.log;
  arity.attach[0].push_back(0);
  CHECK_THROWS_AS(ba_online_labels(arity, 20), DomainError);
}

TEST_CASE("embedding plants H inside a profile the verifiers accept") {
  const double zeta_am1[] = {5.591582441177751, 2.612375348685488, 1.882229618102822};
  const double alphas[] = {2.2, 2.5, 2.8};
  for (uint32_t n : {1000u, 10000u}) {
    for (int ai = 0; ai < 3; ++ai) {
      double alpha = alphas[ai];
      PlConstants c = constants(n, alpha);
      uint32_t i1 = static_cast<uint32_t>(c.i1);
      std::mt19937_64 rng(1000 + ai);
      std::vector<std::pair<uint32_t, uint32_t>> hedges;
      for (uint32_t u = 0; u < i1; ++u)
        for (uint32_t v = u + 1; v < i1; ++v)
          if (rand_unit(rng) < 0.3) hedges.emplace_back(u, v);
      Graph h = Graph::from_edges(i1, hedges);

      Embedding e = embed_lower_bound(h, n, alpha, 99);
      REQUIRE(e.g.num_vertices() == n);
      CHECK(e.consts.i1 == i1);
      CHECK(is_induced_subgraph(e.g, h, e.h_to_g));
      for (uint32_t v = 0; v < n; ++v) CHECK(e.g.degree(v) == e.target[v]);
      DegreeHistogram dh = degree_histogram(e.g);
      CHECK(verify_proper(dh, e.consts).member);
      CHECK(verify_palpha(dh, e.consts).member);
      CHECK(std::is_sorted(e.h_to_g.begin(), e.h_to_g.end()));
      double cap = 1.2 * (1.0 + c.C * zeta_am1[ai] / 2.0) * n;
      CHECK(static_cast<double>(e.g.num_edges()) <= cap);

      Embedding e2 = embed_lower_bound(h, n, alpha, 99);
      CHECK(e2.g.edge_list() == e.g.edge_list());
      CHECK(e2.h_to_g == e.h_to_g);
    }
  }
}

TEST_CASE("embedding handles the empty and complete extremes") {
  uint32_t n = 1000;
  double alpha = 2.5;
  uint32_t i1 = static_cast<uint32_t>(constants(n, alpha).i1);  // 11
  Graph empty = Graph::from_edges(i1, {});
  Embedding ee = embed_lower_bound(empty, n, alpha, 3);
  CHECK(is_induced_subgraph(ee.g, empty, ee.h_to_g));
  CHECK(verify_proper(degree_histogram(ee.g), ee.consts).member);

  std::vector<std::pair<uint32_t, uint32_t>> kedges;
  for (uint32_t u = 0; u < i1; ++u)
    for (uint32_t v = u + 1; v < i1; ++v) kedges.emplace_back(u, v);
  Graph full = Graph::from_edges(i1, kedges);
  Embedding ef = embed_lower_bound(full, n, alpha, 3);
  CHECK(is_induced_subgraph(ef.g, full, ef.h_to_g));
  CHECK(verify_proper(degree_histogram(ef.g), ef.consts).member);
}

TEST_CASE("embedding rejects bad parameters and impossible sizes") {
  Graph h1 = Graph::from_edges(1, {});
  CHECK_THROWS_AS(embed_lower_bound(h1, 1000, 2.0, 1), DomainError);
  Graph h5 = Graph::from_edges(5, {});
  CHECK_THROWS_WITH_AS(embed_lower_bound(h5, 1000, 2.5, 1), doctest::Contains("exactly i1"),
                       DomainError);
  CHECK_THROWS_WITH_AS(embed_lower_bound(h1, 1, 2.5, 1), doctest::Contains("n too small"),
                       Infeasible);
}
