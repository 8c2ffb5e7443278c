#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "wkdim/wkdim.hpp"

using namespace wkdim;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

int variant_kappa(const Graph& g, Variant v) { return *pair_profiles(g, v).kappa; }

std::vector<int> brute_values(const Graph& g, Variant v) {
  std::vector<int> out;
  for (int k = 1; k <= variant_kappa(g, v); ++k) out.push_back(solve_bruteforce(g, v, k).value);
  return out;
}

int count_lines(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) count += line.rfind(prefix, 0) == 0;
  return count;
}

}  // namespace

TEST_CASE("pair_profiles") {
  auto p3 = generate(FamilySpec::path(3));
  CHECK(pair_profiles(p3, Variant::Vertex).pairs.size() == 3);

  auto edges = pair_profiles(p3, Variant::Edge);
  REQUIRE(edges.pairs.size() == 1);
  CHECK(edges.pairs[0].delta == std::vector<int>{1, 0, 1});
  CHECK(*edges.kappa == 2);

  auto mixed = pair_profiles(generate(FamilySpec::path(2)), Variant::Mixed);
  REQUIRE(mixed.pairs.size() == 3);
  CHECK(mixed.pair_label(0) == "(0, 1)");
  CHECK(mixed.pair_label(1) == "(0, 0-1)");
  CHECK(mixed.pair_label(2) == "(1, 0-1)");

  CHECK_FALSE(pair_profiles(generate(FamilySpec::path(2)), Variant::Edge).kappa);
}

TEST_CASE("vertex profiles agree with delta_pair") {
  for (const auto& g : corpus::random_graphs()) {
    auto profiles = pair_profiles(g, Variant::Vertex);
    for (const auto& p : profiles.pairs) {
      auto ref = delta_pair(g, p.a.u, p.b.u);
      CHECK(p.delta == ref.per_vertex);
      CHECK(p.total == ref.total);
    }
    CHECK(*profiles.kappa == compute_kappa(g).kappa);
  }
}

TEST_CASE("solve_bruteforce examples") {
  CHECK(solve_bruteforce(generate(FamilySpec::path(5)), Variant::Vertex, 3).value == 3);
  auto k4 = generate(FamilySpec::complete(4));
  CHECK(solve_bruteforce(k4, Variant::Vertex, 1).value == 3);
  CHECK(solve_bruteforce(k4, Variant::Vertex, 2).value == 4);

  auto c5 = solve_bruteforce(generate(FamilySpec::cycle(5)), Variant::Vertex, 1);
  CHECK(c5.basis == VertexSet{0, 1});
  CHECK(c5.stats.engine == "brute");
}

TEST_CASE("Petersen graph regression constants") {
  auto g = corpus::petersen();
  REQUIRE(compute_kappa(g).kappa == 6);
  // Frozen from the first exhaustive run; the oracle below recomputes them.
  const std::vector<int> frozen{3, 4, 7, 8, 9, 10};
  CHECK(brute_values(g, Variant::Vertex) == frozen);
  CHECK(solve_bruteforce(g, Variant::Vertex, 2).value == 4);

  auto d = oracle::floyd_warshall(10, corpus::edge_list(g));
  for (int k = 1; k <= 6; ++k) CHECK(oracle::wdim(d, k) == frozen[k - 1]);
}

TEST_CASE("solve_bruteforce matches the bitmask oracle") {
  for (const auto& g : corpus::random_graphs()) {
    INFO(corpus::describe(g));
    auto d = oracle::floyd_warshall(g.vertex_count(), corpus::edge_list(g));
    const int kappa = oracle::kappa(d);
    for (int k = 1; k <= kappa; ++k) {
      auto result = solve_bruteforce(g, Variant::Vertex, k);
      CHECK(result.value == oracle::wdim(d, k));
      std::uint64_t mask = 0;
      for (Vertex s : result.basis) mask |= 1ULL << s;
      CHECK(oracle::weak_resolving(d, mask, k));
    }
  }
}

TEST_CASE("solve_bnb examples") {
  CHECK(solve_bnb(generate(FamilySpec::cycle(8)), Variant::Vertex, 4).value == 4);
  CHECK(solve_bnb(generate(FamilySpec::cycle(7)), Variant::Vertex, 3).value == 4);
  auto grid = solve_bnb(generate(FamilySpec::grid(3, 3)), Variant::Vertex, 5);
  CHECK(grid.value == 6);
  CHECK(grid.stats.engine == "bnb");
  CHECK(grid.certificate.value >= 5);
}

TEST_CASE("solve_bnb agrees with brute force across variants") {
  auto graphs = corpus::random_graphs(20221015, 12);
  for (int n = 3; n <= 6; ++n) {
    graphs.push_back(generate(FamilySpec::path(n)));
    graphs.push_back(generate(FamilySpec::cycle(n)));
    graphs.push_back(generate(FamilySpec::star(n)));
  }
  for (const auto& g : graphs) {
    INFO(corpus::describe(g));
    for (Variant v : {Variant::Vertex, Variant::Edge, Variant::Mixed}) {
      auto profiles = pair_profiles(g, v);
      if (!profiles.kappa) continue;
      for (int k = 1; k <= *profiles.kappa; ++k) {
        auto brute = solve_bruteforce(g, v, k);
        auto bnb = solve_bnb(g, v, k);
        CHECK(bnb.value == brute.value);
        CHECK(verify_variant(g, v, bnb.basis, k).passed);
        CHECK(verify_variant(g, v, brute.basis, k).passed);
      }
    }
  }
}

TEST_CASE("solve_bnb value does not depend on the worker count") {
  auto g = generate(FamilySpec::grid(3, 4));
  for (int k : {1, 3, 6, 9}) {
    int single = solve_bnb(g, Variant::Vertex, k, 1).value;
    CHECK(solve_bnb(g, Variant::Vertex, k, 4).value == single);
  }
  auto petersen = corpus::petersen();
  CHECK(solve_bnb(petersen, Variant::Vertex, 2, 3).value == 4);
}

TEST_CASE("single-worker bnb is deterministic") {
  auto g = corpus::petersen();
  auto a = solve_bnb(g, Variant::Vertex, 3);
  auto b = solve_bnb(g, Variant::Vertex, 3);
  CHECK(a.basis == b.basis);
  CHECK(a.stats.nodes == b.stats.nodes);
}

TEST_CASE("routed small cases are frozen") {
  auto values = [](FamilySpec spec, Variant v = Variant::Vertex) {
    return brute_values(generate(spec), v);
  };
  CHECK(values(FamilySpec::cycle(3)) == std::vector<int>{2, 3});
  CHECK(values(FamilySpec::cycle(4)) == std::vector<int>{2, 2, 4, 4});
  CHECK(values(FamilySpec::star(4)) == std::vector<int>{2, 2, 3, 4});
  CHECK(values(FamilySpec::complete_bipartite(1, 3)) == std::vector<int>{2, 2, 3, 4});
  CHECK(values(FamilySpec::complete_bipartite(1, 4)) == std::vector<int>{3, 3, 4, 4});
  CHECK(values(FamilySpec::complete_bipartite(1, 5)) == std::vector<int>{4, 4, 5, 5});
  CHECK(values(FamilySpec::spider({1, 2, 5})) == std::vector<int>{2, 2, 3, 4, 5, 6});

  CHECK(values(FamilySpec::path(3), Variant::Edge) == std::vector<int>{1, 2});
  CHECK(values(FamilySpec::cycle(5), Variant::Edge) == std::vector<int>{2, 3, 4, 5});
  CHECK(values(FamilySpec::star(5), Variant::Edge) == std::vector<int>{3, 4});
  CHECK(values(FamilySpec::path(5), Variant::Edge) == std::vector<int>{1, 2, 4, 5});
  CHECK(values(FamilySpec::path(2), Variant::Mixed) == std::vector<int>{2});
  CHECK(values(FamilySpec::path(3), Variant::Mixed) == std::vector<int>{2});
  CHECK(values(FamilySpec::cycle(5), Variant::Mixed) == std::vector<int>{3, 5});
  CHECK(values(FamilySpec::star(5), Variant::Mixed) == std::vector<int>{4});
  CHECK(values(FamilySpec::path(5), Variant::Mixed) == std::vector<int>{2});
}

TEST_CASE("solve_kmetric_dim") {
  for (int n = 2; n <= 8; ++n)
    CHECK(solve_kmetric_dim(generate(FamilySpec::path(n)), 1).value == 1);

  auto c6 = generate(FamilySpec::cycle(6));
  REQUIRE(compute_kappa(c6).kappa_prime == 4);
  std::vector<int> dims;
  for (int k = 1; k <= 4; ++k) dims.push_back(solve_kmetric_dim(c6, k).value);
  CHECK(dims == std::vector<int>{2, 3, 5, 6});
  CHECK(solve_bruteforce(c6, Variant::Vertex, 2).value <= dims[1]);
  CHECK(code_of([&] { solve_kmetric_dim(c6, 5); }) == ErrorCode::KaboveKappaPrime);
}

TEST_CASE("sandwich, monotonicity and bounds on the random corpus") {
  for (const auto& g : corpus::random_graphs()) {
    INFO(corpus::describe(g));
    const int n = g.vertex_count();
    auto report = compute_kappa(g);
    int previous = 0;
    for (int k = 1; k <= report.kappa; ++k) {
      auto result = solve_bruteforce(g, Variant::Vertex, k);
      CHECK(result.value >= previous);
      CHECK(result.value >= k);
      CHECK(result.value <= n);
      CHECK(verify_weak_k_resolving(g, result.basis, k).passed);
      CHECK(verify_local_k_resolving(g, result.basis, k).passed);
      CHECK(result.certificate.value >= k);
      if (k == 1) CHECK(result.value == solve_kmetric_dim(g, 1).value);
      if (k <= report.kappa_prime) CHECK(result.value <= solve_kmetric_dim(g, k).value);
      previous = result.value;
    }
  }
}

TEST_CASE("no smaller set than the optimum passes") {
  for (const auto& g : corpus::random_graphs(77, 6)) {
    auto d = oracle::floyd_warshall(g.vertex_count(), corpus::edge_list(g));
    for (int k = 1; k <= compute_kappa(g).kappa; ++k) {
      int value = solve_bnb(g, Variant::Vertex, k).value;
      for (std::uint64_t mask = 0; mask < (1ULL << g.vertex_count()); ++mask)
        if (__builtin_popcountll(mask) < value) CHECK_FALSE(oracle::weak_resolving(d, mask, k));
    }
  }
}

TEST_CASE("solver error paths") {
  auto c5 = generate(FamilySpec::cycle(5));
  try {
    solve_bruteforce(c5, Variant::Vertex, 5);
    FAIL("expected InfeasibleK");
  } catch (const InfeasibleK& e) {
    CHECK(e.code() == ErrorCode::KaboveKappa);
    CHECK(e.limit() == 4);
    CHECK(e.witness() == "(0, 1)");
  }
  CHECK(code_of([&] { solve_bnb(c5, Variant::Vertex, 5); }) == ErrorCode::KaboveKappa);
  CHECK(code_of([&] { solve_bnb(c5, Variant::Vertex, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { solve_bruteforce(c5, Variant::Vertex, 1, 4); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { solve_bnb(generate(FamilySpec::path(2)), Variant::Edge, 1); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_variant("both"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("LP export") {
  auto p3 = generate(FamilySpec::path(3));
  std::ostringstream vertex;
  write_lp(vertex, pair_profiles(p3, Variant::Vertex), 1);
  const auto text = vertex.str();
  CHECK(text.find("Minimize\n obj: x0 + x1 + x2\n") != std::string::npos);
  CHECK(count_lines(text, " v") == 3);
  CHECK(text.find(" v0_v2: 2 x0 + 2 x2 >= 1\n") != std::string::npos);
  CHECK(text.find("Binary\n x0 x1 x2\nEnd\n") != std::string::npos);

  std::ostringstream edge;
  write_lp(edge, pair_profiles(p3, Variant::Edge), 1);
  CHECK(count_lines(edge.str(), " e") == 1);
  CHECK(edge.str().find(" e0.1_e1.2: x0 + x2 >= 1\n") != std::string::npos);
  CHECK(edge.str().find("Binary\n x0 x1 x2\n") != std::string::npos);

  std::ostringstream k4;
  write_lp(k4, pair_profiles(generate(FamilySpec::complete(4)), Variant::Vertex), 2);
  std::istringstream rows(k4.str());
  std::string line;
  int row_count = 0;
  while (std::getline(rows, line)) {
    if (line.rfind(" v", 0) != 0) continue;
    ++row_count;
    auto body = line.substr(line.find(':') + 1, line.find(">=") - line.find(':') - 1);
    std::istringstream terms(body);
    std::string token;
    int variables = 0;
    while (terms >> token) {
      if (token == "+") continue;
      CHECK(token[0] == 'x');  // coefficient 1 is written bare
      ++variables;
    }
    CHECK(variables == 2);
  }
  CHECK(row_count == 6);
}
