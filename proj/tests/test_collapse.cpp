#include <doctest.h>

#include "necollapse/bits.hpp"
#include "necollapse/collapse.hpp"
#include "necollapse/enumerate.hpp"
#include "necollapse/error.hpp"
#include "necollapse/evasiveness.hpp"
#include "support.hpp"

using namespace nec;
using testing::cx;

namespace {

const SimplicialComplex kBoundary = cx({{"a", "b"}, {"a", "c"}, {"b", "c"}});
const SimplicialComplex kSimplex = cx({{"a", "b", "c"}});
const SimplicialComplex kEdge = cx({{"a", "b"}});

std::vector<std::vector<std::string>> labels(const SimplicialComplex& x, VertexSet m) { return {x.labels_of(m)}; }

// Betti numbers without trailing zeros, so a dimension drop compares equal.
std::vector<std::size_t> betti_of(const SimplicialComplex& x) {
  auto b = z2_betti(x);
  while (!b.empty() && b.back() == 0) b.pop_back();
  return b;
}

// Replays step by step through apply_collapse, checking homology is unchanged.
bool replay_keeps_homology(SimplicialComplex x, const CollapseSequence& seq) {
  const auto betti = betti_of(x);
  const auto chi = reduced_euler(x);
  for (const auto& st : seq.steps) {
    std::vector<std::string> tau, sigma;
    bits::for_each(st.free_face, [&](unsigned i) { tau.push_back(seq.universe[i]); });
    bits::for_each(st.coface, [&](unsigned i) { sigma.push_back(seq.universe[i]); });
    x = apply_collapse(x, {x.mask_of(tau), x.mask_of(sigma)});
    if (betti_of(x) != betti || reduced_euler(x) != chi) return false;
  }
  return true;
}

SimplicialComplex cylinder() {
  // Three rings of three vertices; consecutive rings joined by a band of triangles.
  auto v = [](int i, int j) { return std::string(1, static_cast<char>('a' + 3 * j + (i % 3))); };
  std::vector<std::vector<std::string>> f;
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 3; ++i) {
      f.push_back({v(i, j), v(i + 1, j), v(i + 1, j + 1)});
      f.push_back({v(i, j), v(i, j + 1), v(i + 1, j + 1)});
    }
  }
  return cx(f);
}

}  // namespace

TEST_CASE("free pairs") {
  const auto edge = free_pairs(kEdge);
  REQUIRE(edge.size() == 2);
  CHECK(labels(kEdge, edge[0].free_face) == std::vector<std::vector<std::string>>{{"a"}});
  CHECK(labels(kEdge, edge[1].free_face) == std::vector<std::vector<std::string>>{{"b"}});
  CHECK(free_pairs(kBoundary).empty());

  const auto tri = free_pairs(kSimplex);
  CHECK(tri.size() == 3);
  for (const auto& p : tri) CHECK(bits::count(p.free_face) == 2);
}

TEST_CASE("elementary collapses") {
  CHECK(apply_collapse(kEdge, {kEdge.mask_of(std::vector<std::string>{"b"}), kEdge.mask_of(std::vector<std::string>{"a", "b"})}) ==
        cx({{"a"}}));
  const auto bc = kSimplex.mask_of(std::vector<std::string>{"b", "c"});
  CHECK(apply_collapse(kSimplex, {bc, kSimplex.mask_of(kSimplex.vertices())}) == cx({{"a", "b"}, {"a", "c"}}));
  const auto ab = kBoundary.mask_of(std::vector<std::string>{"a", "b"});
  CHECK_THROWS_AS(apply_collapse(kBoundary, {kBoundary.mask_of(std::vector<std::string>{"a"}), ab}), InputError);
}

TEST_CASE("verification") {
  CHECK(verify_collapse(kSimplex, kSimplex, {kSimplex.vertices(), {}}));
  const CollapseSequence edge_to_a{{"a", "b"}, {{0b10, 0b11}}};
  CHECK(verify_collapse(kEdge, cx({{"a"}}), edge_to_a));
  CHECK_FALSE(verify_collapse(kEdge, cx({{"b"}}), edge_to_a));
  CHECK_FALSE(verify_collapse(kBoundary, cx({{"a"}}), {{"a", "b", "c"}, {{0b001, 0b011}}}));
  CHECK_FALSE(verify_collapse(kBoundary, cx({{"a"}}), {{"a", "b", "c"}, {}}));
}

TEST_CASE("witness compilation") {
  // Link of a in the triangle is the edge {b, c}; removing c there leaves b.
  const auto w = Witness::split("c", Witness::point("b"), Witness::point("b"));
  const auto seq = witness_to_vertex_collapse(kSimplex, "a", *w);
  REQUIRE(seq.steps.size() == 2);
  const auto last = seq.steps.back();
  std::vector<std::string> tau, sigma;
  bits::for_each(last.free_face, [&](unsigned i) { tau.push_back(seq.universe[i]); });
  bits::for_each(last.coface, [&](unsigned i) { sigma.push_back(seq.universe[i]); });
  CHECK(tau == std::vector<std::string>{"a"});
  CHECK(sigma == std::vector<std::string>{"a", "b"});
  CHECK(verify_collapse(kSimplex, cx({{"b", "c"}}), seq));

  const auto single = witness_to_vertex_collapse(kEdge, "a", *Witness::point("b"));
  REQUIRE(single.steps.size() == 1);
  CHECK(verify_collapse(kEdge, cx({{"b"}}), single));

  const SimplicialComplex cone = cx({{"p", "a", "b"}, {"p", "b", "c"}, {"p", "c", "d"}, {"p", "a", "d"}});
  const auto lk = link(cone, "a");
  const auto lw = is_nonevasive(*lk);
  REQUIRE(lw.outcome == Outcome::found);
  const auto cs = witness_to_vertex_collapse(cone, "a", *lw.witness);
  CHECK(verify_collapse(cone, delete_vertex(cone, "a"), cs));
  CHECK(replay_keeps_homology(cone, cs));

  CHECK_THROWS_AS(witness_to_vertex_collapse(kSimplex, "a", *Witness::point("b")), InputError);
}

TEST_CASE("certificates compile to collapses of the right length") {
  CHECK(certificate_to_collapse(kSimplex, {}).steps.empty());
  const NECertificate to_point{{"a", "b"}, {Witness::split("b", Witness::point("c"), Witness::point("c")), Witness::point("c")}};
  const auto seq = certificate_to_collapse(kSimplex, to_point);
  CHECK(seq.steps.size() == 3);
  CHECK(verify_collapse(kSimplex, cx({{"c"}}), seq));
}

TEST_CASE("nonevasive complexes collapse, with homology kept at every step") {
  for_each_complex(5, [&](const SimplicialComplex& x) {
    const auto ne = is_nonevasive(x);
    if (ne.outcome != Outcome::found) return;
    const auto r = search_collapse_to_point(x);
    REQUIRE(r.outcome == Outcome::found);
    CHECK(replay_keeps_homology(x, *r.sequence));

    // A full-certificate collapse too: remove every vertex but the last leaf.
    const auto target = x.vertices().back();
    const auto red = search_ne_reduction(x, cx({{target}}));
    if (red.outcome == Outcome::found) {
      const auto seq = certificate_to_collapse(x, *red.certificate);
      CHECK(verify_collapse(x, cx({{target}}), seq));
      CHECK(seq.steps.size() == (x.face_count() - 1) / 2);
    }
  });
}

TEST_CASE("collapse search") {
  CHECK(search_collapse(kSimplex, cx({{"a"}})).outcome == Outcome::found);
  CHECK(search_collapse(kBoundary, cx({{"a"}})).outcome == Outcome::absent);
  CHECK(search_collapse_to_point(kBoundary).outcome == Outcome::absent);

  const SimplicialComplex cyl = cylinder();
  CHECK(cyl.num_vertices() == 9);
  const SimplicialComplex core = cx({{"a", "b"}, {"b", "c"}, {"a", "c"}});
  const auto r = search_collapse(cyl, core);
  REQUIRE(r.outcome == Outcome::found);
  CHECK(verify_collapse(cyl, core, *r.sequence));
  CHECK(r.sequence->steps.size() == (cyl.face_count() - core.face_count()) / 2);
}
