#include <doctest.h>

#include "necollapse/bits.hpp"
#include "necollapse/complex.hpp"
#include "necollapse/enumerate.hpp"
#include "necollapse/error.hpp"
#include "support.hpp"

using namespace nec;
using testing::all_faces;
using testing::boolean_lattice;
using testing::chain;
using testing::cx;
using testing::poset;

namespace {

SimplicialComplex relabel(const SimplicialComplex& x, const std::string& prefix) {
  auto f = x.facet_labels();
  for (auto& facet : f) {
    for (auto& v : facet) v = prefix + v;
  }
  return cx(f);
}

const SimplicialComplex kBoundary = cx({{"a", "b"}, {"a", "c"}, {"b", "c"}});
const SimplicialComplex kSimplex = cx({{"a", "b", "c"}});

}  // namespace

TEST_CASE("facets are normalized") {
  const SimplicialComplex x = cx({{"b", "a"}, {"a"}, {"a", "b"}, {"c"}});
  CHECK(x.facet_labels() == std::vector<std::vector<std::string>>{{"a", "b"}, {"c"}});
  CHECK(x.vertices() == std::vector<std::string>{"a", "b", "c"});
  CHECK(x.dimension() == 1);
  CHECK_THROWS_AS(cx({}), InputError);
  CHECK_THROWS_AS(cx({{}}), InputError);
}

TEST_CASE("order complexes") {
  CHECK(order_complex(chain({"a", "b", "c"})) == kSimplex);
  CHECK(order_complex(poset({"a", "b"}, {})) == cx({{"a"}, {"b"}}));

  // Proper part of B3 is a hexagon.
  const Poset b3 = boolean_lattice(3);
  const ElementSet proper = b3.all() & ~(bits::bit(b3.index_of("{}")) | bits::bit(b3.index_of("{1,2,3}")));
  const auto hex = order_complex(b3, proper);
  REQUIRE(hex.has_value());
  CHECK(hex->num_vertices() == 6);
  CHECK(hex->facets().size() == 6);
  CHECK(reduced_euler(*hex) == -1);
  CHECK(!order_complex(b3, 0).has_value());
}

TEST_CASE("order complexes match chain enumeration") {
  for (unsigned n = 1; n <= 5; ++n) {
    for_each_poset(n, [&](const Poset& p) { CHECK(all_faces(order_complex(p)) == testing::naive_order_complex(p)); });
  }
}

TEST_CASE("links and deletions") {
  CHECK(link(kBoundary, "a") == cx({{"b"}, {"c"}}));
  CHECK(link(kSimplex, "a") == cx({{"b", "c"}}));
  CHECK(!link(cx({{"a"}, {"b"}}), "a").has_value());

  const SimplicialComplex db2 = order_complex(boolean_lattice(2));
  CHECK(link(db2, "{}") == cx({{"{1}", "{1,2}"}, {"{2}", "{1,2}"}}));

  CHECK(delete_vertex(kSimplex, "a") == cx({{"b", "c"}}));
  CHECK(delete_vertex(kBoundary, "a") == cx({{"b", "c"}}));
  CHECK(delete_vertex(cx({{"a"}, {"b"}}), "a") == cx({{"b"}}));
  CHECK_THROWS_AS(delete_vertex(cx({{"a"}}), "a"), InputError);
  CHECK_THROWS_AS(link(kSimplex, "z"), InputError);
}

TEST_CASE("faces split into deletion, link and star") {
  for_each_complex(4, [&](const SimplicialComplex& x) {
    const auto faces = all_faces(x);
    CHECK(x.face_count() == faces.size());
    for (const auto& v : x.vertices()) {
      const auto lk = link(x, v);
      const auto naive_lk = testing::naive_link(faces, v);
      CHECK((lk ? all_faces(*lk) : testing::FaceSet{}) == naive_lk);
      const std::size_t without = x.num_vertices() > 1 ? delete_vertex(x, v).face_count() : 0;
      CHECK(faces.size() == without + naive_lk.size() + 1);
    }
  });
}

TEST_CASE("joins") {
  CHECK(join(cx({{"a"}}), cx({{"b"}})) == cx({{"a", "b"}}));
  CHECK(join(cx({{"p"}}), kBoundary) == cx({{"p", "a", "b"}, {"p", "a", "c"}, {"p", "b", "c"}}));
  CHECK(join(cx({{"a"}, {"b"}}), cx({{"c"}, {"d"}})) == cx({{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}}));
  CHECK_THROWS_AS(join(kSimplex, kBoundary), InputError);
  const MaybeComplex none;
  CHECK(join(none, MaybeComplex(kSimplex)) == kSimplex);
}

TEST_CASE("join identities on small complexes") {
  std::vector<SimplicialComplex> xs, ys;
  for_each_complex(3, [&](const SimplicialComplex& x) { xs.push_back(x); });
  for_each_complex(2, [&](const SimplicialComplex& y) { ys.push_back(relabel(y, "y")); });
  for (const auto& x : xs) {
    for (const auto& y : ys) {
      const SimplicialComplex j = join(x, y);
      // Faces of the join are unions of a face of each side, either possibly empty.
      auto fx = all_faces(x);
      auto fy = all_faces(y);
      fx.insert(testing::Face{});
      fy.insert(testing::Face{});
      testing::FaceSet expected;
      for (const auto& a : fx) {
        for (const auto& b : fy) {
          testing::Face u = a;
          u.insert(b.begin(), b.end());
          if (!u.empty()) expected.insert(u);
        }
      }
      CHECK(all_faces(j) == expected);
      CHECK(reduced_euler(j) == -reduced_euler(x) * reduced_euler(y));
      for (const auto& v : x.vertices()) {
        CHECK(link(j, v) == join(link(x, v), MaybeComplex(y)));
        if (x.num_vertices() > 1) CHECK(delete_vertex(j, v) == join(delete_vertex(x, v), y));
      }
    }
  }
}

TEST_CASE("cones") {
  CHECK(is_cone(kSimplex) == "a");
  CHECK(!is_cone(kBoundary).has_value());
  CHECK(is_cone(order_complex(chain({"b", "a"}))) == "a");
  const Poset with_top = poset({"x", "y", "m"}, {{"x", "m"}, {"y", "m"}});
  CHECK(is_cone(order_complex(with_top)) == "m");
}

TEST_CASE("euler characteristic and homology") {
  CHECK(reduced_euler(cx({{"a"}})) == 0);
  CHECK(reduced_euler(kBoundary) == -1);
  CHECK(reduced_euler(MaybeComplex{}) == -1);
  CHECK(z2_betti(cx({{"a"}})) == std::vector<std::size_t>{1});
  CHECK(z2_betti(kBoundary) == std::vector<std::size_t>{1, 1});
  CHECK(z2_betti(kSimplex) == std::vector<std::size_t>{1, 0, 0});
  // Boundary of the tetrahedron is a 2-sphere.
  const SimplicialComplex s2 = cx({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  CHECK(z2_betti(s2) == std::vector<std::size_t>{1, 0, 1});
  // Six-vertex projective plane: H_1 and H_2 over GF(2) are both Z/2.
  const SimplicialComplex rp2 = cx({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"}, {"1", "2", "6"},
                                    {"2", "3", "5"}, {"3", "4", "6"}, {"2", "4", "5"}, {"3", "5", "6"}, {"2", "4", "6"}});
  CHECK(z2_betti(rp2) == std::vector<std::size_t>{1, 1, 1});
}

TEST_CASE("betti numbers and face counts agree on the euler characteristic") {
  for_each_complex(5, [&](const SimplicialComplex& x) {
    const auto b = z2_betti(x);
    long long alt = 0;
    for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(b[k]);
    CHECK(alt - 1 == reduced_euler(x));
    CHECK(reduced_euler(x) == testing::naive_reduced_euler(all_faces(x)));
  });
}
