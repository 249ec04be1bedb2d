#include <doctest.h>

#include <random>

#include "necollapse/bits.hpp"
#include "necollapse/collapse.hpp"
#include "necollapse/enumerate.hpp"
#include "necollapse/error.hpp"
#include "necollapse/reduction.hpp"
#include "support.hpp"

using namespace nec;
using testing::b2_closure;
using testing::boolean_lattice;
using testing::chain;
using testing::cx;
using testing::map_of;
using testing::poset;

namespace {

SimplicialComplex lk(const Poset& p, Element x) { return *link(order_complex(p), p.label(x)); }

// Independent check of a report: certificate, compiled collapse, homology.
void check_report(const Poset& p, ElementSet q, const ReductionReport& r) {
  const SimplicialComplex from = order_complex(p);
  const SimplicialComplex to = *order_complex(p, q);
  CHECK(verify_ne_certificate(from, to, r.certificate));
  const CollapseSequence seq = certificate_to_collapse(from, r.certificate);
  CHECK(verify_collapse(from, to, seq));
  CHECK(seq.steps.size() * 2 == from.face_count() - to.face_count());
  CHECK(testing::betti(from) == testing::betti(to));
  CHECK(reduced_euler(from) == reduced_euler(to));
  CHECK(bits::count(q) + r.removal_order.size() == p.size());
}

}  // namespace

TEST_CASE("interval witnesses on small fixtures") {
  const Poset b2 = boolean_lattice(2);
  const Element bottom = b2.index_of("{}");
  CHECK(verify_witness(lk(b2, bottom), *interval_witness(b2, b2_closure(b2), bottom)));

  const Poset c = chain({"a", "b", "c"});
  const PosetMap f = map_of(c, {{"a", "a"}, {"b", "a"}, {"c", "c"}});
  const auto w = interval_witness(c, f, c.index_of("b"));
  CHECK(lk(c, c.index_of("b")) == cx({{"a", "c"}}));
  CHECK(verify_witness(cx({{"a", "c"}}), *w));

  CHECK_THROWS_AS(interval_witness(c, f, c.index_of("a")), PreconditionError);
  CHECK_THROWS_AS(interval_witness(c, map_of(c, {{"a", "b"}, {"b", "a"}, {"c", "c"}}), 0), PreconditionError);
}

TEST_CASE("a descent that needs elements outside the target interval removed") {
  // z < m < t and z < u < w < t; f(t) = m pulls t down, and u, w sit below t
  // but not below m, so they are removed before the cone on {z, m} remains.
  const Poset p = poset({"m", "t", "u", "w", "z"}, {{"z", "m"}, {"m", "t"}, {"z", "u"}, {"u", "w"}, {"w", "t"}});
  const PosetMap f = map_of(p, {{"z", "z"}, {"m", "m"}, {"u", "z"}, {"w", "z"}, {"t", "m"}});
  REQUIRE(f.flags().monotone);
  for (Element x = 0; x < p.size(); ++x) {
    if (f(x) == x) continue;
    CHECK(verify_witness(lk(p, x), *interval_witness(p, f, x)));
  }
  check_report(p, fixed_points(f), theorem_reduce(p, f, fixed_points(f)));
}

TEST_CASE("the lower interval is built without the upper one") {
  for (unsigned n = 2; n <= 5; ++n) {
    for_each_poset(n, [&](const Poset& p) {
      for_each_monotone_map(p, [&](const PosetMap& f) {
        for (Element x = 0; x < p.size(); ++x) {
          if (!p.less(f(x), x) || p.above(x) == 0) continue;
          const ElementSet down = p.below(x) | bits::bit(x);
          const auto lower_only = interval_witness(p, f, down, x);
          const auto below = open_interval(p, x, Side::below);
          const auto above = open_interval(p, x, Side::above);
          const auto lifted = join_witness(order_complex(below), lower_only, order_complex(above));
          CHECK(same_witness(*interval_witness(p, f, x), *lifted));
        }
      });
    });
  }
}

TEST_CASE("theorem_reduce examples") {
  const Poset b2 = boolean_lattice(2);
  const PosetMap phi = b2_closure(b2);
  const auto r = theorem_reduce(b2, phi, fixed_points(phi), {.emit_collapse = true});
  CHECK(r.certificate.removed == std::vector<std::string>{"{}", "{1}"});
  CHECK(*order_complex(b2, fixed_points(phi)) == cx({{"{2}", "{1,2}"}}));
  check_report(b2, fixed_points(phi), r);
  REQUIRE(r.collapse.has_value());
  CHECK(verify_collapse(order_complex(b2), cx({{"{2}", "{1,2}"}}), *r.collapse));

  CHECK(theorem_reduce(b2, phi, b2.all()).certificate.removed.empty());

  const Poset c = chain({"a", "b", "c"});
  const PosetMap k = map_of(c, {{"a", "b"}, {"b", "b"}, {"c", "b"}});
  const auto rc = theorem_reduce(c, k, bits::bit(c.index_of("b")));
  check_report(c, bits::bit(c.index_of("b")), rc);
  CHECK(search_ne_reduction(cx({{"a", "b", "c"}}), cx({{"b"}})).outcome == Outcome::found);
}

TEST_CASE("reduce_to_image examples") {
  const Poset b2 = boolean_lattice(2);
  CHECK(reduce_to_image(b2, PosetMap::identity(b2)).certificate.removed.empty());
  const PosetMap down = map_of(b2, {{"{}", "{}"}, {"{1}", "{}"}, {"{2}", "{2}"}, {"{1,2}", "{2}"}});
  const auto r = reduce_to_image(b2, down);
  CHECK(b2.labels_of(image(down)) == std::vector<std::string>{"{2}", "{}"});
  check_report(b2, image(down), r);
}

TEST_CASE("a subposet strictly between the fixed points and P") {
  // φ^|P∖Q| = φ still hits b, which is outside Q.
  const Poset c = chain({"a", "b", "c"});
  const PosetMap f = map_of(c, {{"a", "a"}, {"b", "a"}, {"c", "b"}});
  const ElementSet q = c.set_of(std::vector<std::string>{"a", "c"});
  const auto r = theorem_reduce(c, f, q);
  check_report(c, q, r);
  CHECK(bits::subset(image(r.gamma), q));
}

TEST_CASE("preconditions") {
  const Poset b2 = boolean_lattice(2);
  const PosetMap phi = b2_closure(b2);
  const PosetMap constant = map_of(b2, {{"{}", "{2}"}, {"{1}", "{2}"}, {"{2}", "{2}"}, {"{1,2}", "{2}"}});
  CHECK_THROWS_AS(theorem_reduce(b2, constant, b2.all()), PreconditionError);
  CHECK_THROWS_AS(theorem_reduce(b2, phi, bits::bit(b2.index_of("{2}"))), PreconditionError);
}

TEST_CASE("every monotone map on small posets, with several choices of Q") {
  std::mt19937_64 rng(11);
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_poset(n, [&](const Poset& p) {
      for_each_monotone_map(p, [&](const PosetMap& f) {
        const ElementSet fix = fixed_points(f);
        const ElementSet extra = p.all() & ~fix;
        const ElementSet mid = fix | (extra & rng());
        for (ElementSet q : {fix, image(f), mid, p.all()}) {
          const auto r = theorem_reduce(p, f, q, {.emit_collapse = true});
          check_report(p, q, r);
          REQUIRE(r.collapse.has_value());
          CHECK(verify_collapse(order_complex(p), *order_complex(p, q), *r.collapse));
        }
      });
    });
  }
}
