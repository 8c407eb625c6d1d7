#include "doctest.h"
#include "s1m/invariants.hpp"
#include "support.hpp"

using namespace s1m;
using testing::datum;
using L = EdgeLabel;

TEST_CASE("validation reports the failing condition") {
  const ValidationReport r1 = validate(datum("{b=3;(o,g=0,f=2,s=0,t=0)}"));
  CHECK(r1.has(Condition::principal_euler));

  const ValidationReport r2 = validate(datum("{b=0;(o,g=0,f=0,s=0,t=0);(4,2)}"));
  CHECK(r2.has(Condition::seifert_pairs));

  CHECK(validate(datum("{b=5;(o,g=2,f=0,s=0,t=0);(3,1)}")).ok());

  const ValidationReport r4 = validate(datum("{b=0;(n,g=1,f=0,s=0,t=0);(5,4)}"));
  CHECK(r4.has(Condition::seifert_pairs));

  CHECK(validate(datum("{b=0;(o,g=0,f=0,s=0,t=0);G=[<F,SE>]}")).has(Condition::corner_graph));
  CHECK(validate(datum("{b=0;(n,g=0,f=0,s=0,t=0)}")).has(Condition::nonorientable_genus));
  CHECK(validate(datum("{b=0;(o,g=0,f=0,s=0,t=0);(1,1)}")).has(Condition::seifert_pairs));
  CHECK(validate(datum("{b=1;(o,g=0,f=0,s=0,t=0);G=[<F,SP>]}")).has(Condition::principal_euler));
  CHECK(validate(datum("{b=2;(n,g=1,f=0,s=0,t=0)}")).has(Condition::principal_euler));
  CHECK(validate(datum("{b=1;(n,g=1,f=0,s=0,t=0);(2,1)}")).has(Condition::principal_euler));
  CHECK(validate(datum("{b=1;(n,g=1,f=0,s=0,t=0);(3,1)}")).ok());
}

TEST_CASE("validation collects every violation") {
  const ValidationReport r = validate(datum("{b=4;(n,g=0,f=1,s=0,t=0);(4,2);G=[<F,SE>]}"));
  CHECK(r.has(Condition::principal_euler));
  CHECK(r.has(Condition::seifert_pairs));
  CHECK(r.has(Condition::corner_graph));
  CHECK(r.has(Condition::nonorientable_genus));
  CHECK(r.violations.size() >= 4);
}

TEST_CASE("condition names") {
  OrbitInvariants inv;
  inv.graph.cycles = {{L::F, L::RP, L::SE, L::K, L::SE, L::RP, L::F, L::SP}};
  CHECK(validate(inv).ok());
  CHECK(derived_counts(inv).rp_per_cycle == std::vector<std::int64_t>{2});
  CHECK(to_string(Condition::parity) == "parity");
  CHECK(to_string(Condition::principal_euler) == "(1)");
}

TEST_CASE("normalize") {
  const OrbitInvariants a = normalize(datum("{b=0;(n,g=1,f=0,s=0,t=0);(5,4)}"));
  REQUIRE(a.pairs.size() == 1);
  CHECK(a.pairs[0] == SeifertPair{5, 1});

  CHECK(normalize(datum("{b=3;(n,g=1,f=0,s=0,t=0)}")).b == 1);
  CHECK(normalize(datum("{b=-1;(n,g=2,f=0,s=0,t=0)}")).b == 1);
  CHECK(normalize(datum("{b=1;(n,g=1,f=0,s=0,t=0);(2,1)}")).b == 0);
  CHECK(normalize(datum("{b=5;(o,g=2,f=0,s=0,t=0);(3,1)}")).b == 5);
  CHECK_THROWS_AS(normalize(datum("{b=3;(o,g=0,f=2,s=0,t=0)}")), InvalidDatum);
  try {
    normalize(datum("{b=0;(o,g=0,f=0,s=0,t=0);(4,2)}"));
  } catch (const InvalidDatum& e) {
    CHECK(e.report().has(Condition::seifert_pairs));
  }
}

TEST_CASE("derived counts") {
  const DerivedCounts c1 = derived_counts(datum("{b=0;(o,g=0,f=0,s=0,t=0);G=[<F,SP>]}"));
  CHECK(c1.f0_minus_f == 1);
  CHECK(c1.s_p == 1);
  CHECK(c1.v_f == 2);
  CHECK(c1.v_s == 0);
  CHECK(c1.r_p == 0);

  const DerivedCounts c2 = derived_counts(datum("{b=0;(o,g=0,f=0,s=0,t=0);G=[<F,RP,SE,RP>]}"));
  CHECK(c2.f0_minus_f == 1);
  CHECK(c2.s0_minus_s == 1);
  CHECK(c2.r_p == 2);
  CHECK(c2.v_f == 2);
  CHECK(c2.v_s == 2);
  CHECK(2 * c2.s_p + c2.r_p == c2.v_f);
  CHECK(parity_identities_hold(c2));

  const DerivedCounts c3 = derived_counts(datum("{b=0;(o,g=0,f=0,s=0,t=0)}"));
  CHECK(c3.f0_minus_f == 0);
  CHECK(c3.s0_minus_s == 0);
  CHECK(c3.s_p == 0);
  CHECK(c3.k == 0);
  CHECK(c3.r_p == 0);
  CHECK(c3.v_f == 0);
  CHECK(c3.v_s == 0);
}

TEST_CASE("canonical forms and equivalence") {
  CHECK(canonical_form(datum("{b=0;(o,g=0,f=0,s=0,t=0);(5,2),(3,1)}")) ==
        canonical_form(datum("{b=0;(o,g=0,f=0,s=0,t=0);(3,1),(5,2)}")));
  CHECK(canonical_form(datum("{b=0;(o,g=0,f=0,s=0,t=0);G=[<SP,F>]}")).graph_canon ==
        canonical_form(datum("{b=0;(o,g=0,f=0,s=0,t=0);G=[<F,SP>]}")).graph_canon);
  CHECK(canonical_form(datum("{b=0;(o,g=1,f=1,s=0,t=0)}")) !=
        canonical_form(datum("{b=0;(o,g=1,f=0,s=1,t=0)}")));

  CHECK(equivalent(datum("{b=0;(o,g=1,f=0,s=0,t=0);(7,3),(3,1),(5,2)}"),
                   datum("{b=0;(o,g=1,f=0,s=0,t=0);(5,2),(7,3),(3,1)}")));
  CHECK(equivalent(datum("{b=0;(n,g=1,f=0,s=0,t=0);(5,4)}"), datum("{b=0;(n,g=1,f=0,s=0,t=0);(5,1)}")));
  CHECK_FALSE(equivalent(datum("{b=1;(o,g=0,f=0,s=0,t=0)}"), datum("{b=-1;(o,g=0,f=0,s=0,t=0)}")));
  CHECK_THROWS_AS(canonical_form(datum("{b=3;(o,g=0,f=2,s=0,t=0)}")), InvalidDatum);

  const CanonicalForm f = canonical_form(datum("{b=0;(o,g=0,f=0,s=0,t=0);(5,2),(3,1)}"));
  CHECK(std::hash<CanonicalForm>{}(f) ==
        std::hash<CanonicalForm>{}(canonical_form(datum("{b=0;(o,g=0,f=0,s=0,t=0);(3,1),(5,2)}"))));
}

TEST_CASE("two-dimensional classification") {
  CHECK(classify_2d(1, 1, 0) == Surface2d::disk);
  CHECK(classify_2d(0, 0, 2) == Surface2d::klein_bottle);
  CHECK(classify_2d(2, 0, 0) == Surface2d::cylinder);
  CHECK(classify_2d(1, 0, 1) == Surface2d::mobius_band);
  CHECK(classify_2d(0, 2, 0) == Surface2d::sphere);
  CHECK(classify_2d(0, 1, 1) == Surface2d::projective_plane);
  CHECK(classify_2d(0, 0, 0) == Surface2d::torus);
  CHECK_FALSE(classify_2d(3, 0, 0).has_value());
  CHECK(to_string(Surface2d::mobius_band) == "Mobius band");
}
