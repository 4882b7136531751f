#include <doctest.h>

#include "autocomm/catalog.hpp"
#include "autocomm/isoclinism.hpp"
#include "support/oracles.hpp"

using namespace autocomm;

TEST_CASE("autocommutator map is well-defined and matches hand values") {
  const FiniteGroup z4 = cyclic_group(4);
  const AutomorphismGroup a = enumerate_automorphisms(z4);
  const AutocommutatorMap m = autocommutator_map(z4, a);
  CHECK(m.quot.group.order == 2);

  // Identity coset maps to the identity under every automorphism.
  for (size_t i = 0; i < a.elements.size(); ++i) CHECK(m.value[0][i] == 0);

  // The coset {1,3} under inversion lands on 2, whichever representative.
  const int coset13 = m.quot.coset_of[1];
  REQUIRE(m.quot.coset_of[3] == coset13);
  CHECK(m.value[coset13][1] == 2);

  const FiniteGroup s3 = make_group(oracles::s3_table());
  const AutomorphismGroup as = enumerate_automorphisms(s3);
  const AutocommutatorMap ms = autocommutator_map(s3, as);
  // A transposition coset paired with conjugation by that transposition is a
  // fixed point, so the value is the identity.
  int transposition = -1;
  for (int x = 1; x < 6; ++x)
    if (s3.element_order(x) == 2) {
      transposition = x;
      break;
    }
  std::vector<int> conj(6);
  for (int x = 0; x < 6; ++x)
    conj[x] = s3.mul(s3.mul(transposition, x), s3.inv(transposition));
  const int conj_idx = as.index_of(conj);
  REQUIRE(conj_idx >= 0);
  CHECK(ms.value[ms.quot.coset_of[transposition]][conj_idx] == 0);
}

TEST_CASE("every corpus group is autoisoclinic to itself and invariance holds") {
  for (const FiniteGroup& g : standard_corpus(12)) {
    CAPTURE(g.name);
    const AutoisoclinismResult r = find_autoisoclinism(g, g);
    REQUIRE(r.status == IsoclinismStatus::Found);
    const InvarianceVerdict v = verify_invariance(g, g, *r.witness);
    CHECK(v.distributions_match);
    CHECK(v.bijection_ok);
  }
}

TEST_CASE("Z3 vs Z4 is a definitive none") {
  const AutoisoclinismResult r = find_autoisoclinism(cyclic_group(3), cyclic_group(4));
  CHECK(r.status == IsoclinismStatus::None);
  CHECK_FALSE(r.reject_reason.empty());
}

TEST_CASE("aut-order mismatch is rejected before any search") {
  const AutoisoclinismResult r = find_autoisoclinism(cyclic_group(5), cyclic_group(4));
  CHECK(r.status == IsoclinismStatus::None);
  CHECK(r.reject_reason == "|Aut(G)| != |Aut(H)|");
  CHECK(r.pairs_checked == 0);
}

TEST_CASE("budget 0 exhausts on a pair that passes prescreening") {
  IsoclinismOptions opts;
  opts.budget = 0;
  const AutoisoclinismResult r =
      find_autoisoclinism(cyclic_group(4), cyclic_group(4), opts);
  CHECK(r.status == IsoclinismStatus::BudgetExceeded);
}

TEST_CASE("prescreen rejections agree with the exhaustive search on orders <= 8") {
  const std::vector<FiniteGroup> corpus = standard_corpus(8);
  IsoclinismOptions full;
  full.prescreen = false;
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i + 1; j < corpus.size(); ++j) {
      const AutoisoclinismResult screened = find_autoisoclinism(corpus[i], corpus[j]);
      if (!screened.reject_reason.empty()) {
        const AutoisoclinismResult exhaustive =
            find_autoisoclinism(corpus[i], corpus[j], full);
        CAPTURE(corpus[i].name);
        CAPTURE(corpus[j].name);
        CHECK(exhaustive.status == IsoclinismStatus::None);
      }
    }
}

TEST_CASE("witnesses found between distinct groups verify") {
  // Groups sharing all invariants; whether a witness exists is decided by the
  // search, and any witness must pass full verification.
  const std::vector<FiniteGroup> corpus = standard_corpus(12);
  int found = 0;
  for (size_t i = 0; i < corpus.size(); ++i)
    for (size_t j = i + 1; j < corpus.size(); ++j) {
      const AutoisoclinismResult r = find_autoisoclinism(corpus[i], corpus[j]);
      if (r.status == IsoclinismStatus::Found) {
        ++found;
        const InvarianceVerdict v = verify_invariance(corpus[i], corpus[j], *r.witness);
        CHECK(v.distributions_match);
        CHECK(v.bijection_ok);
      }
    }
  // Isomorphic pairs were deduplicated, so any hit here is a genuinely
  // non-isomorphic autoisoclinic pair; record how many turned up.
  MESSAGE("non-isomorphic autoisoclinic pairs found: ", found);
}

TEST_CASE("malformed witnesses are rejected") {
  const FiniteGroup z4 = cyclic_group(4);
  const AutoisoclinismResult r = find_autoisoclinism(z4, z4);
  REQUIRE(r.status == IsoclinismStatus::Found);
  Autoisoclinism bad = *r.witness;
  bad.psi.pop_back();
  CHECK_THROWS_AS(verify_invariance(z4, z4, bad), InvalidSpecError);
}
