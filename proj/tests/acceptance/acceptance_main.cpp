// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Usage: autocomm_acceptance [path-to-autocomm-cli]
// The CLI path enables the byte-identical survey check at process level.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "autocomm/autocommuting.hpp"
#include "autocomm/catalog.hpp"
#include "autocomm/isoclinism.hpp"
#include "autocomm/survey.hpp"

#include "../support/oracles.hpp"

using namespace autocomm;

namespace {

std::string g_cli_path;

struct Criterion {
  int number;
  std::string name;
  std::function<void(std::ostream&)> run;  // throws on failure
};

struct CriterionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw CriterionFailure(what);
}

std::string run_process(const std::string& cmd, int* exit_code) {
  FILE* pipe = popen(cmd.c_str(), "r");
  require(pipe != nullptr, "failed to start: " + cmd);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

void criterion_formula_equivalence(std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  int groups = 0;
  long long values = 0;
  for (const FiniteGroup& g : standard_corpus(16)) {
    const AutomorphismGroup a = enumerate_automorphisms(g);
    const OrbitPartition p = orbits(g, a);
    for (int v = 0; v < g.order; ++v) {
      const Rational brute = pr_g_bruteforce(g, a, v);
      const Rational orbit = pr_g_orbit_formula(g, a, p, v);
      require(brute == orbit, g.name + ": formulas disagree at g=" + std::to_string(v) +
                                  " (" + brute.str() + " vs " + orbit.str() + ")");
      ++values;
    }
    require(pr_g_bruteforce(g, a, 0) == pr_acentralizer_sum(g, a),
            g.name + ": acentralizer sum disagrees at g=1");
    ++groups;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 60.0, "runtime " + std::to_string(secs) + "s exceeds 60s");
  log << groups << " groups, " << values << " values, "
      << static_cast<int>(secs * 1000) << " ms";
}

void criterion_known_values(std::ostream& log) {
  auto pr_of = [](const FiniteGroup& g) {
    const AutomorphismGroup a = enumerate_automorphisms(g);
    return distribution(g, a)[0];
  };
  require(pr_of(cyclic_group(3)) == Rational(2, 3), "Pr(Z3) != 2/3");
  require(pr_of(cyclic_group(4)) == Rational(3, 4), "Pr(Z4) != 3/4");
  require(pr_of(symmetric_group(3)) == Rational(1, 2), "Pr(S3) != 1/2");
  require(pr_of(dicyclic_group(2)) == Rational(3, 8), "Pr(Q8) != 3/8");

  const FiniteGroup z4 = cyclic_group(4);
  require(distribution(z4, enumerate_automorphisms(z4))[2] == Rational(1, 4),
          "Pr_2(Z4) != 1/4");

  int groups = 0;
  for (const FiniteGroup& g : standard_corpus(24)) {
    const std::vector<Rational> dist = distribution(g, enumerate_automorphisms(g));
    Rational sum(0, 1);
    for (const Rational& v : dist) sum += v;
    require(sum == Rational(1, 1), g.name + ": distribution sums to " + sum.str());
    ++groups;
  }
  log << "4 pinned values exact, sums checked on " << groups << " groups";
}

void criterion_bound_suite(std::ostream& log) {
  int groups = 0, entries = 0;
  for (const FiniteGroup& g : standard_corpus(24)) {
    const AutomorphismGroup a = enumerate_automorphisms(g);
    if (absolute_center(g, a).is_whole_group()) continue;
    const long long p = smallest_prime_divisor(a.order());
    const BoundReport r = bound_report(g, a);
    for (const BoundEntry& e : r.entries) {
      if (!e.applicable) continue;
      ++entries;
      require(e.holds, g.name + ": " + e.id + " (" + e.side + ") violated");
      if (e.id == "B3")
        require(e.equality == (e.g == 0),
                g.name + ": B3 equality pattern broken at g=" + std::to_string(*e.g));
      if (e.id == "B4")
        require(e.actual < Rational(1, p),
                g.name + ": B4 not strictly below 1/p at g=" + std::to_string(*e.g));
      if (e.id == "B10")
        require(e.actual >= e.bound, g.name + ": B8 bound fell below B9 bound");
    }
    ++groups;
  }
  log << entries << " applicable entries across " << groups << " groups";
}

void criterion_characterization(std::ostream& log) {
  {
    const FiniteGroup z4 = cyclic_group(4);
    const auto v = characterization_check(z4, enumerate_automorphisms(z4));
    require(v[0].hypothesis_met, "Z4 must trigger C1");
    require(v[0].details["p"].get<long long>() == 2 &&
                v[0].details["q"].get<long long>() == 2,
            "Z4: expected p = q = 2");
    require(v[0].conclusion_holds.value(), "Z4: quotient by L not verified as Z2");
  }
  {
    const FiniteGroup z3 = cyclic_group(3);
    const auto v = characterization_check(z3, enumerate_automorphisms(z3));
    require(v[0].hypothesis_met, "Z3 must trigger C1");
    require(v[0].details["q"].get<long long>() == 3, "Z3: expected q = 3");
    require(v[0].conclusion_holds.value(), "Z3: quotient by L not verified as Z3");
  }
  int triggered = 0;
  for (const FiniteGroup& g : standard_corpus(24)) {
    const auto verdicts = characterization_check(g, enumerate_automorphisms(g));
    for (const auto& v : verdicts) {
      if (v.id == "C3" || !v.hypothesis_met) continue;
      ++triggered;
      require(v.conclusion_holds.value(),
              g.name + ": " + v.id + " triggered but the quotient assertion failed");
    }
  }
  log << "C1/C2 triggered " << triggered << " times, all conclusions verified";
}

void criterion_product_rule(std::ostream& log) {
  const ProductRuleReport r = check_product_rule(cyclic_group(3), cyclic_group(4));
  require(r.aut_order_direct == 4, "|Aut(Z12)| != 4");
  require(r.aut_order_matches, "|Aut(Z12)| != |Aut(Z3)| * |Aut(Z4)|");
  require(r.pairs_checked == 12, "expected 12 pairs");
  require(r.all_pairs_equal, "a product pair violates the rule");
  log << "|Aut(Z12)| = 4, 12/12 pairs exact";
}

void criterion_inverse_symmetry(std::ostream& log) {
  int groups = 0;
  for (const FiniteGroup& g : standard_corpus(24)) {
    const std::vector<Rational> dist = distribution(g, enumerate_automorphisms(g));
    for (int v = 0; v < g.order; ++v)
      require(dist[v] == dist[g.inv(v)],
              g.name + ": Pr_g != Pr_{g^-1} at g=" + std::to_string(v));
    ++groups;
  }
  log << groups << " groups symmetric";
}

void criterion_lemma_checks(std::ostream& log) {
  int groups = 0;
  long long cases = 0;
  for (const FiniteGroup& g : standard_corpus(12)) {
    const AutomorphismGroup a = enumerate_automorphisms(g);
    const LemmaCheckResult coset = verify_coset_lemma(g, a);
    require(coset.ok, g.name + ": " + coset.detail);
    const LemmaCheckResult nonempty = verify_nonempty_criterion(g, a);
    require(nonempty.ok, g.name + ": " + nonempty.detail);
    cases += nonempty.cases_checked;
    ++groups;
  }
  log << groups << " groups, " << cases << " (x,g) cases";
}

void criterion_automorphism_oracle(std::ostream& log) {
  int groups = 0;
  for (const FiniteGroup& g : standard_corpus(10)) {
    const AutomorphismGroup a = enumerate_automorphisms(g);
    std::vector<std::vector<int>> expected =
        oracles::brute_force_automorphisms(g.order, g.table);
    std::sort(expected.begin(), expected.end());
    require(a.order() == static_cast<long long>(expected.size()),
            g.name + ": |Aut| = " + std::to_string(a.order()) + ", oracle says " +
                std::to_string(expected.size()));
    for (size_t i = 0; i < expected.size(); ++i)
      require(a.elements[i].images == expected[i], g.name + ": automorphism sets differ");
    ++groups;
  }
  require(enumerate_automorphisms(cyclic_group(8)).order() == 4, "|Aut(Z8)| != 4");
  require(enumerate_automorphisms(symmetric_group(3)).order() == 6, "|Aut(S3)| != 6");
  require(enumerate_automorphisms(dicyclic_group(2)).order() == 24, "|Aut(Q8)| != 24");
  require(enumerate_automorphisms(elementary_abelian_group(2, 3)).order() == 168,
          "|Aut(Z2^3)| != 168");
  log << groups << " groups against the all-bijections oracle; 4/6/24/168 reproduced";
}

void criterion_isoclinism(std::ostream& log) {
  int groups = 0;
  for (const FiniteGroup& g : standard_corpus(12)) {
    const AutoisoclinismResult r = find_autoisoclinism(g, g);
    require(r.status == IsoclinismStatus::Found, g.name + ": self-search failed");
    const InvarianceVerdict v = verify_invariance(g, g, *r.witness);
    require(v.distributions_match, g.name + ": distributions differ under beta");
    require(v.bijection_ok, g.name + ": pair bijection failed");
    ++groups;
  }
  const AutoisoclinismResult none = find_autoisoclinism(cyclic_group(3), cyclic_group(4));
  require(none.status == IsoclinismStatus::None, "(Z3, Z4) must be a definitive none");
  log << groups << " self-witnesses verified; (Z3,Z4) none";
}

void criterion_determinism(std::ostream& log) {
  const std::string a = survey_csv(run_survey(16, 1));
  const std::string b = survey_csv(run_survey(16, 4));
  require(a == b, "survey engine output differs across job counts");

  if (!g_cli_path.empty()) {
    const std::string cmd1 = g_cli_path + " survey --max-order 16 --format csv --jobs 1";
    const std::string cmd4 = g_cli_path + " survey --max-order 16 --format csv --jobs 4";
    int rc1 = 0, rc4 = 0, rc1b = 0, rc4b = 0;
    const std::string out1 = run_process(cmd1, &rc1);
    const std::string out4 = run_process(cmd4, &rc4);
    const std::string out1b = run_process(cmd1, &rc1b);
    const std::string out4b = run_process(cmd4, &rc4b);
    require(rc1 == 0 && rc4 == 0 && rc1b == 0 && rc4b == 0, "survey CLI run failed");
    require(out1 == out4 && out1 == out1b && out4 == out4b,
            "survey CLI output is not byte-identical");
    log << "engine and CLI byte-identical across jobs 1 and 4 (twice each)";
  } else {
    log << "engine byte-identical across jobs 1 and 4 (CLI path not given)";
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  const std::vector<Criterion> criteria{
      {1, "formula equivalence", criterion_formula_equivalence},
      {2, "known values", criterion_known_values},
      {3, "bound suite", criterion_bound_suite},
      {4, "characterization", criterion_characterization},
      {5, "product rule", criterion_product_rule},
      {6, "inverse symmetry", criterion_inverse_symmetry},
      {7, "lemma checks", criterion_lemma_checks},
      {8, "automorphism oracle", criterion_automorphism_oracle},
      {9, "isoclinism", criterion_isoclinism},
      {10, "determinism", criterion_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    try {
      c.run(log);
      std::cout << "[PASS] criterion " << c.number << " (" << c.name << "): "
                << log.str() << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] criterion " << c.number << " (" << c.name
                << "): " << e.what() << "\n";
    }
    std::cout.flush();
  }

  if (failures) {
    std::cout << failures << " of " << criteria.size() << " criteria failed\n";
    return 1;
  }
  std::cout << "all " << criteria.size() << " criteria passed\n";
  return 0;
}
