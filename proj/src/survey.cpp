#include "autocomm/survey.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "autocomm/autocommuting.hpp"
#include "autocomm/catalog.hpp"

namespace autocomm {

namespace {

SurveyRow survey_one(const FiniteGroup& g, const Limits& limits) {
  const AutomorphismGroup a = enumerate_automorphisms(g, limits);
  DistributionOptions dopts;
  dopts.oracle_cap = limits.oracle_cap;
  const AutocommutingReport r = analyze_group(g, a, dopts);

  SurveyRow row;
  row.name = g.name;
  row.order = g.order;
  row.aut_order = r.aut_order;
  row.l_size = r.absolute_center.size();
  row.k_size = r.autocommutator_subgroup.size();
  row.s_size = static_cast<int>(r.autocommutator_set.size());
  row.orbit_count = r.orbit_count;
  row.pr = r.pr;

  if (!r.absolute_center.is_whole_group()) {
    const long long p = smallest_prime_divisor(a.order());
    const long long q = smallest_prime_divisor(g.order);
    row.b6_bound = Rational(p + q - 1, p * q);
    row.b6_equality = (r.pr == *row.b6_bound);
    if (!g.is_abelian()) {
      row.b7_bound = Rational(q * q + p - 1, p * q * q);
      row.b7_equality = (r.pr == *row.b7_bound);
    }
  }
  return row;
}

}  // namespace

std::vector<SurveyRow> run_survey(int max_order, int jobs, const Limits& limits) {
  const std::vector<FiniteGroup> corpus = standard_corpus(max_order, limits);
  std::vector<SurveyRow> rows(corpus.size());

  if (jobs < 1) jobs = 1;
  if (!corpus.empty()) jobs = std::min<int>(jobs, static_cast<int>(corpus.size()));
  if (jobs == 1) {
    for (size_t i = 0; i < corpus.size(); ++i) rows[i] = survey_one(corpus[i], limits);
  } else {
    // Workers pull indices from a shared counter; each result lands in its
    // own slot, so the assembled vector is independent of scheduling.
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (size_t i = next.fetch_add(1); i < corpus.size(); i = next.fetch_add(1))
            rows[i] = survey_one(corpus[i], limits);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  // The corpus is already (order, name)-sorted; keep the contract explicit.
  std::stable_sort(rows.begin(), rows.end(), [](const SurveyRow& a, const SurveyRow& b) {
    return a.order != b.order ? a.order < b.order : a.name < b.name;
  });
  return rows;
}

namespace {

std::string opt_str(const std::optional<Rational>& r) { return r ? r->str() : "-"; }

std::string opt_flag(const std::optional<Rational>& r, bool flag) {
  return r ? (flag ? "true" : "false") : "-";
}

}  // namespace

std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << "name,order,aut_order,L,K,S,orbit_count,pr,b6_bound,b6_equality,b7_bound,b7_equality\n";
  for (const SurveyRow& r : rows) {
    out << r.name << ',' << r.order << ',' << r.aut_order << ',' << r.l_size << ','
        << r.k_size << ',' << r.s_size << ',' << r.orbit_count << ',' << r.pr.str() << ','
        << opt_str(r.b6_bound) << ',' << opt_flag(r.b6_bound, r.b6_equality) << ','
        << opt_str(r.b7_bound) << ',' << opt_flag(r.b7_bound, r.b7_equality) << '\n';
  }
  return out.str();
}

std::string survey_text(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "name" << std::right << std::setw(6) << "|G|"
      << std::setw(8) << "|Aut|" << std::setw(5) << "|L|" << std::setw(5) << "|K|"
      << std::setw(5) << "|S|" << std::setw(7) << "orbs" << std::setw(10) << "pr"
      << std::setw(10) << "B6" << std::setw(6) << "eq" << std::setw(10) << "B7"
      << std::setw(6) << "eq" << "\n";
  for (const SurveyRow& r : rows) {
    out << std::left << std::setw(10) << r.name << std::right << std::setw(6) << r.order
        << std::setw(8) << r.aut_order << std::setw(5) << r.l_size << std::setw(5)
        << r.k_size << std::setw(5) << r.s_size << std::setw(7) << r.orbit_count
        << std::setw(10) << r.pr.str() << std::setw(10) << opt_str(r.b6_bound)
        << std::setw(6) << opt_flag(r.b6_bound, r.b6_equality) << std::setw(10)
        << opt_str(r.b7_bound) << std::setw(6) << opt_flag(r.b7_bound, r.b7_equality)
        << "\n";
  }
  return out.str();
}

nlohmann::ordered_json survey_json(const std::vector<SurveyRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SurveyRow& r : rows) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["order"] = r.order;
    j["aut_order"] = r.aut_order;
    j["L"] = r.l_size;
    j["K"] = r.k_size;
    j["S"] = r.s_size;
    j["orbit_count"] = r.orbit_count;
    j["pr"] = r.pr.str();
    j["b6_bound"] = opt_str(r.b6_bound);
    j["b6_equality"] = r.b6_bound ? nlohmann::ordered_json(r.b6_equality)
                                  : nlohmann::ordered_json(nullptr);
    j["b7_bound"] = opt_str(r.b7_bound);
    j["b7_equality"] = r.b7_bound ? nlohmann::ordered_json(r.b7_equality)
                                  : nlohmann::ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace autocomm
