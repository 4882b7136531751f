#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "autocomm/limits.hpp"
#include "autocomm/rational.hpp"

namespace autocomm {

struct SurveyRow {
  std::string name;
  int order = 0;
  long long aut_order = 0;
  int l_size = 0;
  int k_size = 0;
  int s_size = 0;
  int orbit_count = 0;
  Rational pr;
  std::optional<Rational> b6_bound;  // absent when G = L(G)
  bool b6_equality = false;
  std::optional<Rational> b7_bound;  // absent for abelian groups
  bool b7_equality = false;
};

/// One row per corpus group. Rows are computed with `jobs` worker threads and
/// come back sorted by (order, name); the output is deterministic regardless
/// of the job count.
std::vector<SurveyRow> run_survey(int max_order, int jobs = 1, const Limits& limits = {});

std::string survey_csv(const std::vector<SurveyRow>& rows);
std::string survey_text(const std::vector<SurveyRow>& rows);
nlohmann::ordered_json survey_json(const std::vector<SurveyRow>& rows);

}  // namespace autocomm
