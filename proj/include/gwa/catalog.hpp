#pragma once

// Prebuilt GWA data with their expected localized Hochschild homology, and
// the end-to-end runner.

#include <functional>
#include <string>
#include <vector>

#include "gwa/hochschild.hpp"

namespace gwa {

struct ExtraCheck {
  std::string name;
  std::function<bool(const GwaDatum&)> holds;
};

struct ExampleSpec {
  std::string name;
  std::string title;
  std::string notes;
  BaseRing ring;
  BasePoly a;
  Endo sigma;
  std::vector<std::string> ore_templates;
  bool torus = false;        // a is a unit: the GWA is A #_R T itself
  bool report_only = false;  // no expected table
  AnswerModule expected;
  std::vector<ExtraCheck> extra;

  GwaDatum datum() const { return GwaDatum(ring, a, sigma); }
  OreSetSpec ore(int window) const { return OreSetSpec(ring, ore_templates, window); }
};

struct ExampleSummary {
  std::string name;
  std::string title;
  std::string notes;
};

std::vector<ExampleSummary> catalog_list();
/// Builds an entry; lambda is used by b_lambda only. Throws InvalidArgument.
ExampleSpec catalog_get(const std::string& name, const Rational& lambda = 2);

/// Ore templates for B_lambda chosen so that a = lambda - t(t+1) factors over
/// the windowed family.
std::vector<std::string> b_lambda_templates(const Rational& lambda);

struct RunParams {
  int bound = 4;
  int nmax = 3;
  int window = 3;
  Rational lambda = 2;
};

enum class Verdict { Match, Mismatch, Unstabilized, ReportOnly };
const char* verdict_name(Verdict v);

struct RunReport {
  std::string name;
  RunParams params;
  AnswerModule computed;
  AnswerModule expected;
  Verdict verdict = Verdict::Mismatch;
  std::vector<RelationCheck> relations;
  std::vector<std::string> diagnostics;
  double seconds = 0;
};

RunReport catalog_run(const std::string& name, const RunParams& params);
/// All entries in catalog order.
std::vector<RunReport> catalog_run_all(const RunParams& params);

}  // namespace gwa
