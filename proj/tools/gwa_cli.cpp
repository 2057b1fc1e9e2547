// Command-line front end: catalog runs, smash arithmetic, membership,
// isomorphism, modules and Hochschild tables.
//
// Exit codes: 0 success or Match, 1 Mismatch, 2 Unstabilized, 3 usage or input error.

#include <CLI11.hpp>
#include <iostream>

#include "gwa/errors.hpp"
#include "gwa/json_io.hpp"

using namespace gwa;

namespace {

constexpr int kUsage = 3;

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Mismatch: return 1;
    case Verdict::Unstabilized: return 2;
    default: return 0;
  }
}

void print_report(const RunReport& r, bool json, bool verbose) {
  if (json) {
    std::cout << report_to_json(r).dump() << "\n";
    return;
  }
  std::cout << r.name << ": " << verdict_name(r.verdict) << " (" << r.seconds << " s)\n";
  if (!verbose) return;
  std::cout << r.computed.render();
  if (!r.expected.degrees.empty()) std::cout << "expected:\n" << r.expected.render();
  for (const auto& c : r.relations) std::cout << "  relation " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
  for (const auto& d : r.diagnostics) std::cout << "  " << d << "\n";
}

void print_totals(const std::string& label, const std::vector<std::size_t>& t) {
  std::cout << label;
  for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? ", " : " (") << t[i];
  std::cout << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Weyl algebras: smash products, localization and Hochschild homology"};
  app.require_subcommand(1);

  RunParams params;
  std::string lambda = "2";
  bool json = false;
  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("--B", params.bound, "norm bound")->check(CLI::PositiveNumber);
    sub->add_option("--Nmax", params.nmax, "top homological degree")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", params.window, "Ore-set index window")->check(CLI::NonNegativeNumber);
    sub->add_option("--lambda", lambda, "parameter of b_lambda");
    sub->add_flag("--json", json, "one JSON report per line");
  };

  auto* list = app.add_subcommand("list", "catalog entries");
  std::string name;
  auto* run = app.add_subcommand("run", "run one catalog entry");
  run->add_option("name", name)->required();
  add_run_flags(run);
  auto* run_all = app.add_subcommand("run-all", "run every catalog entry");
  add_run_flags(run_all);

  std::string datum_path, elem_path, w1, w2;
  auto* mul = app.add_subcommand("mul", "product of two words in A #_R T");
  mul->add_option("datum", datum_path)->required();
  mul->add_option("word1", w1)->required();
  mul->add_option("word2", w2)->required();

  auto* member = app.add_subcommand("member", "is an element in the image of the GWA");
  member->add_option("datum", datum_path)->required();
  member->add_option("element", elem_path)->required();

  std::string sigma_path, eta_path;
  auto* iso = app.add_subcommand("iso", "isomorphism of A #_sigma T and A #_eta T");
  iso->add_option("sigma", sigma_path)->required();
  iso->add_option("eta", eta_path)->required();

  std::string module_path, ore_path;
  auto* module = app.add_subcommand("module", "verify a module, its height filtration and its localization");
  module->add_option("datum", datum_path)->required();
  module->add_option("module", module_path)->required();
  module->add_option("--ore", ore_path, "Ore set JSON (defaults to the datum's own)");

  std::string ring_path;
  bool separable = false;
  auto* hh = app.add_subcommand("hh", "truncated Hochschild homology of a ring or of A #_R T");
  hh->add_option("ring", ring_path)->required();
  hh->add_option("--sigma", sigma_path, "endomorphism JSON: homology of the smash product");
  hh->add_flag("--separable", separable, "sigma has finite order: use the separable reduction");
  hh->add_option("--B", params.bound)->check(CLI::PositiveNumber);
  hh->add_option("--Nmax", params.nmax)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    params.lambda = Rational(lambda);
  } catch (const std::invalid_argument&) {
    std::cerr << "bad --lambda " << lambda << "\n";
    return kUsage;
  }

  try {
    if (*list) {
      for (const auto& e : catalog_list()) std::cout << e.name << "  " << e.title << "\n    " << e.notes << "\n";
      return 0;
    }
    if (*run) {
      const RunReport r = catalog_run(name, params);
      print_report(r, json, true);
      return verdict_code(r.verdict);
    }
    if (*run_all) {
      int code = 0;
      for (const auto& r : catalog_run_all(params)) {
        print_report(r, json, false);
        const int c = verdict_code(r.verdict);
        if (c == 1 || (c == 2 && code == 0)) code = c;
      }
      return code;
    }
    if (*mul) {
      const DatumInput in = datum_from_json(read_json_file(datum_path));
      const SmashElement p = smash_mul(gwa_embed(w1, in.datum), gwa_embed(w2, in.datum), in.datum);
      std::cout << format_smash(p, in.datum.ring()) << "\n";
      return 0;
    }
    if (*member) {
      const DatumInput in = datum_from_json(read_json_file(datum_path));
      const Membership m = image_membership(element_from_json(read_json_file(elem_path), in.datum), in.datum);
      if (m.in_image)
        std::cout << "InImage\n";
      else
        std::cout << "NotInImage (witness degree " << m.witness << ")\n";
      return 0;
    }
    if (*iso) {
      const Json js = read_json_file(sigma_path), je = read_json_file(eta_path);
      const BaseRing ring = ring_from_json(js.at("ring"));
      const IsoWitness w = extension_iso_check(endo_from_json(js, ring), endo_from_json(je, ring), ring);
      if (w.isomorphic)
        std::cout << "Isomorphic (exponent " << w.exponent << ")\n";
      else
        std::cout << "NotIsomorphic\n";
      if (w.direct_product) std::cout << "direct product A x T\n";
      return 0;
    }
    if (*module) {
      const DatumInput in = datum_from_json(read_json_file(datum_path));
      const FiniteModule M = module_from_json(read_json_file(module_path), in.datum.ring().mode());
      const auto checks = verify_module(M, in.datum);
      for (const auto& c : checks) std::cout << "relation " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
      if (!module_ok(checks)) return 1;
      const HeightFiltration h = height_filtration(M, in.datum);
      std::cout << "height " << h.height << (h.capped ? " (cap reached)" : "") << ", dims";
      for (const auto& s : h.subspaces) std::cout << " " << s.size();
      std::cout << "\n";
      if (ore_path.empty() && in.ore_templates.empty()) return 0;
      const OreSetSpec S = ore_path.empty() ? OreSetSpec(in.datum.ring(), in.ore_templates, params.window)
                                            : ore_from_json(read_json_file(ore_path), in.datum.ring());
      const LocalizationReport rep = localized_module_check(M, in.datum, S);
      if (rep.status == LocalizationStatus::Certified) {
        std::cout << "V_S has dimension " << rep.quotient_dim << " (torsion " << rep.torsion_dim << ")\n";
      } else {
        std::cout << "inconclusive:";
        for (const auto& s : rep.singular) std::cout << " " << s;
        std::cout << " singular on V/V^[h], kernel " << rep.witness_dim << "\n";
      }
      return 0;
    }
    if (*hh) {
      const Json jr = read_json_file(ring_path);
      const BaseRing ring = ring_from_json(jr.contains("ring") ? jr.at("ring") : jr);
      if (sigma_path.empty()) {
        const BettiTable t = truncated_hh(ring, params.bound, params.nmax);
        print_totals("HH ranks", t.totals());
        std::cout << (t.all_stabilized() ? "stabilized\n" : "not stabilized\n");
        return t.all_stabilized() ? 0 : 2;
      }
      const Endo sigma = endo_from_json(read_json_file(sigma_path), ring);
      if (separable) {
        const SeparableResult r = hh_smash_separable(ring, sigma, params.bound, params.nmax);
        print_totals("CH1 ranks", r.ch1);
        print_totals("ranks over T", r.torus_ranks);
        return r.stabilized ? 0 : 2;
      }
      const TorusResult r = hh_smash_torus(ring, sigma, params.bound, params.nmax);
      std::cout << r.answer.render();
      return r.answer.all_stabilized() ? 0 : 2;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "json: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
