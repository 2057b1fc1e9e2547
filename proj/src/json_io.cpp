#include "gwa/json_io.hpp"

#include <fstream>

#include "gwa/errors.hpp"

namespace gwa {

namespace {

std::map<std::string, std::string> string_map(const Json& j) {
  std::map<std::string, std::string> out;
  if (j.is_null()) return out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value().get<std::string>();
  return out;
}

Json poly_map(const std::vector<BasePoly>& polys, const BaseRing& ring) {
  Json out = Json::object();
  for (std::size_t i = 0; i < polys.size(); ++i) out[ring.vars()[i].name] = ring.format(polys[i]);
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

BaseRing ring_from_json(const Json& j) {
  try {
    const ScalarMode mode = parse_mode(j.value("mode", std::string("Q")));
    std::vector<VarSpec> vars;
    for (const auto& v : j.at("vars")) vars.push_back({v.at("name").get<std::string>(), v.value("laurent", false), {}});
    const BaseRing free(vars, {}, mode);
    std::vector<BasePoly> rels;
    for (const auto& r : j.value("relations", Json::array())) rels.push_back(free.parse(r.get<std::string>()));
    return BaseRing(vars, rels, mode);
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("ring: ") + e.what());
  }
}

Json ring_to_json(const BaseRing& ring) {
  Json vars = Json::array();
  for (const auto& v : ring.vars()) vars.push_back({{"name", v.name}, {"laurent", v.invertible}});
  Json rels = Json::array();
  for (const auto& r : ring.relations()) rels.push_back(ring.format(r));
  return {{"mode", mode_name(ring.mode())}, {"vars", vars}, {"relations", rels}};
}

Endo endo_from_json(const Json& j, const BaseRing& ring) {
  try {
    const auto images = string_map(j.value("images", Json::object()));
    if (!images.empty() && !j.contains("inverse"))
      throw Error(Errc::InvalidArgument, "endo: an \"inverse\" map is required");
    return Endo::from_strings(ring, images, string_map(j.value("inverse", Json::object())));
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("endo: ") + e.what());
  }
}

Json endo_to_json(const Endo& sigma) {
  return {{"images", poly_map(sigma.images(), sigma.ring())},
          {"inverse", poly_map(sigma.inverse_images(), sigma.ring())}};
}

DatumInput datum_from_json(const Json& j) {
  try {
    if (j.contains("catalog")) {
      const Rational lambda(j.value("lambda", std::string("2")));
      const ExampleSpec ex = catalog_get(j.at("catalog").get<std::string>(), lambda);
      return {ex.datum(), ex.ore_templates};
    }
    const BaseRing ring = ring_from_json(j.at("ring"));
    const Endo sigma = endo_from_json(j.at("sigma"), ring);
    std::vector<std::string> ore;
    for (const auto& t : j.value("ore", Json::array())) ore.push_back(t.get<std::string>());
    return {GwaDatum(ring, ring.parse(j.at("a").get<std::string>()), sigma), ore};
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("datum: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(Errc::InvalidArgument, std::string("datum: bad lambda"));
  }
}

Json datum_to_json(const GwaDatum& D) {
  return {{"ring", ring_to_json(D.ring())}, {"a", D.ring().format(D.a())}, {"sigma", endo_to_json(D.sigma())}};
}

SmashElement element_from_json(const Json& j, const GwaDatum& D) {
  try {
    if (j.contains("word")) return gwa_embed(j.at("word").get<std::string>(), D);
    SmashElement e;
    for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it) {
      const BasePoly c = D.ring().parse(it.value().get<std::string>());
      if (!c.is_zero()) e.comp.emplace(std::stoi(it.key()), c);
    }
    return e;
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("element: ") + e.what());
  } catch (const std::logic_error&) {
    throw Error(Errc::InvalidArgument, "element: component keys must be integers");
  }
}

Json element_to_json(const SmashElement& e, const BaseRing& ring) {
  Json comp = Json::object();
  for (const auto& [n, c] : e.comp) comp[std::to_string(n)] = ring.format(c);
  return {{"components", comp}};
}

FiniteModule module_from_json(const Json& j, ScalarMode mode) {
  try {
    FiniteModule M;
    M.dim = j.at("dim").get<std::size_t>();
    M.mode = mode;
    for (auto it = j.at("action").begin(); it != j.at("action").end(); ++it) {
      Matrix m;
      for (const auto& row : it.value()) {
        std::vector<Scalar> r;
        for (const auto& v : row) r.push_back(Scalar::parse(mode, v.is_string() ? v.get<std::string>() : v.dump()));
        m.push_back(std::move(r));
      }
      M.action[it.key()] = std::move(m);
    }
    return M;
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("module: ") + e.what());
  }
}

Json module_to_json(const FiniteModule& M) {
  Json action = Json::object();
  for (const auto& [name, m] : M.action) action[name] = matrix_to_json(m);
  return {{"dim", M.dim}, {"action", action}};
}

OreSetSpec ore_from_json(const Json& j, const BaseRing& ring) {
  try {
    std::vector<std::string> templates;
    for (const auto& t : j.at("templates")) templates.push_back(t.get<std::string>());
    return OreSetSpec(ring, templates, j.value("window", 3));
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, std::string("ore set: ") + e.what());
  }
}

Json answer_to_json(const AnswerModule& a) {
  Json out = Json::array();
  for (const auto& d : a.degrees) {
    Json s = Json::array();
    for (const auto& m : d.summands) s.push_back({{"ring", m.ring}, {"rank", m.rank}});
    out.push_back({{"n", d.n}, {"summands", s}, {"stabilized", d.stabilized}});
  }
  return out;
}

Json report_to_json(const RunReport& r) {
  Json rels = Json::array();
  for (const auto& c : r.relations) rels.push_back({{"name", c.name}, {"pass", c.pass}});
  return {{"name", r.name},
          {"params",
           {{"B", r.params.bound}, {"Nmax", r.params.nmax}, {"window", r.params.window},
            {"lambda", r.params.lambda.get_str()}}},
          {"computed", answer_to_json(r.computed)},
          {"expected", answer_to_json(r.expected)},
          {"verdict", verdict_name(r.verdict)},
          {"relations", rels},
          {"diagnostics", r.diagnostics},
          {"seconds", r.seconds}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(Errc::InvalidArgument, path + ": " + e.what());
  }
}

}  // namespace gwa
