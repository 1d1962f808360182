#include "torelli/json_io.hpp"

namespace torelli::json_io {

using nlohmann::json;

json to_json(const Weight& w) {
  return json{{"g", w.rank()}, {"coeffs", w.coeffs()}};
}

json to_json(const VirtualRep& r) {
  json terms = json::array();
  for (const auto& [w, m] : r.terms())
    terms.push_back(json{{"weight", w.coeffs()}, {"mult", m.str()}});
  return json{{"g", r.rank()}, {"terms", terms}};
}

Weight weight_from_json(const json& j) {
  return Weight(j.at("g").get<int>(), j.at("coeffs").get<std::vector<int>>());
}

VirtualRep virtual_rep_from_json(const json& j) {
  VirtualRep r(j.at("g").get<int>());
  for (const auto& t : j.at("terms"))
    r.add(Weight(r.rank(), t.at("weight").get<std::vector<int>>()),
          Int(t.at("mult").get<std::string>()));
  return r;
}

json to_json(const presentation::GradedQuotientReport& r) {
  json dims = json::array(), ideal = json::array();
  for (const auto& d : r.dims) dims.push_back(d.str());
  for (const auto& d : r.ideal_dims) ideal.push_back(d.str());
  return json{{"schema_version", kSchemaVersion},
              {"cutoff", r.cutoff},
              {"dims", dims},
              {"ideal_dims", ideal},
              {"fingerprint", r.presentation_fingerprint}};
}

namespace {
std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}
}  // namespace

json to_json(const johnson::VerifiedConstants& vc) {
  json checks = json::array();
  for (const auto& c : vc.checks)
    checks.push_back(json{{"name", c.name},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
  return json{{"schema_version", kSchemaVersion},
              {"g", vc.g},
              {"pass", vc.pass},
              {"constants",
               {{"c_coefficient", rat_str(vc.constants.c_coefficient)},
                {"c0_point", rat_str(vc.constants.c0_point)},
                {"c0_diagonal", rat_str(vc.constants.c0_diagonal)},
                {"gamma_degree", vc.constants.gamma_degree},
                {"gamma_tate_twist", vc.constants.gamma_tate_twist},
                {"sign_c", vc.constants.sign_c},
                {"sign_c0", vc.constants.sign_c0}}},
              {"checks", checks},
              {"notes", vc.notes}};
}

json to_json(const std::vector<johnson::WalkReport>& walks) {
  json out = json::array();
  for (const auto& w : walks)
    out.push_back(json{{"target", w.target},
                       {"weight", w.weight},
                       {"literal_worked", w.literal_worked},
                       {"resolved_sequence", w.resolved_sequence},
                       {"highest_weight_found", w.highest_weight_found}});
  return out;
}

json to_json(const presentations::AbelianGroupStructure& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(t.str());
  json j{{"schema_version", kSchemaVersion},
         {"free_rank", h.free_rank.str()},
         {"torsion", torsion}};
  if (h.degenerate_flag) {
    j["degenerate"] = true;
    j["note"] = h.note;
  }
  return j;
}

json to_json(const presentations::RankSeries& rs) {
  json ranks = json::array();
  for (const auto& r : rs.ranks) ranks.push_back(r.str());
  return json{{"schema_version", kSchemaVersion}, {"ranks", ranks}};
}

json presentation_document(freelie::Context& ctx, const presentation::GradedPresentation& p) {
  json gens = json::array();
  for (int i = 0; i < p.generators.size(); ++i)
    gens.push_back(json{{"name", p.generators.names[i]}, {"degree", p.generators.degrees[i]}});
  json rels = json::array();
  for (const auto& rel : p.relations) {
    auto deg = ctx.degree_of(rel);
    rels.push_back(json{{"degree", deg ? *deg : 0},
                        {"expr", presentation::print_element(ctx, rel)}});
  }
  json j{{"schema_version", kSchemaVersion},
         {"name", p.name},
         {"g", p.g},
         {"n", p.n},
         {"r", p.r},
         {"generators", gens},
         {"relations", rels},
         {"fingerprint", presentation::fingerprint(ctx, p)}};
  if (p.has_central_gamma) {
    j["central_gamma"] = true;
    j["gamma_tate_twist"] = p.gamma_tate_twist;
  }
  if (!p.notes.empty()) j["notes"] = p.notes;
  return j;
}

}  // namespace torelli::json_io
