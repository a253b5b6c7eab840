#include "frontsheaf/report.hpp"

#include <sstream>

#include "frontsheaf/cobar.hpp"

namespace frontsheaf {

namespace {

using nlohmann::json;

json matrix_json(const FMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json aug_json(const Augmentation& eps) {
  json values = json::object();
  for (const auto& [id, v] : eps.values) values[id] = v;
  return values;
}

json check_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["instances"] = c.instances;
  j["pass"] = c.pass;
  if (!c.failures.empty()) j["failures"] = c.failures;
  return j;
}

}  // namespace

json front_report(const FrontComplex& front) {
  json j;
  j["stage"] = "validate";
  j["front"] = front.name;
  json cells = json::array();
  for (const SimplexIndex& I : front.cells()) {
    json c;
    c["cell"] = simplex_name(I);
    c["dim"] = simplex_dim(I);
    json order = json::array();
    for (const std::string& s : front.sheet_order(I)) order.push_back(s);
    c["sheets"] = std::move(order);
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  std::vector<std::string> diags = front.validate();
  j["diagnostics"] = diags;
  j["pass"] = diags.empty();
  return j;
}

json dga_report(const SimplicialDGA& dga) {
  json j;
  j["stage"] = "dga";
  j["front"] = dga.front().name;
  json gens = json::array();
  for (const DgaGenerator& g : dga.generators()) {
    json e;
    e["id"] = g.id;
    e["cell"] = simplex_name(g.cell);
    e["degree"] = g.degree;
    e["differential"] = dga.diff_generator(g.id).str();
    gens.push_back(std::move(e));
  }
  j["generator_count"] = dga.generators().size();
  j["generators"] = std::move(gens);
  bool d2 = dga.check_d_squared();
  j["d_squared_zero"] = d2;
  j["pass"] = d2;
  return j;
}

json augs_report(const SimplicialDGA& dga, PrimeField field,
                 unsigned long long bound) {
  json j;
  j["stage"] = "augs";
  j["front"] = dga.front().name;
  j["field"] = field.modulus();
  json table = json::array();
  auto augs = enumerate_augmentations(dga, field, bound);
  for (const Augmentation& eps : augs) table.push_back(aug_json(eps));
  j["count"] = augs.size();
  j["augmentations"] = std::move(table);
  j["pass"] = true;
  return j;
}

json chd_report(const SimplicialDGA& dga, PrimeField field,
                unsigned long long bound) {
  json j;
  j["stage"] = "chd";
  j["front"] = dga.front().name;
  j["field"] = field.modulus();
  json list = json::array();
  bool all_valid = true;
  auto augs = enumerate_augmentations(dga, field, bound);
  for (size_t n = 0; n < augs.size(); ++n) {
    CHD chd = aug_to_chd(dga, augs[n]);
    json e;
    e["augmentation"] = n;
    e["values"] = aug_json(augs[n]);
    json cells = json::object();
    for (const auto& [cell, m] : chd.c) cells[simplex_name(cell)] = matrix_json(m);
    e["c"] = std::move(cells);
    std::vector<std::string> diags = validate_chd(dga.front(), chd);
    e["diagnostics"] = diags;
    e["valid"] = diags.empty();
    all_valid = all_valid && diags.empty();
    list.push_back(std::move(e));
  }
  j["count"] = augs.size();
  j["diagrams"] = std::move(list);
  j["pass"] = all_valid;
  return j;
}

json sheaf_report(const FrontComplex& front, PrimeField field,
                  unsigned long long bound) {
  json j;
  j["stage"] = "sheaf";
  j["front"] = front.name;
  j["field"] = field.modulus();
  StratPoset P = build_strata(front);
  json strata = json::array();
  for (const Stratum& s : P.strata()) {
    json e;
    e["id"] = s.id;
    e["handle"] = handle_name(s.handle);
    e["slot"] = s.slot;
    e["type"] = type_name(s.type);
    e["dim"] = s.dim;
    e["level"] = s.level;
    e["below"] = s.below;
    e["exceptional"] = s.exceptional;
    PreliminaryModule pm = preliminary_X(front, P, s.id);
    json basis = json::array();
    for (int i = 0; i < pm.X.dim(); ++i)
      basis.push_back(pm.X.label(i) + ":" + std::to_string(pm.X.degree(i)));
    e["module"] = std::move(basis);
    strata.push_back(std::move(e));
  }
  j["strata"] = std::move(strata);
  json edges = json::array();
  for (const StratEdge& e : P.edges()) {
    json x;
    x["from"] = e.from;
    x["to"] = e.to;
    x["downward"] = e.downward;
    x["generalized_downward"] = e.generalized_downward;
    x["same_level"] = e.same_level;
    edges.push_back(std::move(x));
  }
  j["edges"] = std::move(edges);
  SimplicialDGA dga(front);
  auto augs = enumerate_augmentations(dga, field, bound);
  json per_aug = json::array();
  for (size_t n = 0; n < augs.size(); ++n) {
    SheafFunctor F = build_sheaf(front, P, aug_to_chd(dga, augs[n]));
    int total = 0;
    for (const Stratum& s : P.strata()) total += F.at(s.id).module().dim();
    json e;
    e["augmentation"] = n;
    e["total_cylinder_dim"] = total;
    per_aug.push_back(std::move(e));
  }
  j["count"] = augs.size();
  j["sheaves"] = std::move(per_aug);
  j["pass"] = true;
  return j;
}

json verify_report(const FrontComplex& front, PrimeField field,
                   unsigned long long bound) {
  json j;
  j["stage"] = "verify";
  j["front"] = front.name;
  j["field"] = field.modulus();
  StratPoset P = build_strata(front);
  SimplicialDGA dga(front);
  auto augs = enumerate_augmentations(dga, field, bound);
  j["count"] = augs.size();
  bool all = check_X_functor(front, P, field);
  j["module_functor"] = all;
  VerifyCache cache;
  json per_aug = json::array();
  for (size_t n = 0; n < augs.size(); ++n) {
    SheafFunctor F = build_sheaf(front, P, aug_to_chd(dga, augs[n]));
    VerifyOptions opt;
    // The composition-law and diagram-morphism checks depend only on the
    // front and the field, so one augmentation covers them all.
    opt.functor_laws = opt.morphisms = (n == 0);
    AxiomReport rep = verify_axioms(F, opt, &cache);
    json e;
    e["augmentation"] = n;
    json checks = json::array();
    for (const CheckResult& c : rep.checks) checks.push_back(check_json(c));
    e["checks"] = std::move(checks);
    json ranks = json::object();
    bool ranks_ok = true;
    for (const Stratum& s : P.strata())
      if (s.type == StratumType::Legendrian2) {
        int r = microlocal_rank(F, s.id, &cache);
        ranks[s.slot + "@" + handle_name(s.handle)] = r;
        ranks_ok = ranks_ok && r == 1;
      }
    e["microlocal_ranks"] = std::move(ranks);
    bool ok = rep.all_pass() && ranks_ok;
    e["pass"] = ok;
    all = all && ok;
    per_aug.push_back(std::move(e));
  }
  j["augmentations"] = std::move(per_aug);
  j["pass"] = all;
  return j;
}

json full_report(const FrontComplex& front, PrimeField field,
                 unsigned long long bound) {
  json j;
  j["stage"] = "report";
  j["front"] = front.name;
  j["validate"] = front_report(front);
  SimplicialDGA dga(front);
  j["dga"] = dga_report(dga);
  j["augs"] = augs_report(dga, field, bound);
  j["chd"] = chd_report(dga, field, bound);
  j["sheaf"] = sheaf_report(front, field, bound);
  j["verify"] = verify_report(front, field, bound);
  j["pass"] = j["validate"]["pass"].get<bool>() && j["dga"]["pass"].get<bool>() &&
              j["chd"]["pass"].get<bool>() && j["verify"]["pass"].get<bool>();
  return j;
}

namespace {

bool is_flat_array(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_object() || e.is_array()) return false;
  return true;
}

void render(const json& j, const std::string& indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_flat_array(value))) {
        out << indent << key << ":\n";
        render(value, indent + "  ", out);
      } else {
        out << indent << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object() || (e.is_array() && !is_flat_array(e))) {
        out << indent << "-\n";
        render(e, indent + "  ", out);
      } else {
        out << indent << "- " << e.dump() << "\n";
      }
    }
  } else {
    out << indent << j.dump() << "\n";
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  render(report, "", out);
  return out.str();
}

}  // namespace frontsheaf
