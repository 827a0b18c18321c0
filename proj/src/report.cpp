#include "liefix/report.hpp"

#include <algorithm>
#include <sstream>

namespace liefix {

namespace {

// Integers beyond 64 bits are written as decimal strings.
Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json element_json(const FiniteAbelianGroup::Element& x) { return Json(x); }

Json elements_json(const std::vector<FiniteAbelianGroup::Element>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(element_json(x));
  return out;
}

Json optional_string(const std::string& s) { return s.empty() ? Json(nullptr) : Json(s); }

std::string join(const std::vector<int>& v, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string element_str(const FiniteAbelianGroup::Element& x) {
  if (x.size() == 1) return std::to_string(x[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

std::string elements_str(const std::vector<FiniteAbelianGroup::Element>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + element_str(xs[i]);
  return s + "}";
}

std::string profile_str(const InvariantProfile& p) {
  return "(" + std::to_string(p.dim) + ", " + std::to_string(p.rank) + ", " + std::to_string(p.center_dim) + ", " +
         std::to_string(p.derived_dim) + ")";
}

std::string clique_json_name(const RootSystem& rs, const Permutation& p) { return clique_name(rs, p); }

Json clique_json(const std::string& name, const Permutation& p) {
  return Json{{"name", name}, {"permutation", p}, {"order", permutation_order(p)}};
}

std::string out_structure(int order) {
  switch (order) {
    case 1:
      return "1";
    case 2:
      return "Z/2";
    case 6:
      return "S3";
    default:
      return "order " + std::to_string(order);
  }
}

}  // namespace

Json to_json(const Cyc& x) {
  Json coeffs = Json::array();
  for (const auto& q : x.coeffs()) coeffs.push_back(Json::array({integer(q.get_num()), integer(q.get_den())}));
  return Json{{"order", x.order()}, {"coeffs", coeffs}};
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Automorphism& a) {
  return Json{{"provenance", to_string(a.provenance)},
              {"order", a.order},
              {"description", a.description},
              {"matrix", to_json(a.map)}};
}

Json to_json(const InvariantProfile& p) {
  return Json{{"dim", p.dim}, {"rank", p.rank}, {"center_dim", p.center_dim}, {"derived_dim", p.derived_dim}};
}

Json to_json(const RealFormID& r) {
  return Json{{"name", optional_string(r.name)},
              {"group", optional_string(r.group_name)},
              {"dim", r.dim},
              {"killing_signature",
               {{"negatives", r.signature.negatives}, {"positives", r.signature.positives}, {"zeros", r.signature.zeros}}},
              {"compact_part_dim", r.compact_part_dim},
              {"hermitian", r.hermitian},
              {"hodge_type", r.hodge_type}};
}

Json to_json(const CentralHom& c) {
  Json observed = Json::array();
  for (const auto& o : c.observed) observed.push_back(o ? to_json(*o) : Json(nullptr));
  Json values = Json::array();
  for (const auto& [z, v] : c.central_values) values.push_back(Json{{"z", to_json(z)}, {"c", to_json(v)}});
  auto list = [](const std::vector<Cyc>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_json(x));
    return out;
  };
  return Json{{"group", c.group},         {"automorphism", c.descriptor}, {"order", c.order},
              {"observed", observed},     {"central_values", values},     {"z_a", list(c.z_a)},
              {"generated", list(c.generated)}, {"multiplicative", c.multiplicative}, {"within_z_a", c.within_z_a},
              {"exact", c.exact}};
}

Json to_json(const Warning& w) { return Json{{"code", w.code}, {"message", w.message}}; }

// ---------------------------------------------------------------------------
// Table rows

TableRow table_row(const std::string& selector) {
  const AlgebraSpec spec = parse_selector(selector, false);
  const RootSystem rs = build_root_system(spec.type, spec.rank);
  TableRow row;
  row.dynkin = rs.label();
  row.algebra = spec.algebra_label();
  row.group = spec.group_label();
  const auto group = diagram_automorphism_group(rs);
  row.out_order = static_cast<int>(group.size());
  row.out_order_table = table_out_order(spec.type, spec.rank);
  row.out_structure = out_structure(row.out_order);
  for (const auto& p : group) row.out_elements.emplace_back(clique_json_name(rs, p), p);
  row.weight_lattice_quotient = weight_lattice_quotient(rs).factors;
  if (spec.group == GroupKind::SL && 2 * spec.matrix_size <= kMaxCyclotomicOrder) {
    const MatrixGroup g{GroupFamily::SL, spec.matrix_size};
    const long order = static_cast<long>(g.center().size());
    if (order > 1) row.center.factors = {order};
    row.center_source = "matrices";
  } else {
    row.center.factors = table_center(spec.type, spec.rank);
    row.center_source = "table";
  }
  return row;
}

Json to_json(const TableRow& row) {
  Json elements = Json::array();
  for (const auto& [name, p] : row.out_elements) elements.push_back(clique_json(name, p));
  return Json{{"dynkin", row.dynkin},
              {"algebra", row.algebra},
              {"group", row.group},
              {"out",
               {{"order", row.out_order},
                {"order_table", row.out_order_table},
                {"matches_table", row.out_order == row.out_order_table},
                {"structure", row.out_structure},
                {"elements", elements}}},
              {"center",
               {{"label", row.center.label()},
                {"factors", row.center.factors},
                {"source", row.center_source},
                {"weight_lattice_quotient", row.weight_lattice_quotient}}}};
}

// ---------------------------------------------------------------------------
// Classification tables

namespace {

Json class_json(const ClassEntry& e) {
  return Json{{"id", e.id},
              {"order", e.order},
              {"exact_order", e.exact_order},
              {"members", e.members},
              {"profile", to_json(e.profile)},
              {"eigendims", e.eigendims},
              {"fixed_subalgebra", optional_string(e.fixed_subalgebra)},
              {"fixed_subgroup", optional_string(e.fixed_subgroup)},
              {"hermitian", e.hermitian ? Json(*e.hermitian) : Json(nullptr)},
              {"hodge", e.hodge},
              {"real_form", e.real_form ? to_json(*e.real_form) : Json(nullptr)},
              {"torus_exponents", e.exponents},
              {"representative", to_json(e.automorphism)}};
}

}  // namespace

Json to_json(const ClassificationTable& t) {
  Json cliques = Json::array();
  for (const auto& c : t.cliques) {
    Json classes = Json::array();
    for (const auto& e : c.classes) classes.push_back(class_json(e));
    cliques.push_back(Json{{"clique", clique_json(c.name, c.clique)}, {"skipped_twists", c.skipped}, {"classes", classes}});
  }
  return Json{{"algebra", t.spec.algebra_label()},
              {"dynkin", t.spec.dynkin()},
              {"group", t.spec.group_label()},
              {"order", t.order},
              {"cliques", cliques}};
}

// ---------------------------------------------------------------------------
// Fixed-point reports

Json to_json(const FixedPointReport& r) {
  Json components = Json::array();
  for (const auto& c : r.components) {
    components.push_back(Json{
        {"class_id", c.class_id},
        {"profile", to_json(c.profile)},
        {"fixed_subalgebra", optional_string(c.fixed_subalgebra)},
        {"fixed_subgroup", optional_string(c.fixed_subgroup)},
        {"eigendims", c.eigendims},
        {"higgs", {{"k", c.higgs_k}, {"dim", c.higgs_dim}, {"space", c.higgs_space}}},
        {"representation", c.representation},
        {"geometry", c.geometry},
        {"real_form", c.real_form ? to_json(*c.real_form) : Json(nullptr)},
        {"gamma",
         {{"lower", elements_json(c.gamma.lower)},
          {"upper", elements_json(c.gamma.upper)},
          {"exact", c.gamma.exact},
          {"method", c.gamma.method},
          {"probe", c.gamma.probe ? to_json(*c.gamma.probe) : Json(nullptr)}}},
        {"alpha_status", c.alpha_status}});
  }
  Json alpha = nullptr;
  if (r.query.alpha) alpha = elements_json(*r.query.alpha);
  return Json{{"group", r.group},
              {"algebra", r.query.spec.algebra_label()},
              {"clique", clique_json(r.clique_name, r.query.clique)},
              {"variant", r.variant},
              {"order", r.query.order},
              {"k", r.query.k},
              {"genus", r.query.genus},
              {"alpha", alpha},
              {"center",
               {{"label", r.center.group.label()},
                {"factors", r.center.group.factors},
                {"source", r.center.source},
                {"a_action", r.center.action}}},
              {"z_a", elements_json(r.z_a)},
              {"h1_order", r.h1_order},
              {"compatible_alpha_count", r.compatible_alpha_count},
              {"degenerate", r.degenerate},
              {"components", components},
              {"disclaimer", r.disclaimer}};
}

Json envelope(std::uint64_t seed, const Json& query, const Json& payload, const std::vector<Warning>& warnings) {
  Json w = Json::array();
  for (const auto& x : warnings) w.push_back(to_json(x));
  return Json{{"version", kToolVersion}, {"seed", seed}, {"query", query}, {"payload", payload}, {"warnings", w}};
}

// ---------------------------------------------------------------------------
// Markdown

std::string to_markdown(const TableRow& row) {
  std::ostringstream os;
  os << "## " << row.dynkin;
  if (!row.algebra.empty()) os << " (" << row.algebra << ", " << row.group << ")";
  os << "\n\n| quantity | value |\n|---|---|\n";
  os << "| Out (diagram symmetries) | " << row.out_structure << ", order " << row.out_order
     << (row.out_order == row.out_order_table ? " (matches table)" : " (table says " + std::to_string(row.out_order_table) + ")")
     << " |\n";
  os << "| centre of the simply connected group | " << row.center.label() << " (source: " << row.center_source
     << ") |\n";
  FiniteAbelianGroup pq{row.weight_lattice_quotient};
  os << "| P/Q from the Cartan matrix | " << pq.label() << " |\n";
  os << "\nDiagram symmetries:";
  for (const auto& [name, p] : row.out_elements) {
    os << " " << name << " [" << join(p, ",") << "]";
  }
  os << "\n";
  return os.str();
}

std::string to_markdown(const ClassificationTable& t) {
  std::ostringstream os;
  os << "## Classes of order dividing " << t.order << " in " << t.spec.algebra_label() << " (" << t.spec.dynkin()
     << ")\n";
  for (const auto& c : t.cliques) {
    os << "\n### Clique " << c.name << " [" << join(c.clique, ",") << "], order " << c.clique_order << ": "
       << c.classes.size() << " class" << (c.classes.size() == 1 ? "" : "es");
    if (c.skipped) os << " (" << c.skipped << " twists of other orders skipped)";
    os << "\n\n| id | order | fixed dim | profile (dim, rank, centre, derived) | eigendims | fixed subalgebra | "
          "real form | Hermitian | Hodge | members |\n|---|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& e : c.classes) {
      os << "| " << e.id << " | " << e.order << (e.exact_order ? "" : "*") << " | " << e.profile.dim << " | "
         << profile_str(e.profile) << " | " << join(e.eigendims) << " | "
         << (e.fixed_subalgebra.empty() ? "-" : e.fixed_subalgebra) << " | "
         << (e.real_form && !e.real_form->name.empty() ? e.real_form->name : "-") << " | "
         << (e.hermitian ? (*e.hermitian ? "yes" : "no") : "-") << " | " << (e.hodge ? "yes" : "no") << " | "
         << e.members << " |\n";
    }
  }
  os << "\nOrders marked * divide the query order without equalling it.\n";
  return os.str();
}

std::string to_markdown(const FixedPointReport& r) {
  std::ostringstream os;
  os << "## Fixed points of iota(" << r.clique_name << ", " << r.variant << ") on M(" << r.group << ")\n\n";
  os << "- order n = " << r.query.order << ", k = " << r.query.k << ", genus " << r.query.genus << "\n";
  os << "- centre Z = " << r.center.group.label() << " (source: " << r.center.source << ")";
  if (!r.center.group.factors.empty()) {
    os << ", a-action matrix [";
    for (std::size_t i = 0; i < r.center.action.size(); ++i) {
      os << (i ? "; " : "");
      for (std::size_t j = 0; j < r.center.action[i].size(); ++j) os << (j ? " " : "") << r.center.action[i][j];
    }
    os << "]";
  }
  os << "\n- Z_a = " << elements_str(r.z_a) << "; |H^1(X,Z)| = " << r.h1_order << ", compatible alpha: "
     << r.compatible_alpha_count << "\n";
  if (r.query.alpha) os << "- alpha = " << elements_str(*r.query.alpha) << "\n";
  if (r.degenerate) os << "- degenerate query: the map is the identity\n";
  os << "\n" << r.components.size() << " component" << (r.components.size() == 1 ? "" : "s") << ":\n\n";
  os << "| class | fixed subgroup | profile | Higgs field | representations | geometry | Gamma bound | alpha |\n"
        "|---|---|---|---|---|---|---|---|\n";
  for (const auto& c : r.components) {
    std::string fixed = !c.fixed_subgroup.empty() ? c.fixed_subgroup : !c.fixed_subalgebra.empty() ? c.fixed_subalgebra : "-";
    os << "| " << c.class_id << " | " << fixed << " | " << profile_str(c.profile) << " | " << c.higgs_space << ", dim "
       << c.higgs_dim << " | " << c.representation << " | " << c.geometry << " | " << elements_str(c.gamma.lower)
       << (c.gamma.exact ? "" : " to " + elements_str(c.gamma.upper)) << " | " << c.alpha_status << " |\n";
  }
  os << "\n" << r.disclaimer << "\n";
  return os.str();
}

std::string warnings_markdown(const std::vector<Warning>& warnings) {
  if (warnings.empty()) return "";
  std::ostringstream os;
  os << "\n### Warnings\n\n";
  for (const auto& w : warnings) os << "- `" << w.code << "`: " << w.message << "\n";
  return os.str();
}

}  // namespace liefix
