#include "orbimirror/serialize.hpp"

#include <sstream>

#include "orbimirror/quantum.hpp"

namespace orbimirror {

namespace {

Json weights_json(const Weights& w) {
  Json out = Json::array();
  for (auto wi : w.values()) out.push_back(wi);
  return out;
}

std::string join(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<std::string> matrix_row(const RationalMatrix& m, std::size_t r) {
  std::vector<std::string> row;
  for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
  return row;
}

/// Square matrix as a table: a "row" column holding the label, then one
/// column per label.
Table matrix_table(std::string name, const std::vector<std::string>& labels, const RationalMatrix& m) {
  Table t{std::move(name), {"row"}, {}};
  t.header.insert(t.header.end(), labels.begin(), labels.end());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::string> row{labels[r]};
    const auto values = matrix_row(m, r);
    row.insert(row.end(), values.begin(), values.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string label(const BasisClass& c) { return "eta(" + to_string(c.g.gamma) + ";" + std::to_string(c.d) + ")"; }

std::vector<std::string> basis_labels(const OrderedBasis& basis) {
  std::vector<std::string> out;
  for (const auto& c : basis.classes()) out.push_back(label(c));
  return out;
}

std::vector<std::string> index_labels(std::size_t mu) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < mu; ++k) out.push_back("e" + std::to_string(k));
  return out;
}

Table findings_table(const std::string& name, const Report& r) {
  Table t{name, {"status", "check", "detail"}, {}};
  for (const auto& f : r.findings) t.rows.push_back({std::string(to_string(r.status)), f.check, f.detail});
  if (r.findings.empty()) t.rows.push_back({std::string(to_string(r.status)), "", ""});
  return t;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Json element_json(const BasisClass& c) {
  Json j;
  j["gamma"] = to_string(c.g.gamma);
  j["d"] = c.d;
  return j;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(matrix_row(m, r));
  return out;
}

Json qpoly_json(const QPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json{{"q", to_string(e)}, {"c", to_string(c)}});
  return out;
}

Json report_json(const Report& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  Json findings = Json::array();
  for (const auto& f : r.findings) findings.push_back(Json{{"check", f.check}, {"detail", f.detail}});
  j["findings"] = std::move(findings);
  return j;
}

std::string render_tsv(const std::vector<Table>& tables) {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
    out << '\n';
  };
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (tables.size() > 1) {
      if (t) out << '\n';
      out << "# " << tables[t].name << '\n';
    }
    line(tables[t].header);
    for (const auto& row : tables[t].rows) line(row);
  }
  return out.str();
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

Document basis_document(const Weights& w) {
  const OrderedBasis basis(w);
  const MirrorIndexMap xi(w);
  Document doc{Json::array(), {{"basis", {"gamma", "d", "degree", "xi"}, {}}}};
  for (std::size_t a = 0; a < basis.size(); ++a) {
    Json row = element_json(basis[a]);
    row["degree"] = to_string(basis.degree(a));
    row["xi"] = xi.forward(a);
    doc.json.push_back(std::move(row));
    doc.tables[0].rows.push_back({to_string(basis[a].g.gamma), std::to_string(basis[a].d), to_string(basis.degree(a)),
                                  std::to_string(xi.forward(a))});
  }
  return doc;
}

Document cup_document(const Weights& w) {
  const OrderedBasis basis(w);
  Document doc{Json::array(), {{"cup", {"a_gamma", "a_d", "b_gamma", "b_d", "coeff", "out_gamma", "out_d"}, {}}}};
  for (const auto& a : basis.classes())
    for (const auto& b : basis.classes()) {
      const auto t = cup(w, a, b);
      Json row;
      row["a"] = element_json(a);
      row["b"] = element_json(b);
      row["coeff"] = t ? to_string(t->coeff) : "0";
      row["out"] = t ? element_json(t->out) : Json(nullptr);
      doc.json.push_back(std::move(row));
      doc.tables[0].rows.push_back({to_string(a.g.gamma), std::to_string(a.d), to_string(b.g.gamma), std::to_string(b.d),
                                    t ? to_string(t->coeff) : "0", t ? to_string(t->out.g.gamma) : "0",
                                    t ? std::to_string(t->out.d) : "0"});
    }
  return doc;
}

Document pairing_document(const Weights& w) {
  const OrderedBasis basis(w);
  const RationalMatrix gram = gram_matrix(w);
  Document doc;
  Json elems = Json::array();
  for (const auto& c : basis.classes()) elems.push_back(element_json(c));
  doc.json["basis"] = std::move(elems);
  doc.json["matrix"] = matrix_json(gram);
  doc.tables.push_back(matrix_table("pairing", basis_labels(basis), gram));
  return doc;
}

Document smallqc_document(const Weights& w) {
  const OrderedBasis basis(w);
  Document doc;
  Json products = Json::array();
  Table t{"hyperplane_product", {"source_gamma", "source_d", "target_gamma", "target_d", "q", "c"}, {}};
  for (const auto& c : basis.classes()) {
    const CohClass image = quantum_mult_hyperplane(w, CohClass(c));
    Json terms = Json::array();
    for (const auto& [b, q] : image.terms()) {
      terms.push_back(Json{{"out", element_json(b)}, {"coeff", qpoly_json(q)}});
      for (const auto& [e, v] : q.terms())
        t.rows.push_back({to_string(c.g.gamma), std::to_string(c.d), to_string(b.g.gamma), std::to_string(b.d), to_string(e),
                          to_string(v)});
    }
    products.push_back(Json{{"a", element_json(c)}, {"product", std::move(terms)}});
  }
  const RationalMatrix a0 = a0_matrix_A(w);
  doc.json["hyperplane_product"] = std::move(products);
  doc.json["a0"] = matrix_json(a0);
  doc.tables.push_back(std::move(t));
  doc.tables.push_back(matrix_table("a0", basis_labels(basis), a0));
  return doc;
}

Document bside_document(const Weights& w) {
  const OmegaFrame frame(w);
  const auto mu = static_cast<std::size_t>(w.mu());
  Document doc;
  Json omega = Json::array();
  Table frame_table{"omega", {"k", "s", "sigma", "u_exponent", "w_power"}, {}};
  for (std::size_t k = 0; k < mu; ++k) {
    const auto [wpow, u] = frame.omega_exponents(k);
    omega.push_back(Json{{"k", k},
                         {"s", to_string(frame.s()[k])},
                         {"sigma", to_string(frame.sigma()[k])},
                         {"u", u},
                         {"w_power", wpow}});
    frame_table.rows.push_back({std::to_string(k), to_string(frame.s()[k]), to_string(frame.sigma()[k]), join(u), join(wpow)});
  }
  Json product = Json::array();
  Table product_table{"product", {"i", "j", "coeff", "target"}, {}};
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = 0; j < mu; ++j) {
      const auto p = b_product(frame, i, j);
      product.push_back(Json{{"i", i}, {"j", j}, {"coeff", to_string(p.coeff)}, {"target", p.target}});
      product_table.rows.push_back({std::to_string(i), std::to_string(j), to_string(p.coeff), std::to_string(p.target)});
    }
  const RationalMatrix metric = b_metric_matrix(frame);
  const RationalMatrix a0 = a0_matrix_B(frame);
  const auto spectrum = critical_spectrum_check(frame);
  Json poly = Json::array();
  Table poly_table{"char_poly", {"power", "coeff"}, {}};
  for (std::size_t e = 0; e < spectrum.char_poly.size(); ++e) {
    poly.push_back(to_string(spectrum.char_poly[e]));
    poly_table.rows.push_back({std::to_string(e), to_string(spectrum.char_poly[e])});
  }
  doc.json["omega"] = std::move(omega);
  doc.json["product"] = std::move(product);
  doc.json["metric"] = matrix_json(metric);
  doc.json["a0"] = matrix_json(a0);
  doc.json["char_poly"] = std::move(poly);
  doc.json["spectrum_ok"] = spectrum.ok;
  const auto labels = index_labels(mu);
  doc.tables = {std::move(frame_table), std::move(product_table), matrix_table("metric", labels, metric),
                matrix_table("a0", labels, a0), std::move(poly_table)};
  return doc;
}

Document mirror_document(const Weights& w, const Report& classical, const Report& quantum) {
  Document doc;
  doc.json["weights"] = weights_json(w);
  doc.json["classical"] = report_json(classical);
  doc.json["quantum"] = report_json(quantum);
  doc.tables = {findings_table("classical", classical), findings_table("quantum", quantum)};
  return doc;
}

Document reconstruct_document(const Potential& p) {
  Document doc{Json::array(), {{"potential", {"alpha", "A"}, {}}}};
  for (const auto& [alpha, value] : p.nonzero_coefficients()) {
    doc.json.push_back(Json{{"alpha", alpha}, {"A", to_string(value)}});
    doc.tables[0].rows.push_back({join(std::vector<std::int64_t>(alpha.begin(), alpha.end())), to_string(value)});
  }
  return doc;
}

Document selftest_document(const Weights& w, const Report& report) {
  Document doc;
  doc.json["weights"] = weights_json(w);
  const Json r = report_json(report);
  doc.json["status"] = r["status"];
  doc.json["findings"] = r["findings"];
  doc.tables = {findings_table("selftest", report)};
  return doc;
}

}  // namespace orbimirror
