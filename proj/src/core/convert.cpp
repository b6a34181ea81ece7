#include "core/convert.hpp"

#include <sstream>

namespace vprdf {

std::string CaseLabel::name() const {
  std::string base_name;
  switch (base) {
    case BaseCase::None: base_name = "none"; break;
    case BaseCase::Subject: base_name = "subject_linked"; break;
    case BaseCase::Object: base_name = "object_linked"; break;
    case BaseCase::Both: base_name = "both_linked"; break;
  }
  if (!predicate_linked) return base_name;
  if (base == BaseCase::None) return "predicate_linked";
  return base_name + "+predicate_linked";
}

const std::vector<std::string>& report_case_names() {
  static const std::vector<std::string> names = {
      "none",
      "subject_linked",
      "object_linked",
      "both_linked",
      "predicate_linked",
      "subject_linked+predicate_linked",
      "object_linked+predicate_linked",
      "both_linked+predicate_linked",
      "passthrough",
  };
  return names;
}

std::size_t ConversionReport::input_triple_count() const {
  std::size_t n = 0;
  for (const auto& [name, count] : case_counts) n += count;
  return n;
}

std::string format_report(const ConversionReport& r) {
  std::ostringstream out;
  out << "case                              triples\n";
  for (const auto& name : report_case_names()) {
    auto it = r.case_counts.find(name);
    std::size_t n = it == r.case_counts.end() ? 0 : it->second;
    out << name;
    for (std::size_t i = name.size(); i < 34; ++i) out << ' ';
    out << n << "\n";
  }
  out << "total                             " << r.input_triple_count() << "\n";
  out << "emitted link statements: " << r.emitted_statement_count << "\n";
  out << "minted predicate classes: " << r.minted_class_count << "\n";
  out << "viewpoints used:";
  if (r.viewpoints_used.empty()) out << " (none)";
  for (const auto& v : r.viewpoints_used) out << " " << v;
  out << "\n";
  out << "unmatched labels (" << r.unmatched_labels.size() << "):";
  if (r.unmatched_labels.empty()) out << " (none)";
  for (const auto& l : r.unmatched_labels) out << " " << l;
  out << "\n";
  return out.str();
}

std::string minted_class_iri(const Term& predicate) {
  return iri_namespace(predicate.value()) + "Class_" +
         normalize_label(iri_local_part(predicate.value()));
}

std::string minted_value_predicate_iri(const Term& predicate) {
  return iri_namespace(predicate.value()) +
         normalize_label(iri_local_part(predicate.value())) + "_value";
}

bool is_minted_helper(const Triple& t) {
  if (!t.subject.is_iri() || !t.predicate.is_iri()) return false;
  const std::string& s = t.subject.value();
  const std::string& p = t.predicate.value();
  if (iri_namespace(s) != iri_namespace(p)) return false;
  std::string sloc = iri_local_part(s);
  std::string ploc = iri_local_part(p);
  constexpr std::size_t class_len = 6;  // "Class_"
  constexpr std::size_t value_len = 6;  // "_value"
  if (sloc.size() <= class_len || ploc.size() <= value_len) return false;
  if (sloc.compare(0, class_len, "Class_") != 0) return false;
  if (ploc.compare(ploc.size() - value_len, value_len, "_value") != 0) return false;
  return sloc.substr(class_len) == ploc.substr(0, ploc.size() - value_len);
}

Classification classify_triple(const Triple& t, const ViewpointModel& m,
                               const ConversionConfig& cfg) {
  double theta = cfg.theta.value_or(m.theta());
  int min_support = cfg.min_support.value_or(m.min_support());

  Classification c;
  if (auto label = local_name(t.subject))
    c.subject_predictions = m.predict_term(*label, theta, min_support);
  if (auto label = local_name(t.object))
    c.object_predictions = m.predict_term(*label, theta, min_support);
  if (auto label = local_name(t.predicate))
    c.predicate_predictions = m.predict_predicate(*label, theta, min_support);

  bool s = !c.subject_predictions.empty();
  bool o = !c.object_predictions.empty();
  c.label.base = s && o   ? BaseCase::Both
                 : s      ? BaseCase::Subject
                 : o      ? BaseCase::Object
                          : BaseCase::None;
  c.label.predicate_linked = !c.predicate_predictions.empty();
  return c;
}

namespace {

// One resource→viewpoint link. Direct form is a single triple; the reified
// form introduces a statement node. Literals cannot stand as triple subjects,
// so their links are always reified.
void emit_link(std::vector<Triple>& out, const Term& resource,
               const std::string& viewpoint, const ConversionConfig& cfg) {
  const VpVocabulary& voc = cfg.vocabulary;
  Term vp = Term::iri(voc.viewpoint_iri(viewpoint));
  Term link_pred = Term::iri(voc.link_predicate());

  if (cfg.reified || resource.is_literal()) {
    Term stmt = Term::iri(voc.statement_iri(resource, viewpoint));
    out.emplace_back(stmt, Term::iri(rdf_ns::kType), Term::iri(voc.class_statement()));
    out.emplace_back(stmt, Term::iri(voc.prop_subject_stmt()), resource);
    out.emplace_back(stmt, Term::iri(voc.prop_predicate_stmt()), link_pred);
    out.emplace_back(stmt, Term::iri(voc.prop_object_stmt()), vp);
  } else {
    out.emplace_back(resource, link_pred, vp);
  }
  out.emplace_back(vp, Term::iri(rdf_ns::kType), Term::iri(voc.class_viewpoint()));
  out.emplace_back(link_pred, Term::iri(rdf_ns::kType), Term::iri(voc.class_pred_with_vp()));
}

}  // namespace

std::vector<Triple> convert_triple(const Triple& t, const Classification& classification,
                                   const ConversionConfig& cfg) {
  std::vector<Triple> out;
  out.push_back(t);  // the original statement is always kept

  for (const auto& p : classification.subject_predictions)
    emit_link(out, t.subject, p.viewpoint, cfg);
  for (const auto& p : classification.object_predictions)
    emit_link(out, t.object, p.viewpoint, cfg);

  if (!classification.predicate_predictions.empty()) {
    Term minted_class = Term::iri(minted_class_iri(t.predicate));
    Term value_pred = Term::iri(minted_value_predicate_iri(t.predicate));
    out.emplace_back(minted_class, value_pred, t.object);
    for (const auto& p : classification.predicate_predictions)
      emit_link(out, minted_class, p.viewpoint, cfg);
  }
  return out;
}

std::vector<Triple> schema_axioms(const VpVocabulary& voc) {
  auto iri = [](const std::string& s) { return Term::iri(s); };
  Term sub_class_of = iri(rdf_ns::kSubClassOf);
  Term domain = iri(rdf_ns::kDomain);
  Term range = iri(rdf_ns::kRange);
  return {
      {iri(voc.class_viewpoint()), sub_class_of, iri(rdf_ns::kResource)},
      {iri(voc.class_pred_with_vp()), sub_class_of, iri(rdf_ns::kProperty)},
      {iri(voc.class_statement()), sub_class_of, iri(rdf_ns::kStatement)},
      {iri(voc.prop_subject_stmt()), domain, iri(voc.class_statement())},
      {iri(voc.prop_subject_stmt()), range, iri(rdf_ns::kResource)},
      {iri(voc.prop_predicate_stmt()), domain, iri(voc.class_statement())},
      {iri(voc.prop_predicate_stmt()), range, iri(voc.class_pred_with_vp())},
      {iri(voc.prop_object_stmt()), domain, iri(voc.class_statement())},
      {iri(voc.prop_object_stmt()), range, iri(voc.class_viewpoint())},
  };
}

std::pair<Graph, ConversionReport> convert_graph(const Graph& g, const ViewpointModel& m,
                                                 const ConversionConfig& cfg) {
  ConversionReport report;
  for (const auto& name : report_case_names()) report.case_counts[name] = 0;

  std::vector<Triple> out;
  out.reserve(g.size() * 2);
  std::set<std::pair<std::string, std::string>> links_emitted;  // (resource form, viewpoint)
  std::set<std::string> classes_minted;

  for (const Triple& t : g) {
    if (cfg.vocabulary.mentions(t) || is_minted_helper(t)) {
      out.push_back(t);
      report.case_counts["passthrough"] += 1;
      continue;
    }

    Classification c = classify_triple(t, m, cfg);
    report.case_counts[c.label.name()] += 1;

    auto note_matches = [&](const Term& term, const std::vector<Prediction>& preds) {
      auto label = local_name(term);
      if (!label) return;
      if (preds.empty()) {
        report.unmatched_labels.insert(*label);
        return;
      }
      for (const auto& p : preds) report.viewpoints_used.insert(p.viewpoint);
    };
    note_matches(t.subject, c.subject_predictions);
    note_matches(t.object, c.object_predictions);
    note_matches(t.predicate, c.predicate_predictions);

    for (const auto& p : c.subject_predictions)
      links_emitted.insert({ntriples_form(t.subject), p.viewpoint});
    for (const auto& p : c.object_predictions)
      links_emitted.insert({ntriples_form(t.object), p.viewpoint});
    if (!c.predicate_predictions.empty()) {
      std::string minted = minted_class_iri(t.predicate);
      classes_minted.insert(minted);
      for (const auto& p : c.predicate_predictions)
        links_emitted.insert({"<" + minted + ">", p.viewpoint});
    }

    auto converted = convert_triple(t, c, cfg);
    out.insert(out.end(), std::make_move_iterator(converted.begin()),
               std::make_move_iterator(converted.end()));
  }

  if (cfg.emit_schema) {
    auto axioms = schema_axioms(cfg.vocabulary);
    out.insert(out.end(), axioms.begin(), axioms.end());
  }

  report.emitted_statement_count = links_emitted.size();
  report.minted_class_count = classes_minted.size();
  return {Graph(std::move(out)), std::move(report)};
}

}  // namespace vprdf
