#include "core/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace vprdf {

namespace {

using nlohmann::json;

void check_thresholds(double theta, int min_support) {
  if (!(theta >= 0.0 && theta <= 1.0))
    throw std::invalid_argument("theta must lie in [0, 1]");
  if (min_support < 1)
    throw std::invalid_argument("min_support must be at least 1");
}

}  // namespace

ViewpointModel ViewpointModel::train(const std::vector<MvpOntology>& ontologies,
                                     double theta, int min_support,
                                     std::vector<std::string>* warnings) {
  if (ontologies.empty())
    throw std::invalid_argument("cannot train on an empty ontology list");
  check_thresholds(theta, min_support);

  ViewpointModel m;
  m.theta_ = theta;
  m.min_support_ = min_support;

  const std::string& domain = ontologies.front().domain_name();
  for (std::size_t i = 1; i < ontologies.size(); ++i) {
    if (warnings && ontologies[i].domain_name() != domain)
      warnings->push_back("ontology " + std::to_string(i + 1) + " has domain \"" +
                          ontologies[i].domain_name() + "\", expected \"" + domain + "\"");
  }

  for (const auto& o : ontologies) {
    auto links = extract_links(o);
    std::set<std::string> labels;
    std::set<std::pair<std::string, std::string>> label_vps;
    std::set<std::pair<std::string, ElementKind>> label_kinds;
    for (const auto& l : links) {
      labels.insert(l.label);
      label_vps.insert({l.label, l.viewpoint});
      label_kinds.insert({l.label, l.kind});
    }
    for (const auto& l : labels) m.containment_[l] += 1;
    for (const auto& [l, v] : label_vps) m.support_[l][v] += 1;
    for (const auto& [l, k] : label_kinds) m.kinds_[l][k] += 1;
  }
  return m;
}

std::vector<Prediction> ViewpointModel::predict_term(const std::string& label) const {
  return predict_term(label, theta_, min_support_);
}

std::vector<Prediction> ViewpointModel::predict_term(const std::string& label,
                                                     double theta, int min_support) const {
  check_thresholds(theta, min_support);
  std::vector<Prediction> out;
  auto sit = support_.find(label);
  auto cit = containment_.find(label);
  if (sit == support_.end() || cit == containment_.end()) return out;
  double total = static_cast<double>(cit->second);
  for (const auto& [viewpoint, count] : sit->second) {
    double confidence = static_cast<double>(count) / total;
    if (count >= min_support && confidence >= theta)
      out.push_back({viewpoint, confidence});
  }
  std::sort(out.begin(), out.end(), [](const Prediction& a, const Prediction& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    return a.viewpoint < b.viewpoint;
  });
  return out;
}

std::vector<Prediction> ViewpointModel::predict_predicate(const std::string& label) const {
  return predict_predicate(label, theta_, min_support_);
}

std::vector<Prediction> ViewpointModel::predict_predicate(const std::string& label,
                                                          double theta,
                                                          int min_support) const {
  auto kit = kinds_.find(label);
  if (kit == kinds_.end()) return {};
  bool relational = kit->second.count(ElementKind::Role) > 0 ||
                    kit->second.count(ElementKind::Attribute) > 0;
  if (!relational) return {};
  return predict_term(label, theta, min_support);
}

std::vector<std::string> ViewpointModel::viewpoints() const {
  std::set<std::string> vps;
  for (const auto& [label, per_vp] : support_)
    for (const auto& [v, n] : per_vp) vps.insert(v);
  return {vps.begin(), vps.end()};
}

int ViewpointModel::containment(const std::string& label) const {
  auto it = containment_.find(label);
  return it == containment_.end() ? 0 : it->second;
}

int ViewpointModel::support(const std::string& label, const std::string& viewpoint) const {
  auto it = support_.find(label);
  if (it == support_.end()) return 0;
  auto vit = it->second.find(viewpoint);
  return vit == it->second.end() ? 0 : vit->second;
}

void ViewpointModel::validate() const {
  check_thresholds(theta_, min_support_);
  for (const auto& [label, per_vp] : support_) {
    auto cit = containment_.find(label);
    if (cit == containment_.end() || cit->second < 1)
      throw ValidationError("label \"" + label + "\" has support but no containment");
    for (const auto& [v, count] : per_vp) {
      if (count < 0 || count > cit->second)
        throw ValidationError("support for (\"" + label + "\", \"" + v +
                              "\") exceeds containment");
    }
  }
  for (const auto& [label, n] : containment_)
    if (n < 1) throw ValidationError("containment for \"" + label + "\" is below 1");
}

std::string ViewpointModel::save() const {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["normalization"] = kNormalization;
  doc["theta"] = theta_;
  doc["min_support"] = min_support_;

  json containment = json::object();
  for (const auto& [label, n] : containment_) containment[label] = n;
  doc["containment"] = std::move(containment);

  json support = json::object();
  for (const auto& [label, per_vp] : support_) {
    json row = json::object();
    for (const auto& [v, n] : per_vp) row[v] = n;
    support[label] = std::move(row);
  }
  doc["support"] = std::move(support);

  // Kind multisets flatten to sorted lists; repeats carry the multiplicity.
  json kinds = json::object();
  for (const auto& [label, per_kind] : kinds_) {
    json row = json::array();
    std::vector<std::string> names;
    for (const auto& [kind, n] : per_kind)
      for (int i = 0; i < n; ++i) names.push_back(element_kind_name(kind));
    std::sort(names.begin(), names.end());
    for (const auto& name : names) row.push_back(name);
    kinds[label] = std::move(row);
  }
  doc["kinds"] = std::move(kinds);

  return doc.dump(2) + "\n";
}

ViewpointModel ViewpointModel::load(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, 0);
  }
  if (!doc.is_object()) throw ParseError("model document is not an object", 0, 0);

  auto version = doc.value("format_version", std::string());
  if (version != kFormatVersion)
    throw ValidationError("unsupported model format_version \"" + version + "\"");
  auto normalization = doc.value("normalization", std::string());
  if (normalization != kNormalization)
    throw ValidationError("unsupported normalization scheme \"" + normalization + "\"");

  ViewpointModel m;
  try {
    m.theta_ = doc.at("theta").get<double>();
    m.min_support_ = doc.at("min_support").get<int>();
    for (auto it = doc.at("containment").begin(); it != doc.at("containment").end(); ++it)
      m.containment_[it.key()] = it.value().get<int>();
    for (auto it = doc.at("support").begin(); it != doc.at("support").end(); ++it) {
      auto& row = m.support_[it.key()];
      for (auto vit = it.value().begin(); vit != it.value().end(); ++vit)
        row[vit.key()] = vit.value().get<int>();
    }
    for (auto it = doc.at("kinds").begin(); it != doc.at("kinds").end(); ++it) {
      auto& row = m.kinds_[it.key()];
      for (const auto& name : it.value()) {
        auto kind = element_kind_from_name(name.get<std::string>());
        if (!kind)
          throw ValidationError("unknown element kind \"" + name.get<std::string>() + "\"");
        row[*kind] += 1;
      }
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model document: ") + e.what(), 0, 0);
  }
  m.validate();
  return m;
}

}  // namespace vprdf
