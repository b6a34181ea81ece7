#include "core/mvo.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "core/rdf.hpp"
#include "json.hpp"

namespace vprdf {

namespace {

using nlohmann::json;

std::string norm(const std::string& s, const char* what) {
  std::string label = normalize_label(s);
  if (label.empty())
    throw ValidationError(std::string(what) + " has an empty name");
  return label;
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

template <typename T>
void sort_by_name(std::vector<T>& v) {
  std::sort(v.begin(), v.end(),
            [](const T& a, const T& b) { return a.name < b.name; });
}

template <typename T>
void reject_duplicate_names(const std::vector<T>& v, const char* what) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].name == v[i - 1].name)
      throw ValidationError(std::string("duplicate ") + what + " \"" + v[i].name + "\"");
}

}  // namespace

const char* element_kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::Concept: return "concept";
    case ElementKind::Attribute: return "attribute";
    case ElementKind::Role: return "role";
    case ElementKind::Individual: return "individual";
  }
  return "?";
}

std::optional<ElementKind> element_kind_from_name(const std::string& name) {
  if (name == "concept") return ElementKind::Concept;
  if (name == "attribute") return ElementKind::Attribute;
  if (name == "role") return ElementKind::Role;
  if (name == "individual") return ElementKind::Individual;
  return std::nullopt;
}

MvpOntology MvpOntology::build(std::string domain_name,
                               std::vector<std::string> viewpoints,
                               std::vector<GlobalConcept> global_concepts,
                               std::vector<LocalConcept> local_concepts,
                               std::vector<Role> roles,
                               std::vector<Individual> individuals) {
  MvpOntology o;
  o.domain_name_ = norm(domain_name, "domain");

  for (auto& v : viewpoints) v = norm(v, "viewpoint");
  std::sort(viewpoints.begin(), viewpoints.end());
  for (std::size_t i = 1; i < viewpoints.size(); ++i)
    if (viewpoints[i] == viewpoints[i - 1])
      throw ValidationError("duplicate viewpoint \"" + viewpoints[i] + "\"");
  o.viewpoints_ = std::move(viewpoints);

  std::unordered_set<std::string> vp_set(o.viewpoints_.begin(), o.viewpoints_.end());
  auto check_vp = [&](const std::string& v, const std::string& owner) {
    if (!vp_set.count(v))
      throw ValidationError("\"" + owner + "\" references undeclared viewpoint \"" + v + "\"");
  };

  for (auto& gc : global_concepts) {
    gc.name = norm(gc.name, "global concept");
    if (gc.parent) gc.parent = norm(*gc.parent, "global concept parent");
    for (auto& a : gc.global_attributes) a = norm(a, "attribute");
    sort_unique(gc.global_attributes);
    for (auto& la : gc.local_attributes) {
      la.name = norm(la.name, "attribute");
      if (la.viewpoints.empty())
        throw ValidationError("local attribute \"" + la.name + "\" of \"" + gc.name +
                              "\" has an empty viewpoint set");
      for (auto& v : la.viewpoints) {
        v = norm(v, "viewpoint");
        check_vp(v, la.name);
      }
      sort_unique(la.viewpoints);
    }
    sort_by_name(gc.local_attributes);
    // Attribute names may repeat across concepts but not within one.
    std::set<std::string> attrs(gc.global_attributes.begin(), gc.global_attributes.end());
    for (const auto& la : gc.local_attributes)
      if (!attrs.insert(la.name).second)
        throw ValidationError("duplicate attribute \"" + la.name + "\" on \"" + gc.name + "\"");
  }
  sort_by_name(global_concepts);
  reject_duplicate_names(global_concepts, "global concept");
  o.global_concepts_ = std::move(global_concepts);

  std::unordered_map<std::string, const GlobalConcept*> gc_by_name;
  for (const auto& gc : o.global_concepts_) gc_by_name[gc.name] = &gc;

  for (const auto& gc : o.global_concepts_) {
    if (!gc.parent) continue;
    if (!gc_by_name.count(*gc.parent))
      throw ValidationError("global concept \"" + gc.name +
                            "\" has dangling parent \"" + *gc.parent + "\"");
    // Walk up; revisiting the start means the parent links form a cycle.
    const GlobalConcept* cur = gc_by_name[*gc.parent];
    std::size_t steps = 0;
    while (cur) {
      if (cur->name == gc.name)
        throw ValidationError("global concept hierarchy has a cycle through \"" + gc.name + "\"");
      if (++steps > o.global_concepts_.size())
        throw ValidationError("global concept hierarchy has a cycle");
      cur = cur->parent ? gc_by_name[*cur->parent] : nullptr;
    }
  }

  for (auto& lc : local_concepts) {
    lc.name = norm(lc.name, "local concept");
    lc.subsumer = norm(lc.subsumer, "subsumer");
    if (lc.local_parent) lc.local_parent = norm(*lc.local_parent, "local concept parent");
    if (lc.viewpoints.empty())
      throw ValidationError("local concept \"" + lc.name + "\" has an empty viewpoint set");
    for (auto& v : lc.viewpoints) {
      v = norm(v, "viewpoint");
      check_vp(v, lc.name);
    }
    sort_unique(lc.viewpoints);
  }
  sort_by_name(local_concepts);
  reject_duplicate_names(local_concepts, "local concept");
  o.local_concepts_ = std::move(local_concepts);

  std::unordered_map<std::string, const LocalConcept*> lc_by_name;
  for (const auto& lc : o.local_concepts_) {
    if (gc_by_name.count(lc.name))
      throw ValidationError("\"" + lc.name + "\" is declared as both a global and a local concept");
    lc_by_name[lc.name] = &lc;
  }

  for (const auto& lc : o.local_concepts_) {
    if (!gc_by_name.count(lc.subsumer))
      throw ValidationError("local concept \"" + lc.name +
                            "\" has dangling subsumer \"" + lc.subsumer + "\"");
    if (lc.local_parent) {
      auto it = lc_by_name.find(*lc.local_parent);
      if (it == lc_by_name.end())
        throw ValidationError("local concept \"" + lc.name +
                              "\" has dangling parent \"" + *lc.local_parent + "\"");
      // A local hierarchy lives inside a viewpoint.
      const auto& pv = it->second->viewpoints;
      bool shared = std::any_of(lc.viewpoints.begin(), lc.viewpoints.end(),
                                [&](const std::string& v) {
                                  return std::find(pv.begin(), pv.end(), v) != pv.end();
                                });
      if (!shared)
        throw ValidationError("local concept \"" + lc.name +
                              "\" shares no viewpoint with its parent \"" +
                              *lc.local_parent + "\"");
    }
  }

  for (auto& r : roles) {
    r.name = norm(r.name, "role");
    r.domain = norm(r.domain, "role domain");
    r.range = norm(r.range, "role range");
    for (auto& v : r.viewpoints) {
      v = norm(v, "viewpoint");
      check_vp(v, r.name);
    }
    sort_unique(r.viewpoints);
    for (const std::string* end : {&r.domain, &r.range})
      if (!gc_by_name.count(*end) && !lc_by_name.count(*end))
        throw ValidationError("role \"" + r.name + "\" references unknown concept \"" + *end + "\"");
  }
  sort_by_name(roles);
  reject_duplicate_names(roles, "role");
  o.roles_ = std::move(roles);

  for (auto& ind : individuals) {
    ind.name = norm(ind.name, "individual");
    ind.global_concept = norm(ind.global_concept, "individual concept");
    if (!gc_by_name.count(ind.global_concept))
      throw ValidationError("individual \"" + ind.name +
                            "\" has dangling global concept \"" + ind.global_concept + "\"");
    std::set<std::string> seen_vps;
    for (auto& m : ind.memberships) {
      m.local_concept = norm(m.local_concept, "membership concept");
      m.viewpoint = norm(m.viewpoint, "membership viewpoint");
      check_vp(m.viewpoint, ind.name);
      auto it = lc_by_name.find(m.local_concept);
      if (it == lc_by_name.end())
        throw ValidationError("individual \"" + ind.name +
                              "\" is a member of unknown local concept \"" + m.local_concept + "\"");
      const auto& cvs = it->second->viewpoints;
      if (std::find(cvs.begin(), cvs.end(), m.viewpoint) == cvs.end())
        throw ValidationError("individual \"" + ind.name + "\": local concept \"" +
                              m.local_concept + "\" is not declared under viewpoint \"" +
                              m.viewpoint + "\"");
      if (!seen_vps.insert(m.viewpoint).second)
        throw ValidationError("individual \"" + ind.name +
                              "\" has two local concepts under viewpoint \"" + m.viewpoint + "\"");
    }
    std::sort(ind.memberships.begin(), ind.memberships.end(),
              [](const Membership& a, const Membership& b) {
                return std::tie(a.viewpoint, a.local_concept) <
                       std::tie(b.viewpoint, b.local_concept);
              });
    std::map<std::string, std::string> attrs;
    for (auto& [k, v] : ind.attribute_values) attrs[normalize_label(k)] = v;
    ind.attribute_values = std::move(attrs);
  }
  sort_by_name(individuals);
  reject_duplicate_names(individuals, "individual");
  o.individuals_ = std::move(individuals);

  return o;
}

bool MvpOntology::operator==(const MvpOntology& other) const {
  auto eq_gc = [](const GlobalConcept& a, const GlobalConcept& b) {
    auto eq_la = [](const LocalAttribute& x, const LocalAttribute& y) {
      return x.name == y.name && x.viewpoints == y.viewpoints;
    };
    return a.name == b.name && a.parent == b.parent &&
           a.global_attributes == b.global_attributes &&
           std::equal(a.local_attributes.begin(), a.local_attributes.end(),
                      b.local_attributes.begin(), b.local_attributes.end(), eq_la);
  };
  auto eq_lc = [](const LocalConcept& a, const LocalConcept& b) {
    return a.name == b.name && a.viewpoints == b.viewpoints &&
           a.subsumer == b.subsumer && a.local_parent == b.local_parent;
  };
  auto eq_role = [](const Role& a, const Role& b) {
    return a.name == b.name && a.domain == b.domain && a.range == b.range &&
           a.viewpoints == b.viewpoints;
  };
  auto eq_ind = [](const Individual& a, const Individual& b) {
    return a.name == b.name && a.global_concept == b.global_concept &&
           a.memberships == b.memberships && a.attribute_values == b.attribute_values;
  };
  return domain_name_ == other.domain_name_ && viewpoints_ == other.viewpoints_ &&
         std::equal(global_concepts_.begin(), global_concepts_.end(),
                    other.global_concepts_.begin(), other.global_concepts_.end(), eq_gc) &&
         std::equal(local_concepts_.begin(), local_concepts_.end(),
                    other.local_concepts_.begin(), other.local_concepts_.end(), eq_lc) &&
         std::equal(roles_.begin(), roles_.end(), other.roles_.begin(), other.roles_.end(),
                    eq_role) &&
         std::equal(individuals_.begin(), individuals_.end(), other.individuals_.begin(),
                    other.individuals_.end(), eq_ind);
}

std::vector<LinkObservation> extract_links(const MvpOntology& o) {
  std::set<LinkObservation> out;
  for (const auto& gc : o.global_concepts())
    for (const auto& la : gc.local_attributes)
      for (const auto& v : la.viewpoints)
        out.insert({la.name, ElementKind::Attribute, v});
  for (const auto& lc : o.local_concepts())
    for (const auto& v : lc.viewpoints)
      out.insert({lc.name, ElementKind::Concept, v});
  for (const auto& r : o.roles())
    for (const auto& v : r.viewpoints)
      out.insert({r.name, ElementKind::Role, v});
  for (const auto& ind : o.individuals())
    for (const auto& m : ind.memberships)
      out.insert({ind.name, ElementKind::Individual, m.viewpoint});
  return {out.begin(), out.end()};
}

namespace {

const json& expect(const json& j, const char* what, json::value_t type) {
  if (j.type() != type)
    throw ParseError(std::string(what) + " has the wrong type", 0, 0);
  return j;
}

std::string get_string(const json& obj, const char* key, const char* owner) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(std::string(owner) + " is missing required key \"" + key + "\"", 0, 0);
  return expect(*it, key, json::value_t::string).get<std::string>();
}

std::optional<std::string> get_optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return expect(*it, key, json::value_t::string).get<std::string>();
}

std::vector<std::string> get_string_list(const json& obj, const char* key) {
  auto it = obj.find(key);
  std::vector<std::string> out;
  if (it == obj.end()) return out;
  for (const auto& item : expect(*it, key, json::value_t::array))
    out.push_back(expect(item, key, json::value_t::string).get<std::string>());
  return out;
}

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* owner) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = std::any_of(allowed.begin(), allowed.end(),
                             [&](const char* k) { return it.key() == k; });
    if (!known)
      throw ParseError(std::string("unknown key \"") + it.key() + "\" in " + owner, 0, 0);
  }
}

}  // namespace

MvpOntology load_mvo(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), 0, 0);
  }
  expect(doc, "document", json::value_t::object);
  reject_unknown_keys(doc,
                      {"format_version", "domain", "viewpoints", "global_concepts",
                       "local_concepts", "roles", "individuals"},
                      "document");

  std::string version = get_string(doc, "format_version", "document");
  if (version != "1")
    throw ValidationError("unsupported ontology format_version \"" + version + "\"");

  std::string domain = get_string(doc, "domain", "document");
  std::vector<std::string> viewpoints = get_string_list(doc, "viewpoints");

  std::vector<GlobalConcept> gcs;
  if (doc.contains("global_concepts")) {
    for (const auto& j : expect(doc["global_concepts"], "global_concepts", json::value_t::array)) {
      expect(j, "global concept", json::value_t::object);
      reject_unknown_keys(j, {"name", "parent", "attributes", "local_attributes"},
                          "global concept");
      GlobalConcept gc;
      gc.name = get_string(j, "name", "global concept");
      gc.parent = get_optional_string(j, "parent");
      gc.global_attributes = get_string_list(j, "attributes");
      if (j.contains("local_attributes")) {
        for (const auto& ja : expect(j["local_attributes"], "local_attributes", json::value_t::array)) {
          expect(ja, "local attribute", json::value_t::object);
          reject_unknown_keys(ja, {"name", "viewpoints"}, "local attribute");
          gc.local_attributes.push_back(
              {get_string(ja, "name", "local attribute"), get_string_list(ja, "viewpoints")});
        }
      }
      gcs.push_back(std::move(gc));
    }
  }

  std::vector<LocalConcept> lcs;
  if (doc.contains("local_concepts")) {
    for (const auto& j : expect(doc["local_concepts"], "local_concepts", json::value_t::array)) {
      expect(j, "local concept", json::value_t::object);
      reject_unknown_keys(j, {"name", "viewpoints", "subsumer", "parent"}, "local concept");
      LocalConcept lc;
      lc.name = get_string(j, "name", "local concept");
      lc.viewpoints = get_string_list(j, "viewpoints");
      lc.subsumer = get_string(j, "subsumer", "local concept");
      lc.local_parent = get_optional_string(j, "parent");
      lcs.push_back(std::move(lc));
    }
  }

  std::vector<Role> roles;
  if (doc.contains("roles")) {
    for (const auto& j : expect(doc["roles"], "roles", json::value_t::array)) {
      expect(j, "role", json::value_t::object);
      reject_unknown_keys(j, {"name", "domain", "range", "viewpoints"}, "role");
      Role r;
      r.name = get_string(j, "name", "role");
      r.domain = get_string(j, "domain", "role");
      r.range = get_string(j, "range", "role");
      r.viewpoints = get_string_list(j, "viewpoints");
      roles.push_back(std::move(r));
    }
  }

  std::vector<Individual> inds;
  if (doc.contains("individuals")) {
    for (const auto& j : expect(doc["individuals"], "individuals", json::value_t::array)) {
      expect(j, "individual", json::value_t::object);
      reject_unknown_keys(j, {"name", "global_concept", "memberships", "attributes"},
                          "individual");
      Individual ind;
      ind.name = get_string(j, "name", "individual");
      ind.global_concept = get_string(j, "global_concept", "individual");
      if (j.contains("memberships")) {
        for (const auto& jm : expect(j["memberships"], "memberships", json::value_t::array)) {
          expect(jm, "membership", json::value_t::object);
          reject_unknown_keys(jm, {"local_concept", "viewpoint"}, "membership");
          ind.memberships.push_back({get_string(jm, "local_concept", "membership"),
                                     get_string(jm, "viewpoint", "membership")});
        }
      }
      if (j.contains("attributes")) {
        const auto& ja = expect(j["attributes"], "attributes", json::value_t::object);
        for (auto it = ja.begin(); it != ja.end(); ++it) {
          const json& v = it.value();
          ind.attribute_values[it.key()] =
              v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
      inds.push_back(std::move(ind));
    }
  }

  return MvpOntology::build(std::move(domain), std::move(viewpoints), std::move(gcs),
                            std::move(lcs), std::move(roles), std::move(inds));
}

std::string save_mvo(const MvpOntology& o) {
  json doc;
  doc["format_version"] = "1";
  doc["domain"] = o.domain_name();
  doc["viewpoints"] = o.viewpoints();

  json gcs = json::array();
  for (const auto& gc : o.global_concepts()) {
    json j;
    j["name"] = gc.name;
    if (gc.parent) j["parent"] = *gc.parent;
    if (!gc.global_attributes.empty()) j["attributes"] = gc.global_attributes;
    if (!gc.local_attributes.empty()) {
      json las = json::array();
      for (const auto& la : gc.local_attributes)
        las.push_back({{"name", la.name}, {"viewpoints", la.viewpoints}});
      j["local_attributes"] = std::move(las);
    }
    gcs.push_back(std::move(j));
  }
  doc["global_concepts"] = std::move(gcs);

  json lcs = json::array();
  for (const auto& lc : o.local_concepts()) {
    json j;
    j["name"] = lc.name;
    j["viewpoints"] = lc.viewpoints;
    j["subsumer"] = lc.subsumer;
    if (lc.local_parent) j["parent"] = *lc.local_parent;
    lcs.push_back(std::move(j));
  }
  doc["local_concepts"] = std::move(lcs);

  json roles = json::array();
  for (const auto& r : o.roles()) {
    json j;
    j["name"] = r.name;
    j["domain"] = r.domain;
    j["range"] = r.range;
    if (!r.viewpoints.empty()) j["viewpoints"] = r.viewpoints;
    roles.push_back(std::move(j));
  }
  doc["roles"] = std::move(roles);

  json inds = json::array();
  for (const auto& ind : o.individuals()) {
    json j;
    j["name"] = ind.name;
    j["global_concept"] = ind.global_concept;
    if (!ind.memberships.empty()) {
      json ms = json::array();
      for (const auto& m : ind.memberships)
        ms.push_back({{"local_concept", m.local_concept}, {"viewpoint", m.viewpoint}});
      j["memberships"] = std::move(ms);
    }
    if (!ind.attribute_values.empty()) {
      json attrs;
      for (const auto& [k, v] : ind.attribute_values) attrs[k] = v;
      j["attributes"] = std::move(attrs);
    }
    inds.push_back(std::move(j));
  }
  doc["individuals"] = std::move(inds);

  return doc.dump(2) + "\n";
}

}  // namespace vprdf
