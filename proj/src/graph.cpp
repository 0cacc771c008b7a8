// Copyright 2026 The Assist-Reasoner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "assist/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "assist/text.hpp"

namespace assist {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kPerson: return "person";
    case Category::kObject: return "object";
    case Category::kPlace: return "place";
    case Category::kAttribute: return "attribute";
    case Category::kCommonsense: return "commonsense";
  }
  return "object";
}

std::string_view to_string(Provenance p) {
  return p == Provenance::kPerceived ? "perceived" : "enriched";
}

Category category_from_string(std::string_view s) {
  std::string v = to_lower(s);
  if (v == "person") return Category::kPerson;
  if (v == "object") return Category::kObject;
  if (v == "place") return Category::kPlace;
  if (v == "attribute") return Category::kAttribute;
  if (v == "commonsense") return Category::kCommonsense;
  throw GraphError("unknown entity category \"" + std::string(s) + "\"");
}

Provenance provenance_from_string(std::string_view s) {
  std::string v = to_lower(s);
  if (v == "perceived") return Provenance::kPerceived;
  if (v == "enriched") return Provenance::kEnriched;
  throw GraphError("unknown provenance \"" + std::string(s) + "\"");
}

const Entity& SceneGraph::entity(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw GraphError("unknown entity id " + quote(id));
  return entities_[it->second];
}

std::optional<std::size_t> SceneGraph::entity_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SceneGraph::degree(const std::string& id) const {
  if (!has_entity(id)) throw GraphError("unknown entity id " + quote(id));
  std::size_t n = 0;
  for (const Relation& r : relations_) {
    if (r.head == id) ++n;
    if (r.tail == id) ++n;
  }
  return n;
}

std::vector<std::pair<std::size_t, double>> SceneGraph::neighbors(std::size_t entity_index) const {
  std::vector<std::pair<std::size_t, double>> out;
  const std::string& id = entities_.at(entity_index).id;
  for (const Relation& r : relations_) {
    if (r.head == id) out.emplace_back(index_.at(r.tail), r.confidence);
    else if (r.tail == id) out.emplace_back(index_.at(r.head), r.confidence);
  }
  return out;
}

bool SceneGraph::has_relation(const std::string& head, const std::string& predicate,
                              const std::string& tail, Provenance prov) const {
  for (const Relation& r : relations_) {
    if (r.head == head && r.tail == tail && r.predicate == predicate && r.provenance == prov) {
      return true;
    }
  }
  return false;
}

bool SceneGraph::operator==(const SceneGraph& other) const {
  return frame_id_ == other.frame_id_ && dims_ == other.dims_ &&
         entities_ == other.entities_ && relations_ == other.relations_;
}

SceneGraph build_graph(std::vector<Entity> entities, std::vector<Relation> relations,
                       std::string frame_id, std::optional<ImageDims> dims) {
  SceneGraph g;
  g.frame_id_ = std::move(frame_id);

  if (dims) {
    if (dims->width <= 0 || dims->height <= 0) {
      throw GraphError("image dimensions must be positive, got " +
                       std::to_string(dims->width) + "x" + std::to_string(dims->height));
    }
    g.dims_ = dims;
  }

  g.entities_.reserve(entities.size());
  for (Entity& e : entities) {
    e.id = trim(e.id);
    if (e.id.empty()) throw GraphError("entity with empty id");
    if (g.index_.count(e.id) != 0) throw GraphError("duplicate entity id " + quote(e.id));
    e.label = normalize_label(e.label);
    if (e.label.empty()) throw GraphError("entity " + quote(e.id) + " has an empty label");
    if (!std::isfinite(e.sentiment)) {
      throw GraphError("entity " + quote(e.id) + " has a non-finite sentiment");
    }
    e.sentiment = std::clamp(e.sentiment, -1.0, 1.0);
    if (e.bbox) {
      const BoundingBox& b = *e.bbox;
      if (!std::isfinite(b.x) || !std::isfinite(b.y) || !std::isfinite(b.width) ||
          !std::isfinite(b.height)) {
        throw GraphError("entity " + quote(e.id) + " has a non-finite bbox");
      }
      if (b.x < 0 || b.y < 0 || b.width <= 0 || b.height <= 0) {
        throw GraphError("entity " + quote(e.id) + " has a degenerate bbox");
      }
      if (!g.dims_) {
        throw GraphError("entity " + quote(e.id) + " has a bbox but image dimensions are missing");
      }
      if (b.x + b.width > g.dims_->width || b.y + b.height > g.dims_->height) {
        throw GraphError("entity " + quote(e.id) + ": bbox outside image " +
                         std::to_string(g.dims_->width) + "x" + std::to_string(g.dims_->height));
      }
    }
    g.index_.emplace(e.id, g.entities_.size());
    g.entities_.push_back(std::move(e));
  }

  std::set<std::tuple<std::string, std::string, std::string, Provenance>> quads;
  g.relations_.reserve(relations.size());
  std::size_t pos = 0;
  for (Relation& r : relations) {
    r.head = trim(r.head);
    r.tail = trim(r.tail);
    r.predicate = normalize_label(r.predicate);
    const std::string where = "relation " + std::to_string(pos++);
    if (r.predicate.empty()) throw GraphError(where + " has an empty predicate");
    if (g.index_.count(r.head) == 0) {
      throw GraphError(where + ": dangling endpoint " + quote(r.head));
    }
    if (g.index_.count(r.tail) == 0) {
      throw GraphError(where + ": dangling endpoint " + quote(r.tail));
    }
    if (r.head == r.tail) throw GraphError(where + ": self-loop on " + quote(r.head));
    if (!std::isfinite(r.confidence) || r.confidence <= 0.0 || r.confidence > 1.0) {
      throw GraphError(where + " (" + r.head + " -[" + r.predicate + "]-> " + r.tail +
                       "): confidence must be in (0, 1]");
    }
    auto quad = std::make_tuple(r.head, r.predicate, r.tail, r.provenance);
    if (!quads.insert(quad).second) {
      throw GraphError("duplicate relation (" + r.head + ", " + r.predicate + ", " + r.tail +
                       ", " + std::string(to_string(r.provenance)) + ")");
    }
    g.relations_.push_back(std::move(r));
  }
  return g;
}

std::vector<Relation> relations_between(const SceneGraph& graph, const std::string& head,
                                        const std::string& tail) {
  if (!graph.has_entity(head)) throw GraphError("unknown entity id " + quote(head));
  if (!graph.has_entity(tail)) throw GraphError("unknown entity id " + quote(tail));
  if (head == tail) {
    throw GraphError("relations_between(" + quote(head) + ", " + quote(tail) +
                     "): self-pairs carry no relations (self-loops are rejected at build)");
  }
  std::vector<Relation> out;
  for (const Relation& r : graph.relations()) {
    if (r.head == head && r.tail == tail) out.push_back(r);
  }
  return out;
}

SceneGraph merge_nodes(const SceneGraph& graph, const std::string& survivor,
                       const std::string& absorbed) {
  if (!graph.has_entity(survivor)) throw GraphError("unknown entity id " + quote(survivor));
  if (!graph.has_entity(absorbed)) throw GraphError("unknown entity id " + quote(absorbed));
  if (survivor == absorbed) {
    throw GraphError("cannot merge entity " + quote(survivor) + " into itself");
  }

  std::vector<Entity> ents;
  ents.reserve(graph.entities().size() - 1);
  const double absorbed_sent = graph.entity(absorbed).sentiment;
  for (const Entity& e : graph.entities()) {
    if (e.id == absorbed) continue;
    Entity copy = e;
    if (copy.id == survivor) {
      copy.sentiment = std::min(copy.sentiment, absorbed_sent);  // conservative risk
    }
    ents.push_back(std::move(copy));
  }

  std::vector<Relation> rels;
  std::set<std::tuple<std::string, std::string, std::string, Provenance>> seen;
  for (const Relation& r : graph.relations()) {
    Relation copy = r;
    if (copy.head == absorbed) copy.head = survivor;
    if (copy.tail == absorbed) copy.tail = survivor;
    if (copy.head == copy.tail) continue;  // self-loop produced by rewrite
    auto quad = std::make_tuple(copy.head, copy.predicate, copy.tail, copy.provenance);
    if (!seen.insert(quad).second) continue;  // first occurrence wins
    rels.push_back(std::move(copy));
  }
  return build_graph(std::move(ents), std::move(rels), graph.frame_id(), graph.dims());
}

double graph_sentiment(const SceneGraph& graph) {
  double total = 0.0;
  for (const Entity& e : graph.entities()) total += e.sentiment;
  return total;
}

std::string to_dot(const SceneGraph& graph) {
  std::vector<const Entity*> ordered;
  ordered.reserve(graph.entities().size());
  for (const Entity& e : graph.entities()) ordered.push_back(&e);
  std::sort(ordered.begin(), ordered.end(),
            [](const Entity* a, const Entity* b) { return a->id < b->id; });

  std::ostringstream out;
  out << "digraph {\n";
  for (const Entity* e : ordered) {
    const char* color = e->sentiment < 0 ? "red" : (e->sentiment > 0 ? "green" : "gray");
    out << "  " << quote(e->id) << " [label=" << quote(e->label + " (S=" + format_real(e->sentiment) + ")")
        << " color=" << color << "];\n";
  }
  for (const Relation& r : graph.relations()) {
    out << "  " << quote(r.head) << " -> " << quote(r.tail) << " [label="
        << quote(r.predicate + " (" + format_real(r.confidence) + ")") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace assist
