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

#ifndef ASSIST_GRAPH_HPP_
#define ASSIST_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assist/errors.hpp"

namespace assist {

enum class Category { kPerson, kObject, kPlace, kAttribute, kCommonsense };
enum class Provenance { kPerceived, kEnriched };

std::string_view to_string(Category c);
std::string_view to_string(Provenance p);
Category category_from_string(std::string_view s);      // throws GraphError
Provenance provenance_from_string(std::string_view s);  // throws GraphError

// Axis-aligned rectangle in pixel coordinates (x, y = top-left corner).
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;

  double center_x() const { return x + width / 2.0; }
  double center_y() const { return y + height / 2.0; }

  bool operator==(const BoundingBox&) const = default;
};

struct ImageDims {
  int width = 0;
  int height = 0;

  bool operator==(const ImageDims&) const = default;
};

// A grounded concept node. sentiment is kept in [-1, 1] by construction.
struct Entity {
  std::string id;
  std::string label;
  Category category = Category::kObject;
  std::optional<BoundingBox> bbox;
  double sentiment = 0.0;
  Provenance provenance = Provenance::kPerceived;
  bool grounded = false;

  bool operator==(const Entity&) const = default;
};

// A directed predicated edge between two entities; confidence in (0, 1].
struct Relation {
  std::string head;
  std::string tail;
  std::string predicate;
  double confidence = 1.0;
  Provenance provenance = Provenance::kPerceived;

  bool operator==(const Relation&) const = default;
};

// Directed multigraph of entities and relations. Immutable after
// construction: every operation returns a new value, so graphs can be
// shared across threads without locking. Construction goes through
// build_graph(), which validates all invariants:
//   - entity ids unique and nonempty; labels nonempty, lowercase, trimmed
//   - relation endpoints resolve, no self-loops, confidence in (0, 1]
//   - no duplicate (head, predicate, tail, provenance) quadruples
//   - any bbox requires image dims, and must fit inside them
class SceneGraph {
 public:
  SceneGraph() = default;

  const std::string& frame_id() const { return frame_id_; }
  const std::optional<ImageDims>& dims() const { return dims_; }
  const std::vector<Entity>& entities() const { return entities_; }
  const std::vector<Relation>& relations() const { return relations_; }

  bool empty() const { return entities_.empty(); }
  bool has_entity(const std::string& id) const { return index_.count(id) != 0; }
  const Entity& entity(const std::string& id) const;  // throws GraphError
  std::optional<std::size_t> entity_index(const std::string& id) const;

  // Number of incident relation records (in + out; multi-edges all count).
  std::size_t degree(const std::string& id) const;

  // (entity index, edge confidence) per incident edge, both directions.
  std::vector<std::pair<std::size_t, double>> neighbors(std::size_t entity_index) const;

  bool has_relation(const std::string& head, const std::string& predicate,
                    const std::string& tail, Provenance prov) const;

  bool operator==(const SceneGraph& other) const;

 private:
  friend SceneGraph build_graph(std::vector<Entity> entities, std::vector<Relation> relations,
                                std::string frame_id, std::optional<ImageDims> dims);

  std::string frame_id_;
  std::optional<ImageDims> dims_;
  std::vector<Entity> entities_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Validates and assembles a scene graph; input order is preserved.
// Normalizes labels/predicates and clamps sentiments on the way in.
SceneGraph build_graph(std::vector<Entity> entities, std::vector<Relation> relations,
                       std::string frame_id = {}, std::optional<ImageDims> dims = {});

// All relations with the ordered (head, tail) pair, in insertion order.
// Unknown ids and head == tail (self-loops are rejected at build) error out.
std::vector<Relation> relations_between(const SceneGraph& graph, const std::string& head,
                                        const std::string& tail);

// Rewrites every edge endpoint of `absorbed` to `survivor`, drops the
// absorbed entity, dedupes edges and drops self-loops produced by the
// rewrite. The survivor keeps its own label/bbox/category and takes the
// more negative of the two sentiments.
SceneGraph merge_nodes(const SceneGraph& graph, const std::string& survivor,
                       const std::string& absorbed);

// Sum of node sentiments over the whole graph.
double graph_sentiment(const SceneGraph& graph);

// Graphviz DOT text; nodes ordered by id, color keyed to sentiment sign
// (red negative, green positive, gray zero), label "label (S=...)".
std::string to_dot(const SceneGraph& graph);

}  // namespace assist

#endif  // ASSIST_GRAPH_HPP_
