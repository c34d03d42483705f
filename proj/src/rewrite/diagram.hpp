// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

// Layered form of a term: a sequence of atomic boxes, each placed at an
// offset (in atoms) of the wire list between layers.

#ifndef STRAND_REWRITE_DIAGRAM_HPP_
#define STRAND_REWRITE_DIAGRAM_HPP_

#include <cstddef>
#include <vector>

#include "strand/term.hpp"

namespace strand::rewrite {

struct Layer {
  std::size_t offset = 0;
  Term box;
  ObjectExpr dom;
  ObjectExpr cod;

  std::size_t in() const { return dom.size(); }
  std::size_t out() const { return cod.size(); }
};

struct Diagram {
  ObjectExpr dom;
  std::vector<Layer> layers;
};

// True for the node kinds that become layers (everything except Id,
// Compose and Tensor).
bool IsBox(const Term& t);

Diagram ToDiagram(const Term& t, Typer& typer);
Term FromDiagram(const Diagram& d);

// Wire list before layer `i` (i == layers.size() gives the codomain).
ObjectExpr WiresBefore(const Diagram& d, std::size_t i);

// Replaces the wires [offset, offset + in) of `wires` by `cod`.
ObjectExpr ApplyLayerToWires(const ObjectExpr& wires, std::size_t offset,
                             std::size_t in, const ObjectExpr& cod);

// Where the second of two adjacent layers sits relative to the first.
enum class Side { kDependent, kLeft, kRight };

// Independence of layers[i] and layers[i + 1]. Configurations where a box
// with no outputs is followed by a box with no inputs at the same point are
// reported as dependent: either order is valid there and the sort must not
// flip between them.
Side Relation(const Layer& first, const Layer& second);

// Swapped pair for independent layers.
std::vector<Layer> Interchange(const Layer& first, const Layer& second,
                               Side side);

}  // namespace strand::rewrite

#endif  // STRAND_REWRITE_DIAGRAM_HPP_
