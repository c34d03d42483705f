// Copyright 2026 The strand Authors
// SPDX-License-Identifier: Apache-2.0

#include "rewrite/diagram.hpp"

#include <vector>

namespace strand::rewrite {

bool IsBox(const Term& t) {
  Kind k = t.kind();
  return k != Kind::kId && k != Kind::kCompose && k != Kind::kTensor;
}

namespace {

void Collect(const Term& t, Typer& typer, std::size_t shift,
             std::vector<Layer>& out) {
  switch (t.kind()) {
    case Kind::kId:
      return;
    case Kind::kCompose:
      Collect(t.rhs(), typer, shift, out);
      Collect(t.lhs(), typer, shift, out);
      return;
    case Kind::kTensor: {
      Collect(t.lhs(), typer, shift, out);
      std::size_t width = typer.Type(t.lhs()).cod.size();
      Collect(t.rhs(), typer, shift + width, out);
      return;
    }
    default: {
      Boundary b = typer.Type(t);
      out.push_back(Layer{shift, t, b.dom, b.cod});
      return;
    }
  }
}

}  // namespace

Diagram ToDiagram(const Term& t, Typer& typer) {
  Diagram d;
  d.dom = typer.Type(t).dom;
  Collect(t, typer, 0, d.layers);
  return d;
}

ObjectExpr ApplyLayerToWires(const ObjectExpr& wires, std::size_t offset,
                             std::size_t in, const ObjectExpr& cod) {
  return Tensor({wires.slice(0, offset), cod,
                 wires.slice(offset + in, wires.size())});
}

ObjectExpr WiresBefore(const Diagram& d, std::size_t i) {
  ObjectExpr w = d.dom;
  for (std::size_t k = 0; k < i; ++k) {
    const Layer& l = d.layers[k];
    w = ApplyLayerToWires(w, l.offset, l.in(), l.cod);
  }
  return w;
}

Term FromDiagram(const Diagram& d) {
  if (d.layers.empty()) return Term::Id(d.dom);
  ObjectExpr wires = d.dom;
  Term acc;
  for (const Layer& l : d.layers) {
    ObjectExpr left = wires.slice(0, l.offset);
    ObjectExpr right = wires.slice(l.offset + l.in(), wires.size());
    Term step = l.box;
    if (!right.is_unit()) step = Term::Tensor(step, Term::Id(right));
    if (!left.is_unit()) step = Term::Tensor(Term::Id(left), step);
    acc = acc.valid() ? Term::Compose(step, acc) : step;
    wires = ApplyLayerToWires(wires, l.offset, l.in(), l.cod);
  }
  return acc;
}

Side Relation(const Layer& first, const Layer& second) {
  const std::size_t x = first.offset, ox = first.out();
  const std::size_t y = second.offset, iy = second.in();
  if (ox == 0 && iy == 0 && y == x) return Side::kDependent;
  if (y + iy <= x) return Side::kLeft;
  if (y >= x + ox) return Side::kRight;
  return Side::kDependent;
}

std::vector<Layer> Interchange(const Layer& first, const Layer& second,
                               Side side) {
  Layer a = second;
  Layer b = first;
  if (side == Side::kLeft) {
    b.offset = first.offset - second.in() + second.out();
  } else {
    a.offset = second.offset - first.out() + first.in();
  }
  return {a, b};
}

}  // namespace strand::rewrite
