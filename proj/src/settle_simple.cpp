// Types I, III, IV and VI.
#include <utility>

#include "settle_engine.hpp"

namespace mwist::detail {

namespace {

// v sits in the type-V path of leg l, not on its end tail: leave b1 as a
// leaf, or hang b1 on the head and drop the edge to its inner tail.
void head_swap(Settler& S, const std::string& br, const Leg& l, int pos, Vertex b1) {
  const Vertex h = S.p.pairs[l.path[pos]].head;
  S.plain(br);
  S.cand(br, {E(h, b1)}, {E(h, S.inner_tail(l, pos))});
}

// Shared by the "v in the far leg path" cases of types I and IV.
void far_leg_path(Settler& S, const std::string& br, const Leg& l, const Where& wv, Vertex v,
                  Vertex b1) {
  if (wv.kind == Where::Kind::PathHead) {
    head_swap(S, br + ".1", l, wv.pos, b1);
  } else if (v == l.tb) {
    S.cand_break(br + ".2", {E(b1, v)}, {});
  } else {
    head_swap(S, br + ".2", l, wv.pos, b1);
  }
}

}  // namespace

SettledTree settle_type1(Settler& S) {
  Leg L1 = S.leg(0), L2 = S.leg(1);
  if (S.w(L1.tb) < S.w(L2.tb)) std::swap(L1, L2);
  const Vertex b1 = L1.tb, a1 = L1.ta, aj1 = L1.a, bj1 = L1.b;
  const Vertex b2 = L2.tb, a2 = L2.ta, aj2 = L2.a, bj2 = L2.b;

  if (S.w(b1) == 0) {
    S.plain("I.0");
    return S.finish("I.0");
  }
  if (S.outside_neighbor(b1) != no_vertex) {
    S.cand_out("I.1", {}, {}, b1);
    return S.finish("I.1");
  }
  const Vertex v = S.farthest_neighbor(b1);
  if (v == no_vertex || S.dist(b1, v) < 2) S.impossible("I.1", "tail b1 has no far neighbour");
  const Where wv = S.where(v);

  if (b1 != bj1) {
    if (wv.slot == L1.slot && (wv.kind == Where::Kind::PathHead || wv.kind == Where::Kind::PathTail)) {
      if (wv.kind == Where::Kind::PathHead || S.dist(b1, v) != 2)
        S.impossible("I.2.1", "farthest neighbour deep inside its own type-V path");
      S.cand_out("I.2.2", {E(b1, v)}, {E(a1, v)}, a1);
      S.cand_break("I.2.2", {E(b1, v), E(a1, b2)}, {E(a1, v)});
      return S.finish("I.2");
    }
    if (v == bj1) {
      if (L1.path.size() > 1) S.impossible("I.3.1", "b_j1 farthest with a long type-V path");
      S.cand_out("I.3.2", {E(b1, v)}, {E(a1, v)}, a1);
      S.cand_break("I.3.2", {E(b1, v), E(a1, b2)}, {E(a1, v)});
      return S.finish("I.3");
    }
    if (v == aj1) {
      S.plain("I.4");
      S.cand("I.4", {E(aj1, b1)}, {E(aj1, bj1)});
      return S.finish("I.4");
    }
    if (v == aj2) {
      S.plain("I.5");
      S.cand("I.5", {E(aj1, b1)}, {E(aj1, bj1)});
      S.cand("I.5", {E(aj2, b1), E(aj1, bj2)}, {E(aj1, bj1), E(aj2, bj2)});
      return S.finish("I.5");
    }
    if (v == bj2) {
      if (b2 != bj2) {
        S.plain("I.6.1");
        S.cand("I.6.1", {E(aj2, b1)}, {E(aj2, aj1)});
        S.cand("I.6.1", {E(bj2, b1)}, {E(aj2, bj2)});
      } else {
        S.cand_break("I.6.2", {E(bj2, b1)}, {});
      }
      return S.finish("I.6");
    }
    if (wv.slot == L2.slot) {
      far_leg_path(S, "I.7", L2, wv, v, b1);
      return S.finish("I.7");
    }
    S.impossible("I", "farthest neighbour of b1 not located");
  }

  // b1 == bj1, so a1 == aj1
  if (v == aj2) {
    S.cand_out("I.8.1", {E(aj2, b1)}, {E(a1, aj2)}, a1);
    if (b2 != bj2) {
      S.cand_break("I.8.2.1", {E(aj2, b1), E(a1, b2)}, {E(a1, aj2)});
      S.cand_out("I.8.2.1", {E(aj2, b1), E(a1, bj2)}, {E(a1, aj2), E(aj2, bj2)}, aj2);
      S.cand_break("I.8.2.1", {E(aj2, b1), E(a1, bj2), E(aj2, b2)},
                   {E(a1, aj2), E(aj2, bj2)});
    } else {
      S.cand_out("I.8.2.2", {E(a2, b1), E(a1, b2)}, {E(a1, a2), E(a2, b2)}, a2);
    }
    return S.finish("I.8");
  }
  if (v == bj2) {
    if (b2 != bj2) {
      S.cand_out("I.9.1.1", {E(bj2, b1), E(aj2, b1)}, {E(a1, b1), E(aj2, bj2)}, a1);
      S.cand_out("I.9.1.1", {E(bj2, b1)}, {E(aj2, bj2)}, aj2);
      S.cand_break("I.9.1.2", {E(a1, b2), E(aj2, b1)}, {E(a1, aj2)});
      S.cand_break("I.9.1.2", {E(b1, bj2), E(a1, b2), E(aj2, b1)}, {E(a1, b1), E(aj2, bj2)});
      S.cand_break("I.9.1.2", {E(aj2, b2), E(b1, bj2)}, {E(aj2, bj2)});
    } else {
      S.cand_out("I.9.2", {E(b1, b2)}, {E(a2, b2)}, a2);
      S.cand_out("I.9.2", {E(a2, b1), E(b1, b2)}, {E(a1, b1), E(a2, b2)}, a1);
    }
    return S.finish("I.9");
  }
  if (wv.slot == L2.slot && (wv.kind == Where::Kind::PathHead || wv.kind == Where::Kind::PathTail)) {
    far_leg_path(S, "I.10", L2, wv, v, b1);
    return S.finish("I.10");
  }
  S.impossible("I", "farthest neighbour of b1 not located");
}

SettledTree settle_type3(Settler& S) {
  const Leg L = S.leg(0);
  const Vertex b1 = L.tb, a1 = L.ta, aj1 = L.a, bj1 = L.b, x = S.c.x;
  if (S.w(b1) == 0) {
    S.plain("III.0");
    return S.finish("III.0");
  }
  if (S.outside_neighbor(b1) != no_vertex) {
    S.cand_out("III.1", {}, {}, b1);
    return S.finish("III.1");
  }
  const Vertex v = S.farthest_neighbor(b1);
  if (v == no_vertex || S.dist(b1, v) < 2) S.impossible("III.1", "tail b1 has no far neighbour");
  const Where wv = S.where(v);
  if (b1 != bj1) {
    if (wv.kind == Where::Kind::PathHead || wv.kind == Where::Kind::PathTail) {
      if (wv.kind == Where::Kind::PathHead || S.dist(b1, v) != 2)
        S.impossible("III.2.1", "farthest neighbour deep inside its own type-V path");
      S.cand_out("III.2.2", {E(b1, v)}, {E(a1, v)}, a1);
      return S.finish("III.2");
    }
    if (v == bj1) {
      if (L.path.size() > 1) S.impossible("III.3.1", "b_j1 farthest with a long type-V path");
      S.cand_out("III.3.2", {E(b1, v)}, {E(a1, v)}, a1);
      return S.finish("III.3");
    }
    if (v == aj1) {
      S.plain("III.4");
      S.cand("III.4", {E(aj1, b1)}, {E(aj1, bj1)});
      return S.finish("III.4");
    }
    if (v == x) {
      S.plain("III.5");
      S.cand("III.5", {E(x, b1)}, {E(aj1, x)});
      return S.finish("III.5");
    }
    S.impossible("III", "farthest neighbour of b1 not located");
  }
  if (v != x) S.impossible("III.6", "farthest neighbour of b1 is not x");
  S.cand_out("III.6", {E(x, b1)}, {E(a1, x)}, a1);
  return S.finish("III.6");
}

SettledTree settle_type4(Settler& S) {
  Leg L1 = S.leg(0), L2 = S.leg(1);
  if (S.w(L1.tb) < S.w(L2.tb)) std::swap(L1, L2);
  const Vertex b1 = L1.tb, a1 = L1.ta, aj1 = L1.a, bj1 = L1.b;
  const Vertex b2 = L2.tb, a2 = L2.ta, aj2 = L2.a, bj2 = L2.b;
  const Vertex x = S.c.x;

  if (S.w(b1) == 0) {
    S.plain("IV.0");
    return S.finish("IV.0");
  }
  if (S.outside_neighbor(b1) != no_vertex) {
    S.cand_out("IV.1", {}, {}, b1);
    return S.finish("IV.1");
  }
  const Vertex v = S.farthest_neighbor(b1);
  if (v == no_vertex || S.dist(b1, v) < 2) S.impossible("IV.1", "tail b1 has no far neighbour");
  const Where wv = S.where(v);
  const bool in_path =
      wv.kind == Where::Kind::PathHead || wv.kind == Where::Kind::PathTail;

  if (b1 != bj1) {
    if (wv.slot == L1.slot && in_path) {
      if (wv.kind == Where::Kind::PathHead || S.dist(b1, v) != 2)
        S.impossible("IV.2.1", "farthest neighbour deep inside its own type-V path");
      S.cand_break("IV.2.2", {E(a1, b2), E(v, b1)}, {E(v, a1)});
      S.cand_out("IV.2.2", {E(b1, v)}, {E(a1, v)}, a1);
      return S.finish("IV.2");
    }
    if (v == bj1) {
      if (L1.path.size() > 1) S.impossible("IV.3.1", "b_j1 farthest with a long type-V path");
      S.cand_break("IV.3.2", {E(a1, b2), E(v, b1)}, {E(v, a1)});
      S.cand_out("IV.3.2", {E(b1, v)}, {E(a1, v)}, a1);
      return S.finish("IV.3");
    }
    if (v == aj1 || v == x) {
      const std::string br = v == aj1 ? "IV.4" : "IV.5";
      S.plain(br);
      S.cand(br, {E(aj1, b1)}, {E(aj1, bj1)});
      return S.finish(br);
    }
    if (v == aj2 || v == bj2) {
      S.cand("IV.6", {E(aj2, b1)}, {E(aj2, x)});
      if (b2 == bj2) S.cand_break("IV.6", {E(b2, b1)}, {});
      return S.finish("IV.6");
    }
    if (wv.slot == L2.slot && in_path) {
      far_leg_path(S, "IV.7", L2, wv, v, b1);
      return S.finish("IV.7");
    }
    S.impossible("IV", "farthest neighbour of b1 not located");
  }

  // b1 == bj1
  if (v == x) {
    if (b2 != bj2) {
      S.cand_break("IV.8.1", {E(a1, b2), E(x, b1)}, {E(x, a1)});
    } else {
      S.cand("IV.8.1", {E(a1, b2), E(x, b1)}, {E(x, a1), E(x, a2)});
      S.cand("IV.8.1", {E(a1, b2)}, {E(x, a1)});
    }
    S.cand_out("IV.8.2", {E(b1, x)}, {E(a1, x)}, a1);
    return S.finish("IV.8");
  }
  if (v == aj2 || v == bj2) {
    S.cand("IV.9", {E(aj2, b1)}, {E(aj2, x)});
    if (b2 == bj2) {
      S.plain("IV.9");
      S.cand("IV.9", {E(b2, b1)}, {E(a2, x)});
      S.cand("IV.9", {E(b2, b1)}, {E(a1, x)});
    }
    return S.finish("IV.9");
  }
  if (wv.slot == L2.slot && in_path) {
    far_leg_path(S, "IV.10", L2, wv, v, b1);
    return S.finish("IV.10");
  }
  S.impossible("IV", "farthest neighbour of b1 not located");
}

SettledTree settle_type6(Settler& S) {
  const auto& core = S.c.core;
  if (core.size() >= 3) {
    S.cand_break("VI.1", {}, {});
    return S.finish("VI.1");
  }
  auto P1 = S.p.pairs[core[0]], P2 = S.p.pairs[core[1]];
  if (S.w(P1.tail) < S.w(P2.tail)) std::swap(P1, P2);
  const Vertex a1 = P1.head, a2 = P2.head, b2 = P2.tail;
  S.cand_out("VI.2", {}, {E(a1, b2)}, a1);
  S.cand_out("VI.2", {}, {E(a2, b2)}, a2);
  return S.finish("VI.2");
}

}  // namespace mwist::detail
