// Type II: three core pairs whose heads form the path a_j1 - c - a_j3, with
// b_j2 hanging on the centre c.
#include <utility>

#include "settle_engine.hpp"

namespace mwist::detail {

namespace {

struct TypeII {
  Settler& S;
  Leg L1, L2, L3;
  Vertex b1, a1, aj1, bj1;
  Vertex c, bj2, b2;
  Vertex aj3, bj3, b3;

  using K = Where::Kind;

  // Roots of a far leg: f is its core tail, r the vertex it hangs from the
  // centre by, o the root of the other far leg.
  struct Roots {
    Vertex f, r, o;
  };
  Roots roots(const Leg& l) const {
    if (l.slot == L2.slot) return {bj2, bj2, aj3};
    return {bj3, aj3, bj2};
  }
  Vertex end_tail(const Leg& l) const { return l.tb; }

  void head_cands(const std::string& br, Vertex h, Vertex inner, const Roots& R) {
    S.plain(br);
    S.cand(br, {E(h, b1)}, {E(h, inner)});
    S.cand(br, {E(h, b1)}, {E(c, R.r)});
    if (R.r != R.f) S.cand(br, {E(h, b1)}, {E(R.r, R.f)});
  }

  // v is a head aj4 of a far leg path, inner tail bj5; bj4 its own tail.
  void far_head(const std::string& br, Vertex aj4, Vertex bj4, Vertex bj5, const Roots& R) {
    if (bj5 != R.f) {
      head_cands(br + ".1", aj4, bj5, R);
      return;
    }
    for (Edge d : {E(c, R.r), E(R.r, R.f)}) {
      S.cand(br + ".2", {E(aj4, b1), E(R.f, bj4)}, {d, E(aj4, bj4)});
      S.cand(br + ".2", {E(R.f, b1)}, {d});
    }
  }

  void far_end_tail(const std::string& br, Vertex v, const Roots& R) {
    S.plain(br);
    S.cand(br, {E(b1, v)}, {E(c, aj1)});
    S.cand(br, {E(b1, v)}, {E(c, R.r)});
    if (R.r != R.f) S.cand(br, {E(b1, v)}, {E(R.r, R.f)});
  }

  // b1 != bj1 and v sits in the type-V path of leg 2 or 3.
  void case7(const Leg& l, const Where& wv, Vertex v) {
    const Roots R = roots(l);
    const auto& pr = S.p.pairs[l.path[wv.pos]];
    const Vertex inner = S.inner_tail(l, wv.pos);
    if (wv.kind == K::PathHead) {
      far_head("II.7.1", pr.head, pr.tail, inner, R);
    } else if (v == end_tail(l)) {
      far_end_tail("II.7.2.1", v, R);
    } else if (inner != R.f) {
      head_cands("II.7.2.2", pr.head, inner, R);
    } else {
      S.plain("II.7.2.2");
      S.cand("II.7.2.2", {E(b1, pr.head)}, {E(c, R.r)});
      S.cand("II.7.2.2", {E(b1, pr.head)}, {E(c, aj1)});
      if (R.r != R.f) S.cand("II.7.2.2", {E(b1, pr.head)}, {E(R.r, R.f)});
    }
  }

  // b1 == bj1 and v sits in the type-V path of leg 2 or 3.
  void case10(const Leg& l, const Where& wv, Vertex v) {
    const Roots R = roots(l);
    const auto& pr = S.p.pairs[l.path[wv.pos]];
    const Vertex inner = S.inner_tail(l, wv.pos);
    if (wv.kind == K::PathHead) {
      far_head("II.10.1", pr.head, pr.tail, inner, R);
    } else if (v == end_tail(l)) {
      S.plain("II.10.2.1");
      S.cand("II.10.2.1", {E(b1, v)}, {E(c, a1)});
      S.cand("II.10.2.1", {E(b1, v)}, {E(c, R.r)});
      if (R.r != R.f) S.cand("II.10.2.1", {E(b1, v)}, {E(R.r, R.f)});
    } else if (inner != R.f) {
      head_cands("II.10.2.2", pr.head, inner, R);
    } else {
      const Vertex aj4 = pr.head, bj4 = pr.tail;
      const std::string br = "II.10.2.2";
      S.cand(br, {E(R.o, R.f), E(b1, aj4)}, {E(R.o, c), E(R.f, aj4)});
      S.cand(br, {E(R.o, a1), E(b1, aj4), E(b1, bj4)}, {E(R.o, c), E(a1, b1), E(aj4, bj4)});
      S.cand(br, {E(R.r, a1), E(b1, aj4), E(b1, bj4)}, {E(c, R.r), E(a1, b1), E(aj4, bj4)});
      S.cand(br, {E(R.f, a1), E(b1, aj4), E(b1, bj4)}, {E(R.r, R.f), E(a1, b1), E(aj4, bj4)});
    }
  }

  // a_j1 farthest from b1 with a single pair on leg 1.
  void case4_single() {
    const std::string br = S.adj(bj1, c) ? "II.4.2.1" : "II.4.2.2";
    S.cand_out(br, {E(c, bj1), E(aj1, b1)}, {E(c, aj1), E(aj1, bj1)}, aj1);
    S.cand_out(br, {E(aj1, b1)}, {E(aj1, bj1)}, bj1);
    S.cand_out(br, {E(c, bj1), E(aj1, b1)}, {E(c, aj1), E(bj1, a1)}, a1);
    S.cand_out(br, {E(bj1, b1), E(aj1, b1)}, {E(aj1, bj1), E(a1, b1)}, a1);
    S.cand(br, {E(aj3, aj1), E(c, bj1), E(aj1, b1)}, {E(aj3, c), E(c, aj1), E(aj1, bj1)});
    S.cand(br, {E(bj2, aj1), E(c, bj1), E(aj1, b1)}, {E(c, aj1), E(c, bj2), E(aj1, bj1)});
    for (Vertex t : {b2, b3}) {
      S.cand(br, {E(t, aj1)}, {E(c, aj1)});
      S.cand(br, {E(t, aj1), E(aj1, b1)}, {E(c, aj1), E(aj1, bj1)});
      S.cand(br, {E(t, a1), E(aj1, b1)}, {E(c, aj1), E(a1, b1)});
      S.cand(br, {E(t, a1), E(aj1, b1)}, {E(c, aj1), E(a1, bj1)});
    }
    S.cand(br, {E(aj3, bj1), E(aj1, b1)}, {E(aj3, c), E(aj1, bj1)});
    S.cand(br, {E(bj2, bj1), E(aj1, b1)}, {E(c, bj2), E(aj1, bj1)});
    S.plain(br);
    S.cand(br, {E(aj1, b1)}, {E(aj1, bj1)});
    for (const Leg* l : {&L2, &L3})
      for (int q = 0; q < static_cast<int>(l->path.size()); ++q) {
        const Vertex aj4 = S.p.pairs[l->path[q]].head;
        S.cand(br, {E(aj4, bj1), E(aj1, b1)}, {E(aj4, S.inner_tail(*l, q)), E(aj1, bj1)});
      }
  }

  void case4() {
    if (L1.path.size() > 1) {
      S.cand("II.4.1", {E(aj1, b1)}, {E(aj1, bj1)});
      for (std::size_t q = 0; q + 1 < L1.path.size(); ++q) {
        const auto& pr = S.p.pairs[L1.path[q]];
        S.cand("II.4.1", {E(aj1, b1)}, {E(pr.head, pr.tail)});
      }
    } else {
      case4_single();
    }
  }

  SettledTree run() {
    if (S.w(b1) == 0) {
      S.plain("II.0");
      return S.finish("II.0");
    }
    if (S.outside_neighbor(b1) != no_vertex) {
      S.cand_out("II.1", {}, {}, b1);
      return S.finish("II.1");
    }
    const Vertex v = S.farthest_neighbor(b1);
    if (v == no_vertex || S.dist(b1, v) < 2) S.impossible("II.1", "tail b1 has no far neighbour");
    const Where wv = S.where(v);
    const bool in_path = wv.kind == K::PathHead || wv.kind == K::PathTail;

    if (b1 != bj1) {
      if (wv.slot == L1.slot && in_path) {
        if (wv.kind == K::PathHead || S.dist(b1, v) != 2)
          S.impossible("II.2.1", "farthest neighbour deep inside its own type-V path");
        S.cand_out("II.2.2", {E(v, b1)}, {E(a1, v)}, a1);
        for (Vertex t : {b2, b3})
          S.cand_among("II.2.2", {E(v, b1), E(a1, t)}, {E(a1, v)},
                       {L1.j, S.pair_of(v), S.pair_of(t)});
        return S.finish("II.2");
      }
      if (v == bj1) {
        if (L1.path.size() > 1) S.impossible("II.3.1", "b_j1 farthest with a long type-V path");
        const std::string br = "II.3.2";
        S.cand_out(br, {E(b1, bj1)}, {E(a1, bj1)}, a1);
        const std::vector<Edge> add2{E(b1, bj1), E(a1, b2)}, add3{E(b1, bj1), E(a1, b3)};
        if (b2 == bj2) {
          S.cand(br, add2, {E(a1, bj1), E(c, bj2)});
          S.cand(br, add2, {E(a1, bj1), E(c, aj1)});
        } else {
          S.cand_among(br, add2, {E(a1, bj1)}, {L1.j, L2.j, S.pair_of(b2)});
        }
        if (b3 == bj3) {
          for (Edge d : {E(c, aj3), E(aj3, bj3), E(c, aj1)}) S.cand(br, add3, {E(a1, bj1), d});
        } else {
          S.cand_among(br, add3, {E(a1, bj1)}, {L1.j, L3.j, S.pair_of(b3)});
        }
        return S.finish("II.3");
      }
      if (v == aj1) {
        case4();
        return S.finish("II.4");
      }
      if (v == c) {
        S.cand("II.5", {E(c, b1), E(aj1, bj2)}, {E(c, aj1), E(c, bj2)});
        if (S.adj(aj1, b1)) case4();
        return S.finish("II.5");
      }
      if (v == bj2 || v == aj3 || v == bj3) {
        S.cand("II.6", {E(bj2, b1)}, {E(c, bj2)});
        S.cand("II.6", {E(aj3, b1)}, {E(aj3, c)});
        if (b3 == bj3) {
          S.cand("II.6", {E(b3, b1)}, {E(aj3, c)});
          S.cand("II.6", {E(b3, b1)}, {E(c, aj1)});
          S.plain("II.6");
        }
        return S.finish("II.6");
      }
      if ((wv.slot == L2.slot || wv.slot == L3.slot) && in_path) {
        case7(wv.slot == L2.slot ? L2 : L3, wv, v);
        return S.finish("II.7");
      }
      S.impossible("II", "farthest neighbour of b1 not located");
    }

    // b1 == bj1, a1 == aj1
    if (v == c) {
      S.cand_out("II.8.1", {E(c, b1)}, {E(c, a1)}, a1);
      for (Vertex u : {aj3, bj2}) S.cand("II.8.2.1", {E(a1, u), E(b1, c)}, {E(u, c), E(c, a1)});
      S.cand("II.8.2.2", {E(a1, b2)}, {E(c, a1)});
      S.cand("II.8.2.2", {E(a1, b2), E(c, b1)}, {E(c, a1), E(c, bj2)});
      S.cand("II.8.2.2", {E(a1, b3)}, {E(c, a1)});
      S.cand("II.8.2.2", {E(a1, b3), E(c, b1)}, {E(c, a1), E(c, aj3)});
      S.cand("II.8.2.2", {E(a1, b3), E(c, b1)}, {E(c, a1), E(aj3, bj3)});
      return S.finish("II.8");
    }
    if (v == bj2 || v == aj3 || v == bj3) {
      S.cand("II.9", {E(b1, bj2)}, {E(c, bj2)});
      S.cand("II.9", {E(b1, aj3)}, {E(aj3, c)});
      if (b3 == bj3) {
        S.cand("II.9", {E(b3, b1), E(aj3, a1)}, {E(a1, c), E(aj3, b3)});
        S.cand("II.9", {E(b3, b1), E(aj3, bj2)}, {E(c, bj2), E(aj3, b3)});
        S.cand("II.9", {E(b1, b3)}, {E(c, aj3)});
        S.cand("II.9", {E(b1, b3), E(a1, bj2)}, {E(c, a1), E(c, bj2)});
        S.cand("II.9", {E(b1, b3)}, {E(a1, c)});
        S.cand_break("II.9", {E(b1, b3), E(a1, b2)}, {E(c, a1)});
      }
      return S.finish("II.9");
    }
    if ((wv.slot == L2.slot || wv.slot == L3.slot) && in_path) {
      case10(wv.slot == L2.slot ? L2 : L3, wv, v);
      return S.finish("II.10");
    }
    S.impossible("II", "farthest neighbour of b1 not located");
  }
};

// The middle tail is strictly the heaviest.
SettledTree middle_heaviest(Settler& S) {
  const Leg M = S.leg(1), E0 = S.leg(0), E2 = S.leg(2);
  S.cand_out("II.M", {}, {}, M.tb);
  std::vector<Vertex> focus{M.tb, M.ta, M.a, M.b, E0.a, E2.a, E0.tb, E2.tb,
                            S.farthest_neighbor(M.tb)};
  S.exchange_search("II.M", focus, 2);
  return S.finish("II.M");
}

}  // namespace

SettledTree settle_type2(Settler& S) {
  const Leg l0 = S.leg(0), l1 = S.leg(1), l2 = S.leg(2);
  if (S.w(l1.tb) > S.w(l0.tb) && S.w(l1.tb) > S.w(l2.tb)) return middle_heaviest(S);
  const bool swap = S.w(l2.tb) > S.w(l0.tb);
  const Leg& L1 = swap ? l2 : l0;
  const Leg& L3 = swap ? l0 : l2;
  TypeII t{S, L1, l1, L3,
           L1.tb, L1.ta, L1.a, L1.b,
           l1.a, l1.b, l1.tb,
           L3.a, L3.b, L3.tb};
  return t.run();
}

}  // namespace mwist::detail
