#include "gct/enriched.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gct {

// ---------------------------------------------------------------------------
// VGraph / VCategory basics
// ---------------------------------------------------------------------------

const Obj& VGraph::at(const std::string& a, const std::string& b) const {
  auto it = hom.find({a, b});
  if (it == hom.end()) throw Error(ErrorKind::Internal, "missing hom (" + a + "," + b + ")");
  return it->second;
}

void VGraph::validate() const {
  for (const auto& a : objects)
    for (const auto& b : objects) {
      const Obj& h = at(a, b);
      if (h.instance() != inst) throw Error(ErrorKind::InstanceMismatch, "hom instance mismatch");
    }
}

const Mor& VCategory::m(const std::string& a, const std::string& b, const std::string& c) const {
  auto it = comp.find({a, b, c});
  if (it == comp.end())
    throw Error(ErrorKind::Internal, "missing composition (" + a + "," + b + "," + c + ")");
  return it->second;
}

const Mor& VCategory::u(const std::string& a) const {
  auto it = unit.find(a);
  if (it == unit.end()) throw Error(ErrorKind::Internal, "missing unit at " + a);
  return it->second;
}

const Mor& GraphMap::at(const std::string& a, const std::string& b) const {
  auto it = onHom.find({a, b});
  if (it == onHom.end()) throw Error(ErrorKind::Internal, "missing hom map (" + a + "," + b + ")");
  return it->second;
}

std::string GraphMap::describe() const {
  std::vector<std::string> parts = {mapLabel(onObj)};
  for (const auto& [key, m] : onHom)
    parts.push_back(tupleLabel({key.first, key.second, m.describe()}));
  return tupleLabel(parts);
}

bool GraphMap::operator==(const GraphMap& o) const {
  return onObj == o.onObj && onHom == o.onHom;
}

GraphMap composeGraphMaps(const GraphMap& f, const GraphMap& g) {
  GraphMap out;
  out.src = f.src;
  out.tgt = g.tgt;
  for (const auto& [a, fa] : f.onObj) out.onObj[a] = g.onObj.at(fa);
  for (const auto& [key, m] : f.onHom)
    out.onHom.emplace(key, compose(m, g.at(f.onObj.at(key.first), f.onObj.at(key.second))));
  return out;
}

GraphMap identityGraphMap(const VGraph& x) {
  GraphMap out;
  out.src = x;
  out.tgt = x;
  for (const auto& a : x.objects) out.onObj[a] = a;
  for (const auto& a : x.objects)
    for (const auto& b : x.objects) out.onHom.emplace(std::make_pair(a, b), Mor::identity(x.at(a, b)));
  return out;
}

// ---------------------------------------------------------------------------
// Laws
// ---------------------------------------------------------------------------

Report validateVCat(const VCategory& a) {
  Report r;
  r.title = "V-category laws";
  try {
    a.graph.validate();
  } catch (const Error& e) {
    r.fail("graph well-formed", e.what());
    return r;
  }
  for (const auto& x : a.objects()) {
    const Mor& ux = a.u(x);
    if (ux.src() != Obj::unit(a.graph.inst) || ux.tgt() != a.hom(x, x)) {
      r.fail("unit endpoints at " + x);
      return r;
    }
  }
  auto witness = [](const Mor& got, const Mor& want) {
    for (const auto& [k, v] : got.objMap())
      if (want.objMap().at(k) != v) return "witness " + k + ": " + v + " vs " + want.objMap().at(k);
    return std::string("arrow-level mismatch");
  };
  for (const auto& x : a.objects())
    for (const auto& y : a.objects()) {
      const Obj& h = a.hom(x, y);
      Mor left = compose(unitorLInv(h),
                         compose(tensorMor(a.u(x), Mor::identity(h)), a.m(x, x, y)));
      r.check("left unit at (" + x + "," + y + ")", left == Mor::identity(h),
              left == Mor::identity(h) ? "" : witness(left, Mor::identity(h)));
      Mor right = compose(unitorRInv(h),
                          compose(tensorMor(Mor::identity(h), a.u(y)), a.m(x, y, y)));
      r.check("right unit at (" + x + "," + y + ")", right == Mor::identity(h),
              right == Mor::identity(h) ? "" : witness(right, Mor::identity(h)));
    }
  for (const auto& x : a.objects())
    for (const auto& y : a.objects())
      for (const auto& z : a.objects())
        for (const auto& w : a.objects()) {
          Mor lhs = compose(tensorMor(a.m(x, y, z), Mor::identity(a.hom(z, w))), a.m(x, z, w));
          Mor rhs = compose(associator(a.hom(x, y), a.hom(y, z), a.hom(z, w)),
                            compose(tensorMor(Mor::identity(a.hom(x, y)), a.m(y, z, w)),
                                    a.m(x, y, w)));
          bool ok = lhs == rhs;
          r.check("associativity at (" + x + "," + y + "," + z + "," + w + ")", ok,
                  ok ? ""
                     : [&] {
                         for (const auto& [k, v] : lhs.objMap())
                           if (rhs.objMap().at(k) != v)
                             return "witness " + k + ": " + v + " vs " + rhs.objMap().at(k);
                         return std::string("arrow-level mismatch");
                       }());
        }
  return r;
}

VFunctor VFunctor::make(const VCategory& a, const VCategory& b, GraphMap m) {
  for (const auto& x : a.objects()) {
    if (compose(a.u(x), m.at(x, x)) != b.u(m.onObj.at(x)))
      throw Error(ErrorKind::InvalidInput, "functor does not preserve the unit at " + x);
  }
  for (const auto& x : a.objects())
    for (const auto& y : a.objects())
      for (const auto& z : a.objects()) {
        Mor lhs = compose(a.m(x, y, z), m.at(x, z));
        Mor rhs = compose(tensorMor(m.at(x, y), m.at(y, z)),
                          b.m(m.onObj.at(x), m.onObj.at(y), m.onObj.at(z)));
        if (lhs != rhs)
          throw Error(ErrorKind::InvalidInput,
                      "functor does not preserve composition at (" + x + "," + y + "," + z + ")");
      }
  VFunctor f;
  f.map = std::move(m);
  return f;
}

VFunctor identityVFunctor(const VCategory& a) {
  VFunctor f;
  f.map = identityGraphMap(a.graph);
  return f;
}

VFunctor composeVFunctors(const VCategory& a, const VCategory& b, const VCategory& c,
                          const VFunctor& f, const VFunctor& g) {
  (void)a;
  (void)b;
  (void)c;
  VFunctor out;
  out.map = composeGraphMaps(f.map, g.map);
  return out;
}

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

VCategory tensorVCat(const VCategory& a, const VCategory& b) {
  if (a.graph.inst != b.graph.inst)
    throw Error(ErrorKind::InstanceMismatch, "tensor of different instances");
  VCategory out;
  out.graph.inst = a.graph.inst;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) out.graph.objects.push_back(pairLabel(x, y));
  std::sort(out.graph.objects.begin(), out.graph.objects.end());
  for (const auto& x : a.objects())
    for (const auto& y : b.objects())
      for (const auto& x2 : a.objects())
        for (const auto& y2 : b.objects())
          out.graph.hom.emplace(std::make_pair(pairLabel(x, y), pairLabel(x2, y2)),
                                tensor(a.hom(x, x2), b.hom(y, y2)));
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) {
      Mor ua = a.u(x);
      Mor ub = b.u(y);
      Obj i = Obj::unit(a.graph.inst);
      auto onObj = [&](const std::string& e) { return pairLabel(ua(e), ub(e)); };
      auto onArr = [&](const std::string& e) {
        return pairLabel(ua.onArrow(e), ub.onArrow(e));
      };
      out.unit.emplace(pairLabel(x, y),
                       buildMor(i, out.graph.at(pairLabel(x, y), pairLabel(x, y)), onObj, onArr));
    }
  for (const auto& x : a.objects())
    for (const auto& y : b.objects())
      for (const auto& x2 : a.objects())
        for (const auto& y2 : b.objects())
          for (const auto& x3 : a.objects())
            for (const auto& y3 : b.objects()) {
              const Mor& ma = a.m(x, x2, x3);
              const Mor& mb = b.m(y, y2, y3);
              Obj src = tensor(out.graph.at(pairLabel(x, y), pairLabel(x2, y2)),
                               out.graph.at(pairLabel(x2, y2), pairLabel(x3, y3)));
              auto shuffle = [&](const std::string& e, bool arrows) {
                auto [l, r] = parsePair(e);
                auto [xa, xb] = parsePair(l);
                auto [ya, yb] = parsePair(r);
                if (arrows)
                  return pairLabel(ma.onArrow(pairLabel(xa, ya)), mb.onArrow(pairLabel(xb, yb)));
                return pairLabel(ma(pairLabel(xa, ya)), mb(pairLabel(xb, yb)));
              };
              out.comp.emplace(
                  std::make_tuple(pairLabel(x, y), pairLabel(x2, y2), pairLabel(x3, y3)),
                  buildMor(src, out.graph.at(pairLabel(x, y), pairLabel(x3, y3)),
                           [&](const std::string& e) { return shuffle(e, false); },
                           [&](const std::string& e) { return shuffle(e, true); }));
            }
  return out;
}

VCategory dualVCat(const VCategory& a) {
  VCategory out;
  out.graph.inst = a.graph.inst;
  out.graph.objects = a.objects();
  for (const auto& x : a.objects())
    for (const auto& y : a.objects()) out.graph.hom.emplace(std::make_pair(x, y), a.hom(y, x));
  out.unit = a.unit;
  for (const auto& x : a.objects())
    for (const auto& y : a.objects())
      for (const auto& z : a.objects())
        out.comp.emplace(std::make_tuple(x, y, z),
                         compose(symmetry(a.hom(y, x), a.hom(z, y)), a.m(z, y, x)));
  return out;
}

VCategory unitVCat(Instance inst) {
  VCategory out;
  out.graph.inst = inst;
  out.graph.objects = {"*"};
  Obj i = Obj::unit(inst);
  out.graph.hom.emplace(std::make_pair(std::string("*"), std::string("*")), i);
  out.unit.emplace("*", Mor::identity(i));
  out.comp.emplace(std::make_tuple(std::string("*"), std::string("*"), std::string("*")),
                   unitorL(i));
  return out;
}

VCategory discreteVCat(Instance inst, const std::vector<std::string>& labels) {
  VCategory out;
  out.graph.inst = inst;
  out.graph.objects = labels;
  std::sort(out.graph.objects.begin(), out.graph.objects.end());
  Obj i = Obj::unit(inst);
  Obj e = Obj::empty(inst);
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects)
      out.graph.hom.emplace(std::make_pair(a, b), a == b ? i : e);
  for (const auto& a : out.graph.objects) out.unit.emplace(a, Mor::identity(i));
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects)
      for (const auto& c : out.graph.objects) {
        Obj src = tensor(out.graph.at(a, b), out.graph.at(b, c));
        if (a == b && b == c)
          out.comp.emplace(std::make_tuple(a, b, c), unitorL(i));
        else
          out.comp.emplace(std::make_tuple(a, b, c),
                           buildMor(src, out.graph.at(a, c),
                                    [](const std::string&) -> std::string {
                                      throw Error(ErrorKind::Internal, "empty tensor has elements");
                                    },
                                    [](const std::string&) -> std::string {
                                      throw Error(ErrorKind::Internal, "empty tensor has elements");
                                    }));
      }
  return out;
}

VCategory indiscreteVCat(Instance inst, const std::vector<std::string>& labels) {
  VCategory out;
  out.graph.inst = inst;
  out.graph.objects = labels;
  std::sort(out.graph.objects.begin(), out.graph.objects.end());
  Obj i = Obj::unit(inst);
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects) out.graph.hom.emplace(std::make_pair(a, b), i);
  for (const auto& a : out.graph.objects) out.unit.emplace(a, Mor::identity(i));
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects)
      for (const auto& c : out.graph.objects)
        out.comp.emplace(std::make_tuple(a, b, c), unitorL(i));
  return out;
}

VCategory gapTwo(const Obj& x) {
  VCategory out;
  out.graph.inst = x.instance();
  out.graph.objects = {"0", "1"};
  Obj i = Obj::unit(x.instance());
  Obj e = Obj::empty(x.instance());
  out.graph.hom.emplace(std::make_pair(std::string("0"), std::string("0")), i);
  out.graph.hom.emplace(std::make_pair(std::string("1"), std::string("1")), i);
  out.graph.hom.emplace(std::make_pair(std::string("0"), std::string("1")), x);
  out.graph.hom.emplace(std::make_pair(std::string("1"), std::string("0")), e);
  out.unit.emplace("0", Mor::identity(i));
  out.unit.emplace("1", Mor::identity(i));
  auto emptyMor = [&](const Obj& src, const Obj& tgt) {
    return buildMor(src, tgt,
                    [](const std::string&) -> std::string {
                      throw Error(ErrorKind::Internal, "empty object has elements");
                    },
                    [](const std::string&) -> std::string {
                      throw Error(ErrorKind::Internal, "empty object has elements");
                    });
  };
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects)
      for (const auto& c : out.graph.objects) {
        Obj src = tensor(out.graph.at(a, b), out.graph.at(b, c));
        const Obj& tgt = out.graph.at(a, c);
        if (src.size() == 0 && src.morphismElems().empty()) {
          out.comp.emplace(std::make_tuple(a, b, c), emptyMor(src, tgt));
        } else if (a == b) {
          out.comp.emplace(std::make_tuple(a, b, c), unitorL(out.graph.at(b, c)));
        } else {  // b == c
          out.comp.emplace(std::make_tuple(a, b, c), unitorR(out.graph.at(a, b)));
        }
      }
  return out;
}

VCategory gapThree(const Obj& c) {
  VCategory out;
  out.graph.inst = c.instance();
  out.graph.objects = {"0", "1", "2"};
  Obj i = Obj::unit(c.instance());
  Obj e = Obj::empty(c.instance());
  Obj cc = tensor(c, c);
  auto homOf = [&](const std::string& a, const std::string& b) -> Obj {
    if (a == b) return i;
    if (a == "0" && b == "1") return c;
    if (a == "1" && b == "2") return c;
    if (a == "0" && b == "2") return cc;
    return e;
  };
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects) out.graph.hom.emplace(std::make_pair(a, b), homOf(a, b));
  for (const auto& a : out.graph.objects) out.unit.emplace(a, Mor::identity(i));
  auto emptyMor = [&](const Obj& src, const Obj& tgt) {
    return buildMor(src, tgt,
                    [](const std::string&) -> std::string {
                      throw Error(ErrorKind::Internal, "empty object has elements");
                    },
                    [](const std::string&) -> std::string {
                      throw Error(ErrorKind::Internal, "empty object has elements");
                    });
  };
  for (const auto& a : out.graph.objects)
    for (const auto& b : out.graph.objects)
      for (const auto& cc2 : out.graph.objects) {
        Obj src = tensor(out.graph.at(a, b), out.graph.at(b, cc2));
        const Obj& tgt = out.graph.at(a, cc2);
        if (src.size() == 0 && src.morphismElems().empty())
          out.comp.emplace(std::make_tuple(a, b, cc2), emptyMor(src, tgt));
        else if (a == b)
          out.comp.emplace(std::make_tuple(a, b, cc2), unitorL(out.graph.at(b, cc2)));
        else if (b == cc2)
          out.comp.emplace(std::make_tuple(a, b, cc2), unitorR(out.graph.at(a, b)));
        else  // a=0, b=1, c=2: concatenation C (x) C -> C (x) C
          out.comp.emplace(std::make_tuple(a, b, cc2), Mor::identity(cc));
      }
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

std::vector<VFunctor> enumerateVFunctors(const VCategory& a, const VCategory& b) {
  std::vector<VFunctor> out;
  std::vector<std::pair<std::string, std::string>> homKeys;
  for (const auto& x : a.objects())
    for (const auto& y : a.objects()) homKeys.push_back({x, y});
  std::map<std::string, std::string> onObj;
  std::map<std::pair<std::string, std::string>, Mor> onHom;

  std::function<void(std::size_t)> assignHom = [&](std::size_t k) {
    if (k == homKeys.size()) {
      GraphMap gm;
      gm.src = a.graph;
      gm.tgt = b.graph;
      gm.onObj = onObj;
      gm.onHom = onHom;
      try {
        out.push_back(VFunctor::make(a, b, std::move(gm)));
      } catch (const Error&) {
      }
      return;
    }
    const auto& [x, y] = homKeys[k];
    for (const auto& cand :
         enumerateMorphisms(a.hom(x, y), b.hom(onObj.at(x), onObj.at(y)))) {
      onHom.emplace(homKeys[k], cand);
      // prune: unit preservation once the diagonal hom map is chosen
      bool ok = true;
      if (x == y) ok = compose(a.u(x), cand) == b.u(onObj.at(x));
      // prune: composition against already-assigned pairs
      for (std::size_t k2 = 0; ok && k2 <= k; ++k2)
        for (std::size_t k3 = 0; ok && k3 <= k; ++k3) {
          const auto& [p, q] = homKeys[k2];
          const auto& [q2, r] = homKeys[k3];
          if (q != q2) continue;
          auto it = onHom.find({p, r});
          if (it == onHom.end()) continue;
          ok = compose(a.m(p, q, r), it->second) ==
               compose(tensorMor(onHom.at({p, q}), onHom.at({q2, r})),
                       b.m(onObj.at(p), onObj.at(q), onObj.at(r)));
        }
      if (ok) assignHom(k + 1);
      onHom.erase(homKeys[k]);
    }
  };
  std::function<void(std::size_t)> assignObj = [&](std::size_t i) {
    if (i == a.objects().size()) {
      assignHom(0);
      return;
    }
    for (const auto& cand : b.objects()) {
      onObj[a.objects()[i]] = cand;
      assignObj(i + 1);
      onObj.erase(a.objects()[i]);
    }
    if (b.objects().empty() && !a.objects().empty()) return;
  };
  assignObj(0);
  std::sort(out.begin(), out.end());
  if (out.size() > bounds().maxCandidates)
    throw Error(ErrorKind::BoundBreach, "too many V-functors to enumerate");
  return out;
}

std::optional<VCatIso> findVCatIso(const VCategory& a, const VCategory& b) {
  if (a.objects().size() != b.objects().size()) return std::nullopt;
  std::vector<std::string> perm = b.objects();
  std::sort(perm.begin(), perm.end());
  do {
    std::map<std::string, std::string> onObj;
    for (std::size_t i = 0; i < a.objects().size(); ++i) onObj[a.objects()[i]] = perm[i];
    // per-hom isomorphism search
    std::map<std::pair<std::string, std::string>, Mor> isos;
    bool ok = true;
    for (const auto& x : a.objects()) {
      for (const auto& y : a.objects()) {
        auto found = findIso(a.hom(x, y), b.hom(onObj.at(x), onObj.at(y)));
        if (!found) {
          ok = false;
          break;
        }
        isos.emplace(std::make_pair(x, y), *found);
      }
      if (!ok) break;
    }
    if (!ok) continue;
    // naive: require the found isos to commute; refine by searching per hom
    // when the first choice fails
    auto commutes = [&]() {
      for (const auto& x : a.objects())
        if (compose(a.u(x), isos.at({x, x})) != b.u(onObj.at(x))) return false;
      for (const auto& x : a.objects())
        for (const auto& y : a.objects())
          for (const auto& z : a.objects()) {
            if (compose(a.m(x, y, z), isos.at({x, z})) !=
                compose(tensorMor(isos.at({x, y}), isos.at({y, z})),
                        b.m(onObj.at(x), onObj.at(y), onObj.at(z))))
              return false;
          }
      return true;
    };
    // exhaustive search over all hom isos (small instances only)
    std::vector<std::pair<std::string, std::string>> keys;
    for (const auto& x : a.objects())
      for (const auto& y : a.objects()) keys.push_back({x, y});
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
      if (k == keys.size()) return commutes();
      const auto& [x, y] = keys[k];
      for (const auto& cand :
           enumerateMorphisms(a.hom(x, y), b.hom(onObj.at(x), onObj.at(y)))) {
        if (!isIso(cand)) continue;
        isos[keys[k]] = cand;
        if (rec(k + 1)) return true;
      }
      return false;
    };
    if (rec(0)) {
      VCatIso iso;
      iso.onObj = onObj;
      iso.homIso = isos;
      return iso;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Square product
// ---------------------------------------------------------------------------

SquareProduct squareS(const VGraph& x, const VGraph& y) {
  if (x.objects != y.objects)
    throw Error(ErrorKind::InvalidInput, "squareS needs a shared object set");
  SquareProduct out;
  out.x = x;
  out.y = y;
  out.graph.inst = x.inst;
  out.graph.objects = x.objects;
  for (const auto& a : x.objects)
    for (const auto& b : x.objects) {
      std::vector<Obj> parts;
      for (const auto& z : x.objects) parts.push_back(tensor(x.at(a, z), y.at(z, b)));
      Coproduct cp = coproduct(parts);
      out.graph.hom.emplace(std::make_pair(a, b), cp.apex);
      out.parts.emplace(std::make_pair(a, b), std::move(cp));
    }
  return out;
}

Mor SquareProduct::inj(const std::string& a, const std::string& z, const std::string& b) const {
  const Coproduct& cp = parts.at({a, b});
  std::size_t idx = static_cast<std::size_t>(
      std::lower_bound(graph.objects.begin(), graph.objects.end(), z) - graph.objects.begin());
  return cp.injections.at(idx);
}

Mor SquareProduct::solve(const std::string& a, const std::string& b,
                         const std::vector<Mor>& legs) const {
  return coproductMediator(parts.at({a, b}), legs);
}

GraphMap mapSquare(const SquareProduct& src, const SquareProduct& tgt, const GraphMap& f,
                   const GraphMap& g) {
  if (f.onObj != g.onObj)
    throw Error(ErrorKind::InvalidInput, "mapSquare needs matching object maps");
  GraphMap out;
  out.src = src.graph;
  out.tgt = tgt.graph;
  out.onObj = f.onObj;
  for (const auto& a : src.graph.objects)
    for (const auto& b : src.graph.objects) {
      std::vector<Mor> legs;
      for (const auto& z : src.graph.objects)
        legs.push_back(compose(tensorMor(f.at(a, z), g.at(z, b)),
                               tgt.inj(f.onObj.at(a), f.onObj.at(z), f.onObj.at(b))));
      out.onHom.emplace(std::make_pair(a, b), src.solve(a, b, legs));
    }
  return out;
}

VGraph tensorGraph(const VGraph& x, const VGraph& y) {
  VGraph out;
  out.inst = x.inst;
  for (const auto& a : x.objects)
    for (const auto& b : y.objects) out.objects.push_back(pairLabel(a, b));
  std::sort(out.objects.begin(), out.objects.end());
  for (const auto& a : x.objects)
    for (const auto& b : y.objects)
      for (const auto& a2 : x.objects)
        for (const auto& b2 : y.objects)
          out.hom.emplace(std::make_pair(pairLabel(a, b), pairLabel(a2, b2)),
                          tensor(x.at(a, a2), y.at(b, b2)));
  return out;
}

std::map<std::pair<std::string, std::string>, Mor> middleFourExchange(const VGraph& x,
                                                                      const VGraph& xp,
                                                                      const VGraph& y,
                                                                      const VGraph& yp) {
  SquareProduct lhs = squareS(tensorGraph(x, xp), tensorGraph(y, yp));
  SquareProduct sq1 = squareS(x, y);
  SquareProduct sq2 = squareS(xp, yp);
  std::map<std::pair<std::string, std::string>, Mor> out;
  for (const auto& ab : lhs.graph.objects)
    for (const auto& cd : lhs.graph.objects) {
      auto [a, a2] = parsePair(ab);
      auto [b, b2] = parsePair(cd);
      std::vector<Mor> legs;
      for (const auto& zz : lhs.graph.objects) {
        auto [z, z2] = parsePair(zz);
        // (X(a,z)(x)X'(a2,z2)) (x) (Y(z,b)(x)Y'(z2,b2)) ->
        //   (X square Y)(a,b) (x) (X' square Y')(a2,b2)
        Obj src = tensor(tensor(x.at(a, z), xp.at(a2, z2)), tensor(y.at(z, b), yp.at(z2, b2)));
        Mor i1 = sq1.inj(a, z, b);
        Mor i2 = sq2.inj(a2, z2, b2);
        auto shuffle = [&](const std::string& e, bool arrows) {
          auto [l, r] = parsePair(e);
          auto [xe, xpe] = parsePair(l);
          auto [ye, ype] = parsePair(r);
          if (arrows)
            return pairLabel(i1.onArrow(pairLabel(xe, ye)), i2.onArrow(pairLabel(xpe, ype)));
          return pairLabel(i1(pairLabel(xe, ye)), i2(pairLabel(xpe, ype)));
        };
        legs.push_back(buildMor(src, tensor(sq1.graph.at(a, b), sq2.graph.at(a2, b2)),
                                [&](const std::string& e) { return shuffle(e, false); },
                                [&](const std::string& e) { return shuffle(e, true); }));
      }
      Mor iso = lhs.solve(ab, cd, legs);
      if (!isIso(iso))
        throw Error(ErrorKind::Internal, "middle four exchange is not an isomorphism");
      out.emplace(std::make_pair(ab, cd), iso);
    }
  return out;
}

GraphMap compositionSquare(const VCategory& a) {
  SquareProduct sq = squareS(a.graph, a.graph);
  GraphMap out;
  out.src = sq.graph;
  out.tgt = a.graph;
  for (const auto& x : a.objects()) out.onObj[x] = x;
  for (const auto& x : a.objects())
    for (const auto& y : a.objects()) {
      std::vector<Mor> legs;
      for (const auto& z : a.objects()) legs.push_back(a.m(x, z, y));
      out.onHom.emplace(std::make_pair(x, y), sq.solve(x, y, legs));
    }
  return out;
}

bool functorCriterion(const VCategory& a, const VCategory& b, const GraphMap& f) {
  SquareProduct sqA = squareS(a.graph, a.graph);
  SquareProduct sqB = squareS(b.graph, b.graph);
  GraphMap ff = mapSquare(sqA, sqB, f, f);
  GraphMap viaA = composeGraphMaps(compositionSquare(a), f);
  GraphMap viaB = composeGraphMaps(ff, compositionSquare(b));
  if (!(viaA == viaB)) return false;
  for (const auto& x : a.objects())
    if (compose(a.u(x), f.at(x, x)) != b.u(f.onObj.at(x))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Homotopies
// ---------------------------------------------------------------------------

ElemHomotopy mkElemHomotopy(const CocatInterval& j, const Mor& f, const Mor& g, const Mor& h) {
  const Obj& x = f.src();
  Mor atTop = compose(unitorLInv(x), compose(tensorMor(j.d0, Mor::identity(x)), h));
  Mor atBot = compose(unitorLInv(x), compose(tensorMor(j.d1, Mor::identity(x)), h));
  if (atTop != f) throw Error(ErrorKind::InvalidInput, "homotopy endpoint at d0 is not f");
  if (atBot != g) throw Error(ErrorKind::InvalidInput, "homotopy endpoint at d1 is not g");
  return {j, f, g, h};
}

ElemHomotopy constantElemHomotopy(const CocatInterval& j, const Mor& f) {
  Mor h = compose(tensorMor(j.p, Mor::identity(f.src())), compose(unitorL(f.src()), f));
  return {j, f, f, h};
}

ElemHomotopy verticalElem(const ElemHomotopy& h1, const ElemHomotopy& h2) {
  if (!(h1.to == h2.from))
    throw Error(ErrorKind::InvalidInput, "vertical composite endpoint mismatch");
  const Obj& x = h1.from.src();
  Mor g = solveFromI2Tensored(h1.interval, x, h2.h, h1.h);
  Mor comp = compose(tensorMor(h1.interval.c, Mor::identity(x)), g);
  return {h1.interval, h1.from, h2.to, comp};
}

ElemHomotopy horizontalElem(const ElemHomotopy& f, const ElemHomotopy& k) {
  // K(I1 (x) g) . hF
  Mor hF = compose(f.h, k.from);
  Mor kg = compose(tensorMor(Mor::identity(f.interval.level1), f.to), k.h);
  ElemHomotopy first = {f.interval, compose(f.from, k.from), compose(f.to, k.from), hF};
  ElemHomotopy second = {f.interval, compose(f.to, k.from), compose(f.to, k.to), kg};
  return verticalElem(first, second);
}

ElemHomotopy horizontalElemViaComonoid(const ElemHomotopy& f, const ElemHomotopy& k) {
  // I1 (x) X --delta (x) 1--> I1 (x) I1 (x) X --1 (x) F--> I1 (x) Y --K--> Z
  UnitComonoid u = comonoidOnI1(f.interval);
  const Obj& x = f.from.src();
  const Obj& i1 = f.interval.level1;
  Mor dd = compose(tensorMor(u.delta, Mor::identity(x)), associator(i1, i1, x));
  Mor h = compose(dd, compose(tensorMor(Mor::identity(i1), f.h), k.h));
  return mkElemHomotopy(f.interval, compose(f.from, k.from), compose(f.to, k.to), h);
}

ElemHomotopy invertElem(const ElemHomotopy& h) {
  if (!h.interval.sigma) throw Error(ErrorKind::InvalidInput, "inverting needs a cogroupoid");
  Mor flipped = compose(tensorMor(*h.interval.sigma, Mor::identity(h.from.src())), h.h);
  return {h.interval, h.to, h.from, flipped};
}

ElemHomotopy GraphHomotopy::elem(const std::string& a, const std::string& b) const {
  return {interval, from.at(a, b), to.at(a, b), h.at({a, b})};
}

GraphHomotopy mkHomotopy(const CocatInterval& j, const GraphMap& f, const GraphMap& g,
                         std::map<std::pair<std::string, std::string>, Mor> h) {
  if (f.onObj != g.onObj)
    throw Error(ErrorKind::InvalidInput, "homotopies need equal object assignments");
  for (const auto& a : f.src.objects)
    for (const auto& b : f.src.objects) {
      const Obj& x = f.src.at(a, b);
      const Mor& hab = h.at({a, b});
      Mor atTop = compose(unitorLInv(x), compose(tensorMor(j.d0, Mor::identity(x)), hab));
      Mor atBot = compose(unitorLInv(x), compose(tensorMor(j.d1, Mor::identity(x)), hab));
      if (atTop != f.at(a, b) || atBot != g.at(a, b))
        throw Error(ErrorKind::InvalidInput,
                    "homotopy endpoints fail at (" + a + "," + b + ")");
    }
  return {j, f, g, std::move(h)};
}

GraphHomotopy constantHomotopy(const CocatInterval& j, const GraphMap& f) {
  std::map<std::pair<std::string, std::string>, Mor> h;
  for (const auto& a : f.src.objects)
    for (const auto& b : f.src.objects) {
      const Obj& x = f.src.at(a, b);
      h.emplace(std::make_pair(a, b),
                compose(tensorMor(j.p, Mor::identity(x)), compose(unitorL(x), f.at(a, b))));
    }
  return {j, f, f, std::move(h)};
}

GraphHomotopy verticalComposite(const GraphHomotopy& h1, const GraphHomotopy& h2) {
  std::map<std::pair<std::string, std::string>, Mor> h;
  for (const auto& [key, m] : h1.h) {
    ElemHomotopy e = verticalElem(h1.elem(key.first, key.second), h2.elem(key.first, key.second));
    h.emplace(key, e.h);
  }
  return {h1.interval, h1.from, h2.to, std::move(h)};
}

GraphHomotopy whiskerPre(const GraphHomotopy& h, const GraphMap& u) {
  std::map<std::pair<std::string, std::string>, Mor> out;
  for (const auto& a : u.src.objects)
    for (const auto& b : u.src.objects) {
      const Mor& uab = u.at(a, b);
      out.emplace(std::make_pair(a, b),
                  compose(tensorMor(Mor::identity(h.interval.level1), uab),
                          h.h.at({u.onObj.at(a), u.onObj.at(b)})));
    }
  return {h.interval, composeGraphMaps(u, h.from), composeGraphMaps(u, h.to), std::move(out)};
}

GraphHomotopy whiskerPost(const GraphHomotopy& h, const GraphMap& v) {
  std::map<std::pair<std::string, std::string>, Mor> out;
  for (const auto& [key, m] : h.h)
    out.emplace(key, compose(m, v.at(h.from.onObj.at(key.first), h.from.onObj.at(key.second))));
  return {h.interval, composeGraphMaps(h.from, v), composeGraphMaps(h.to, v), std::move(out)};
}

GraphHomotopy flipHomotopy(const GraphHomotopy& h) {
  if (!h.interval.sigma) throw Error(ErrorKind::InvalidInput, "flipping needs a cogroupoid");
  std::map<std::pair<std::string, std::string>, Mor> out;
  for (const auto& [key, m] : h.h)
    out.emplace(key, compose(tensorMor(*h.interval.sigma,
                                       Mor::identity(h.from.src.at(key.first, key.second))),
                             m));
  return {h.interval, h.to, h.from, std::move(out)};
}

bool homotopyEqual(const GraphHomotopy& a, const GraphHomotopy& b) { return a.h == b.h; }

GraphHomotopy whiskerSquareRight(const SquareProduct& src, const SquareProduct& tgt,
                                 const GraphHomotopy& h, const GraphMap& phi) {
  // H square phi : legs (I1 (x) X(a,z)) (x) Phi(z,b) shuffled through the
  // interval coordinate
  const Obj& i1 = h.interval.level1;
  GraphMap fromSq = mapSquare(src, tgt, h.from, phi);
  GraphMap toSq = mapSquare(src, tgt, h.to, phi);
  std::map<std::pair<std::string, std::string>, Mor> out;
  for (const auto& a : src.graph.objects)
    for (const auto& b : src.graph.objects) {
      // I1 (x) (X square Phi)(a,b) -> (Y square Psi)(fa,fb)
      // solve out of the tensored coproduct
      const Coproduct& cp = src.parts.at({a, b});
      Diagram dg;
      for (std::size_t k = 0; k < cp.injections.size(); ++k)
        dg.addNode("n" + std::to_string(k), tensor(i1, cp.injections[k].src()));
      Colimit tc = [&] {
        // coproduct = colimit of a discrete diagram
        return finiteColimit(dg);
      }();
      std::map<std::string, Mor> cmpCone;
      for (std::size_t k = 0; k < cp.injections.size(); ++k)
        cmpCone.emplace("n" + std::to_string(k),
                        tensorMor(Mor::identity(i1), cp.injections[k]));
      Mor cmp = tc.mediator(cmpCone);
      if (!isIso(cmp))
        throw Error(ErrorKind::Internal, "tensor did not preserve the square coproduct");
      std::map<std::string, Mor> legs;
      for (std::size_t k = 0; k < cp.injections.size(); ++k) {
        const std::string& z = src.graph.objects[k];
        // I1 (x) (X(a,z) (x) Phi(z,b)) -> result: route the interval into the
        // left factor
        Obj xz = src.x.at(a, z);
        Obj pz = src.y.at(z, b);
        Mor shuffleIn = compose(associatorInv(i1, xz, pz),
                                tensorMor(h.h.at({a, z}), phi.at(z, b)));
        legs.emplace("n" + std::to_string(k),
                     compose(shuffleIn, tgt.inj(h.from.onObj.at(a), phi.onObj.at(z),
                                                 phi.onObj.at(b))));
      }
      out.emplace(std::make_pair(a, b), compose(inverse(cmp), tc.mediator(legs)));
    }
  return {h.interval, fromSq, toSq, std::move(out)};
}

GraphHomotopy whiskerSquareLeft(const SquareProduct& src, const SquareProduct& tgt,
                                const GraphMap& phi, const GraphHomotopy& h) {
  const Obj& i1 = h.interval.level1;
  GraphMap fromSq = mapSquare(src, tgt, phi, h.from);
  GraphMap toSq = mapSquare(src, tgt, phi, h.to);
  std::map<std::pair<std::string, std::string>, Mor> out;
  for (const auto& a : src.graph.objects)
    for (const auto& b : src.graph.objects) {
      const Coproduct& cp = src.parts.at({a, b});
      Diagram dg;
      for (std::size_t k = 0; k < cp.injections.size(); ++k)
        dg.addNode("n" + std::to_string(k), tensor(i1, cp.injections[k].src()));
      Colimit tc = finiteColimit(dg);
      std::map<std::string, Mor> cmpCone;
      for (std::size_t k = 0; k < cp.injections.size(); ++k)
        cmpCone.emplace("n" + std::to_string(k),
                        tensorMor(Mor::identity(i1), cp.injections[k]));
      Mor cmp = tc.mediator(cmpCone);
      if (!isIso(cmp))
        throw Error(ErrorKind::Internal, "tensor did not preserve the square coproduct");
      std::map<std::string, Mor> legs;
      for (std::size_t k = 0; k < cp.injections.size(); ++k) {
        const std::string& z = src.graph.objects[k];
        Obj xz = src.x.at(a, z);
        Obj pz = src.y.at(z, b);
        // I1 (x) (Phi(a,z) (x) X(z,b)): route the interval into the right factor
        auto route = [&](const std::string& e, bool arrows) {
          auto [t, rest] = parsePair(e);
          auto [pe, xe] = parsePair(rest);
          const Mor& pm = phi.at(a, z);
          const Mor& hm = h.h.at({z, b});
          if (arrows)
            return pairLabel(pm.onArrow(pe), hm.onArrow(pairLabel(t, xe)));
          return pairLabel(pm(pe), hm(pairLabel(t, xe)));
        };
        Obj from = tensor(i1, tensor(xz, pz));
        Obj mid = tensor(tgt.x.at(phi.onObj.at(a), phi.onObj.at(z)),
                         tgt.y.at(h.from.onObj.at(z), h.from.onObj.at(b)));
        Mor shuffled = buildMor(from, mid, [&](const std::string& e) { return route(e, false); },
                                [&](const std::string& e) { return route(e, true); });
        legs.emplace("n" + std::to_string(k),
                     compose(shuffled, tgt.inj(phi.onObj.at(a), phi.onObj.at(z),
                                               h.from.onObj.at(b))));
      }
      out.emplace(std::make_pair(a, b), compose(inverse(cmp), tc.mediator(legs)));
    }
  return {h.interval, fromSq, toSq, std::move(out)};
}

}  // namespace gct
