#include <algorithm>
#include <functional>
#include <numeric>

#include "gct/presentation.hpp"

namespace gct {

void Diagram::addNode(const std::string& name, const Obj& x) {
  if (nodes.count(name)) throw Error(ErrorKind::InvalidInput, "duplicate node: " + name);
  nodes.emplace(name, x);
}

void Diagram::addEdge(const std::string& name, const std::string& src, const std::string& tgt,
                      const Mor& map) {
  edges.push_back({name, src, tgt, map});
}

void Diagram::validate() const {
  if (nodes.empty()) throw Error(ErrorKind::InvalidInput, "empty diagram");
  Instance inst = nodes.begin()->second.instance();
  for (const auto& [n, x] : nodes)
    if (x.instance() != inst)
      throw Error(ErrorKind::InstanceMismatch, "diagram mixes instances at " + n);
  for (const auto& e : edges) {
    auto s = nodes.find(e.src);
    auto t = nodes.find(e.tgt);
    if (s == nodes.end() || t == nodes.end())
      throw Error(ErrorKind::InvalidInput, "edge endpoint missing: " + e.name);
    if (e.map.src() != s->second || e.map.tgt() != t->second)
      throw Error(ErrorKind::InvalidInput, "edge map inconsistent with nodes: " + e.name);
  }
}

Diagram Diagram::span(const Obj& apex, const Mor& left, const Mor& right) {
  if (left.src() != apex || right.src() != apex)
    throw Error(ErrorKind::InvalidInput, "span legs must start at the apex");
  Diagram d;
  d.addNode("A", apex);
  d.addNode("L", left.tgt());
  d.addNode("R", right.tgt());
  d.addEdge("l", "A", "L", left);
  d.addEdge("r", "A", "R", right);
  return d;
}

Diagram Diagram::parallelPair(const Mor& f, const Mor& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt())
    throw Error(ErrorKind::InvalidInput, "parallel pair must share endpoints");
  Diagram d;
  d.addNode("X", f.src());
  d.addNode("Y", f.tgt());
  d.addEdge("f", "X", "Y", f);
  d.addEdge("g", "X", "Y", g);
  return d;
}

// ---------------------------------------------------------------------------
// Colimits
// ---------------------------------------------------------------------------

namespace {

struct UnionFind {
  std::map<std::string, std::string> parent;
  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return parent.find(x)->second;
    }
    if (it->second == x) return it->second;
    const std::string root = find(it->second);
    parent[x] = root;
    return parent.find(x)->second;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);  // keep the lexicographically least as root
    parent[rb] = ra;
  }
};

Colimit finSetColimit(const Diagram& d) {
  UnionFind uf;
  for (const auto& [n, x] : d.nodes)
    for (const auto& e : x.elems()) uf.find(pairLabel(n, e));
  for (const auto& e : d.edges)
    for (const auto& el : d.nodes.at(e.src).elems())
      uf.unite(pairLabel(e.src, el), pairLabel(e.tgt, e.map(el)));

  Colimit out;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> classes;
  for (const auto& [n, x] : d.nodes)
    for (const auto& el : x.elems()) classes[uf.find(pairLabel(n, el))].push_back({n, el});
  std::vector<std::string> apexElems;
  for (const auto& [rep, members] : classes) apexElems.push_back(rep);
  out.apex = Obj::set(std::move(apexElems));
  out.objectClasses = classes;
  for (const auto& [n, x] : d.nodes) {
    std::map<std::string, std::string> t;
    for (const auto& el : x.elems()) t[el] = uf.find(pairLabel(n, el));
    out.injections.emplace(n, Mor::fn(x, out.apex, std::move(t)));
  }
  out.diagram = std::make_shared<const Diagram>(d);
  return out;
}

Colimit finCatColimit(const Diagram& d) {
  UnionFind uf;
  for (const auto& [n, x] : d.nodes)
    for (const auto& o : x.cat().objects) uf.find(pairLabel(n, o));
  for (const auto& e : d.edges)
    for (const auto& o : d.nodes.at(e.src).cat().objects)
      uf.unite(pairLabel(e.src, o), pairLabel(e.tgt, e.map(o)));

  Presentation p;
  std::set<std::string> objSet;
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> classes;
  for (const auto& [n, x] : d.nodes)
    for (const auto& o : x.cat().objects) {
      const std::string cls = uf.find(pairLabel(n, o));
      objSet.insert(cls);
      classes[cls].push_back({n, o});
    }
  p.objects.assign(objSet.begin(), objSet.end());

  auto genName = [](const std::string& node, const std::string& arrow) {
    return pairLabel(node, arrow);
  };
  for (const auto& [n, x] : d.nodes)
    for (const auto& a : x.cat().arrows) {
      if (x.cat().isIdentity(a.name)) continue;
      p.gens.push_back({genName(n, a.name), uf.find(pairLabel(n, a.src)),
                        uf.find(pairLabel(n, a.tgt))});
    }
  p.sortGens();

  auto wordOfArrow = [&](const std::string& node, const Obj& x,
                         const std::string& arrow) -> Presentation::Word {
    const auto& a = x.cat().arrow(arrow);
    Presentation::Word w;
    w.src = uf.find(pairLabel(node, a.src));
    w.tgt = uf.find(pairLabel(node, a.tgt));
    if (!x.cat().isIdentity(arrow)) w.letters.push_back(p.genId(genName(node, arrow)));
    return w;
  };

  for (const auto& [n, x] : d.nodes)
    for (const auto& f : x.cat().arrows)
      for (const auto& g : x.cat().arrows) {
        if (f.tgt != g.src) continue;
        if (x.cat().isIdentity(f.name) || x.cat().isIdentity(g.name)) continue;
        Presentation::Word lhs = wordOfArrow(n, x, f.name);
        Presentation::Word rhs = wordOfArrow(n, x, g.name);
        lhs.letters.insert(lhs.letters.end(), rhs.letters.begin(), rhs.letters.end());
        lhs.tgt = rhs.tgt;
        p.relations.push_back({lhs, wordOfArrow(n, x, x.cat().compose(f.name, g.name))});
      }
  for (const auto& e : d.edges)
    for (const auto& a : d.nodes.at(e.src).cat().arrows) {
      if (d.nodes.at(e.src).cat().isIdentity(a.name)) continue;
      p.relations.push_back({wordOfArrow(e.src, d.nodes.at(e.src), a.name),
                             wordOfArrow(e.tgt, d.nodes.at(e.tgt), e.map.onArrow(a.name))});
    }

  SolvedPresentation solved = solvePresentation(p);
  Colimit out;
  out.apex = solved.category;
  out.objectClasses = classes;
  for (const auto& a : out.apex.cat().arrows) {
    std::vector<Colimit::Letter> word;
    for (int id : solved.lettersOf(a.name)) {
      auto [node, arrow] = parsePair(solved.pres.gens[id].name);
      word.push_back({node, arrow});
    }
    out.arrowWords[a.name] = std::move(word);
  }
  for (const auto& [n, x] : d.nodes) {
    std::map<std::string, std::string> obj, arr;
    for (const auto& o : x.cat().objects) obj[o] = uf.find(pairLabel(n, o));
    for (const auto& a : x.cat().arrows) arr[a.name] = solved.arrowOfWord(wordOfArrow(n, x, a.name));
    out.injections.emplace(n, Mor::functor(x, out.apex, std::move(obj), std::move(arr)));
  }
  out.diagram = std::make_shared<const Diagram>(d);
  return out;
}

}  // namespace

Colimit finiteColimit(const Diagram& d) {
  d.validate();
  if (d.nodes.begin()->second.instance() == Instance::FinSet) return finSetColimit(d);
  return finCatColimit(d);
}

Mor Colimit::mediator(const std::map<std::string, Mor>& cocone) const {
  const Diagram& d = *diagram;
  for (const auto& [n, x] : d.nodes)
    if (!cocone.count(n)) throw Error(ErrorKind::MediatorFailure, "cocone missing leg at " + n);
  const Obj& w = cocone.begin()->second.tgt();
  for (const auto& [n, leg] : cocone) {
    if (leg.tgt() != w) throw Error(ErrorKind::MediatorFailure, "cocone legs disagree on target");
    if (leg.src() != d.nodes.at(n))
      throw Error(ErrorKind::MediatorFailure, "cocone leg has wrong source at " + n);
  }
  for (const auto& e : d.edges)
    if (compose(e.map, cocone.at(e.tgt)) != cocone.at(e.src))
      throw Error(ErrorKind::MediatorFailure, "cocone incompatible across edge " + e.name);

  std::map<std::string, std::string> obj;
  for (const auto& [cls, members] : objectClasses) {
    for (const auto& [node, el] : members) {
      const std::string img = cocone.at(node)(el);
      auto it = obj.find(cls);
      if (it == obj.end())
        obj[cls] = img;
      else if (it->second != img)
        throw Error(ErrorKind::MediatorFailure, "cocone not constant on class " + cls);
    }
  }
  if (apex.instance() == Instance::FinSet) {
    Mor m = Mor::fn(apex, w, std::move(obj));
    for (const auto& [n, leg] : cocone)
      if (compose(injections.at(n), m) != leg)
        throw Error(ErrorKind::MediatorFailure, "mediator does not factor leg at " + n);
    return m;
  }
  std::map<std::string, std::string> arr;
  for (const auto& a : apex.cat().arrows) {
    const auto& word = arrowWords.at(a.name);
    if (word.empty()) {
      arr[a.name] = w.cat().identity.at(obj.at(a.src));
      continue;
    }
    std::string acc;
    for (const auto& letter : word) {
      const std::string img = cocone.at(letter.node).onArrow(letter.arrow);
      acc = acc.empty() ? img : w.cat().compose(acc, img);
    }
    arr[a.name] = acc;
  }
  Mor m = Mor::functor(apex, w, std::move(obj), std::move(arr));
  for (const auto& [n, leg] : cocone)
    if (compose(injections.at(n), m) != leg)
      throw Error(ErrorKind::MediatorFailure, "mediator does not factor leg at " + n);
  return m;
}

// ---------------------------------------------------------------------------
// Limits
// ---------------------------------------------------------------------------

namespace {

// Backtracking enumeration of compatible families over the sorted node list.
void enumerateFamilies(
    const std::vector<std::string>& nodeNames,
    const std::function<const std::vector<std::string>&(const std::string&)>& candidates,
    const std::function<bool(const std::map<std::string, std::string>&)>& partialOk,
    const std::function<void(const std::map<std::string, std::string>&)>& emit) {
  std::map<std::string, std::string> family;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == nodeNames.size()) {
      emit(family);
      return;
    }
    for (const auto& cand : candidates(nodeNames[i])) {
      family[nodeNames[i]] = cand;
      if (partialOk(family)) rec(i + 1);
      family.erase(nodeNames[i]);
    }
  };
  rec(0);
}

}  // namespace

namespace {
// Assignment order for the backtracking: after a seed node, repeatedly pick
// the node with the most edges into the already-assigned set, so that edge
// equations prune as early as possible (corner-style nodes with two incoming
// edges become forced instead of free).
std::vector<std::string> assignmentOrder(const Diagram& d) {
  std::vector<std::string> order;
  std::set<std::string> placed;
  auto degreeInto = [&](const std::string& n) {
    int deg = 0;
    for (const auto& e : d.edges) {
      if (e.src == n && placed.count(e.tgt)) ++deg;
      if (e.tgt == n && placed.count(e.src)) ++deg;
    }
    return deg;
  };
  while (placed.size() < d.nodes.size()) {
    std::string best;
    int bestDeg = -1;
    std::size_t bestSize = 0;
    for (const auto& [n, x] : d.nodes) {
      if (placed.count(n)) continue;
      int deg = degreeInto(n);
      std::size_t sz = x.objectElems().size();
      if (deg > bestDeg || (deg == bestDeg && sz < bestSize)) {
        best = n;
        bestDeg = deg;
        bestSize = sz;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}
}  // namespace

Limit finiteLimit(const Diagram& d) {
  d.validate();
  std::vector<std::string> nodeNames;
  for (const auto& [n, x] : d.nodes) nodeNames.push_back(n);
  const std::vector<std::string> iterOrder = assignmentOrder(d);
  const Instance inst = d.nodes.begin()->second.instance();

  auto edgesOk = [&](const std::map<std::string, std::string>& family, bool arrows) {
    for (const auto& e : d.edges) {
      auto s = family.find(e.src);
      auto t = family.find(e.tgt);
      if (s == family.end() || t == family.end()) continue;
      const std::string img = arrows ? e.map.onArrow(s->second) : e.map(s->second);
      if (img != t->second) return false;
    }
    return true;
  };
  auto familyLabel = [&](const std::map<std::string, std::string>& family) {
    std::vector<std::string> parts;
    for (const auto& n : nodeNames) parts.push_back(family.at(n));
    return tupleLabel(parts);
  };

  Limit out;
  if (inst == Instance::FinSet) {
    std::vector<std::string> elems;
    enumerateFamilies(
        iterOrder, [&](const std::string& n) -> const std::vector<std::string>& {
          return d.nodes.at(n).elems();
        },
        [&](const auto& f) { return edgesOk(f, false); },
        [&](const auto& f) { elems.push_back(familyLabel(f)); });
    out.apex = Obj::set(std::move(elems));
    for (std::size_t i = 0; i < nodeNames.size(); ++i) {
      std::map<std::string, std::string> t;
      for (const auto& el : out.apex.elems()) t[el] = parseTuple(el)[i];
      out.projections.emplace(nodeNames[i], Mor::fn(out.apex, d.nodes.at(nodeNames[i]), std::move(t)));
    }
    out.diagram = std::make_shared<const Diagram>(d);
    return out;
  }

  CatData c;
  std::map<std::string, std::vector<std::string>> objCands, arrCands;
  for (const auto& [n, x] : d.nodes) {
    objCands[n] = x.cat().objects;
    arrCands[n] = x.morphismElems();
  }
  enumerateFamilies(
      iterOrder, [&](const std::string& n) -> const std::vector<std::string>& { return objCands.at(n); },
      [&](const auto& f) { return edgesOk(f, false); },
      [&](const auto& f) { c.objects.push_back(familyLabel(f)); });
  std::set<std::string> objSet(c.objects.begin(), c.objects.end());
  enumerateFamilies(
      iterOrder, [&](const std::string& n) -> const std::vector<std::string>& { return arrCands.at(n); },
      [&](const auto& f) { return edgesOk(f, true); },
      [&](const auto& f) {
        std::vector<std::string> srcs, tgts;
        for (const auto& n : nodeNames) {
          const auto& a = d.nodes.at(n).cat().arrow(f.at(n));
          srcs.push_back(a.src);
          tgts.push_back(a.tgt);
        }
        const std::string s = tupleLabel(srcs), t = tupleLabel(tgts);
        if (!objSet.count(s) || !objSet.count(t)) return;  // cannot happen; defensive drop
        c.arrows.push_back({familyLabel(f), s, t});
      });
  for (const auto& o : c.objects) {
    auto parts = parseTuple(o);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < nodeNames.size(); ++i)
      ids.push_back(d.nodes.at(nodeNames[i]).cat().identity.at(parts[i]));
    c.identity[o] = tupleLabel(ids);
  }
  for (const auto& f : c.arrows)
    for (const auto& g : c.arrows) {
      if (f.tgt != g.src) continue;
      auto fp = parseTuple(f.name);
      auto gp = parseTuple(g.name);
      std::vector<std::string> comps;
      for (std::size_t i = 0; i < nodeNames.size(); ++i)
        comps.push_back(d.nodes.at(nodeNames[i]).cat().compose(fp[i], gp[i]));
      c.comp[{f.name, g.name}] = tupleLabel(comps);
    }
  out.apex = Obj::cat(std::move(c));
  for (std::size_t i = 0; i < nodeNames.size(); ++i) {
    std::map<std::string, std::string> obj, arr;
    for (const auto& el : out.apex.cat().objects) obj[el] = parseTuple(el)[i];
    for (const auto& a : out.apex.cat().arrows) arr[a.name] = parseTuple(a.name)[i];
    out.projections.emplace(nodeNames[i],
                            Mor::functor(out.apex, d.nodes.at(nodeNames[i]), std::move(obj), std::move(arr)));
  }
  out.diagram = std::make_shared<const Diagram>(d);
  return out;
}

Mor Limit::mediator(const std::map<std::string, Mor>& cone) const {
  const Diagram& d = *diagram;
  for (const auto& [n, x] : d.nodes)
    if (!cone.count(n)) throw Error(ErrorKind::MediatorFailure, "cone missing leg at " + n);
  const Obj& w = cone.begin()->second.src();
  for (const auto& [n, leg] : cone) {
    if (leg.src() != w) throw Error(ErrorKind::MediatorFailure, "cone legs disagree on source");
    if (leg.tgt() != d.nodes.at(n))
      throw Error(ErrorKind::MediatorFailure, "cone leg has wrong target at " + n);
  }
  for (const auto& e : d.edges)
    if (compose(cone.at(e.src), e.map) != cone.at(e.tgt))
      throw Error(ErrorKind::MediatorFailure, "cone incompatible across edge " + e.name);

  std::vector<std::string> nodeNames;
  for (const auto& [n, x] : d.nodes) nodeNames.push_back(n);
  std::set<std::string> apexObjs(apex.objectElems().begin(), apex.objectElems().end());
  std::map<std::string, std::string> obj;
  for (const auto& el : w.objectElems()) {
    std::vector<std::string> parts;
    for (const auto& n : nodeNames) parts.push_back(cone.at(n)(el));
    const std::string t = tupleLabel(parts);
    if (!apexObjs.count(t))
      throw Error(ErrorKind::MediatorFailure, "cone value outside limit at " + el);
    obj[el] = t;
  }
  if (apex.instance() == Instance::FinSet) {
    Mor m = Mor::fn(w, apex, std::move(obj));
    for (const auto& [n, leg] : cone)
      if (compose(m, projections.at(n)) != leg)
        throw Error(ErrorKind::MediatorFailure, "mediator does not factor leg at " + n);
    return m;
  }
  std::map<std::string, std::string> arr;
  for (const auto& a : w.cat().arrows) {
    std::vector<std::string> parts;
    for (const auto& n : nodeNames) parts.push_back(cone.at(n).onArrow(a.name));
    arr[a.name] = tupleLabel(parts);
  }
  Mor m = Mor::functor(w, apex, std::move(obj), std::move(arr));
  for (const auto& [n, leg] : cone)
    if (compose(m, projections.at(n)) != leg)
      throw Error(ErrorKind::MediatorFailure, "mediator does not factor leg at " + n);
  return m;
}

// ---------------------------------------------------------------------------
// Pushouts and equalizers
// ---------------------------------------------------------------------------

Pushout pushout(const Mor& left, const Mor& right) {
  if (left.src() != right.src()) throw Error(ErrorKind::InvalidInput, "span legs must share source");
  Diagram d = Diagram::span(left.src(), left, right);
  Pushout po;
  po.colim = finiteColimit(d);
  po.fromLeft = po.colim.injections.at("L");
  po.fromRight = po.colim.injections.at("R");
  return po;
}

Mor Pushout::mediator(const Mor& legLeft, const Mor& legRight) const {
  const Diagram& d = *colim.diagram;
  std::map<std::string, Mor> cocone;
  cocone.emplace("L", legLeft);
  cocone.emplace("R", legRight);
  cocone.emplace("A", compose(d.edges[0].map, legLeft));
  return colim.mediator(cocone);
}

Equalizer equalizer(const Mor& f, const Mor& g) {
  if (f.src() != g.src() || f.tgt() != g.tgt())
    throw Error(ErrorKind::InvalidInput, "equalizer needs a parallel pair");
  const Obj& x = f.src();
  Equalizer out;
  if (x.instance() == Instance::FinSet) {
    std::vector<std::string> elems;
    for (const auto& e : x.elems())
      if (f(e) == g(e)) elems.push_back(e);
    out.sub = Obj::set(elems);
    std::map<std::string, std::string> t;
    for (const auto& e : out.sub.elems()) t[e] = e;
    out.include = Mor::fn(out.sub, x, std::move(t));
    return out;
  }
  CatData c;
  for (const auto& o : x.cat().objects)
    if (f(o) == g(o)) c.objects.push_back(o);
  std::set<std::string> objSet(c.objects.begin(), c.objects.end());
  for (const auto& a : x.cat().arrows)
    if (objSet.count(a.src) && objSet.count(a.tgt) && f.onArrow(a.name) == g.onArrow(a.name))
      c.arrows.push_back(a);
  std::set<std::string> arrSet;
  for (const auto& a : c.arrows) arrSet.insert(a.name);
  for (const auto& o : c.objects) c.identity[o] = x.cat().identity.at(o);
  for (const auto& a : c.arrows)
    for (const auto& b : c.arrows) {
      if (a.tgt != b.src) continue;
      const std::string h = x.cat().compose(a.name, b.name);
      if (!arrSet.count(h))
        throw Error(ErrorKind::Internal, "equalizer subcategory not closed under composition");
      c.comp[{a.name, b.name}] = h;
    }
  out.sub = Obj::cat(std::move(c));
  std::map<std::string, std::string> obj, arr;
  for (const auto& o : out.sub.cat().objects) obj[o] = o;
  for (const auto& a : out.sub.cat().arrows) arr[a.name] = a.name;
  out.include = Mor::functor(out.sub, x, std::move(obj), std::move(arr));
  return out;
}

GivenPushout GivenPushout::check(const Mor& left, const Mor& right, const Obj& apex,
                                 const Mor& inLeft, const Mor& inRight) {
  if (compose(left, inLeft) != compose(right, inRight))
    throw Error(ErrorKind::InvalidInput, "claimed pushout square does not commute");
  GivenPushout gp;
  gp.apex = apex;
  gp.inLeft = inLeft;
  gp.inRight = inRight;
  gp.canonical = pushout(left, right);
  Mor cmp = gp.canonical.mediator(inLeft, inRight);
  if (!isIso(cmp))
    throw Error(ErrorKind::InvalidInput, "claimed pushout is not isomorphic to the canonical one");
  gp.comparisonInv = inverse(cmp);
  return gp;
}

Mor GivenPushout::mediator(const Mor& legLeft, const Mor& legRight) const {
  return compose(comparisonInv, canonical.mediator(legLeft, legRight));
}

}  // namespace gct
