#include "gct/cosimplicial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace gct {

// ---------------------------------------------------------------------------
// Cosimplicial
// ---------------------------------------------------------------------------

const Obj& Cosimplicial::level(int n) const {
  if (n < 0 || n > trunc) throw Error(ErrorKind::Internal, "level out of range");
  return levels[static_cast<std::size_t>(n)];
}

const Mor& Cosimplicial::d(int n, int i) const {
  if (n < 0 || n >= trunc || i < 0 || i > n + 1)
    throw Error(ErrorKind::Internal, "coface out of range");
  return cofaces[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const Mor& Cosimplicial::s(int n, int i) const {
  if (n < 0 || n >= trunc || i < 0 || i > n)
    throw Error(ErrorKind::Internal, "codegeneracy out of range");
  return codegens[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

namespace {
std::string firstMismatch(const Mor& a, const Mor& b) {
  for (const auto& [k, v] : a.objMap()) {
    const auto& w = b.objMap().at(k);
    if (v != w) return "at element " + k + ": " + v + " vs " + w;
  }
  if (a.src().instance() == Instance::FinCat)
    for (const auto& [k, v] : a.arrMap()) {
      const auto& w = b.arrMap().at(k);
      if (v != w) return "at arrow " + k + ": " + v + " vs " + w;
    }
  return "";
}
}  // namespace

void Cosimplicial::validate() const {
  if (static_cast<int>(levels.size()) != trunc + 1)
    throw Error(ErrorKind::InvalidInput, "wrong number of levels");
  for (int n = 0; n < trunc; ++n) {
    if (static_cast<int>(cofaces[n].size()) != n + 2 ||
        static_cast<int>(codegens[n].size()) != n + 1)
      throw Error(ErrorKind::InvalidInput, "wrong number of structure maps at level " +
                                               std::to_string(n));
    for (int i = 0; i <= n + 1; ++i)
      if (d(n, i).src() != level(n) || d(n, i).tgt() != level(n + 1))
        throw Error(ErrorKind::InvalidInput, "coface endpoints wrong");
    for (int i = 0; i <= n; ++i)
      if (s(n, i).src() != level(n + 1) || s(n, i).tgt() != level(n))
        throw Error(ErrorKind::InvalidInput, "codegeneracy endpoints wrong");
  }
  // d^j d^i = d^i d^{j-1} for i < j
  for (int n = 0; n + 2 <= trunc; ++n)
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i + 1; j <= n + 2; ++j)
        if (compose(d(n, i), d(n + 1, j)) != compose(d(n, j - 1), d(n + 1, i)))
          throw Error(ErrorKind::InvalidInput,
                      "cosimplicial identity d" + std::to_string(j) + " d" + std::to_string(i) +
                          " fails at level " + std::to_string(n));
  // s^j d^i
  for (int n = 0; n < trunc; ++n)
    for (int i = 0; i <= n + 1; ++i)
      for (int j = 0; j <= n; ++j) {
        Mor lhs = compose(d(n, i), s(n, j));
        if (i == j || i == j + 1) {
          if (lhs != Mor::identity(level(n)))
            throw Error(ErrorKind::InvalidInput, "s d identity fails at level " +
                                                     std::to_string(n) + " (i=" +
                                                     std::to_string(i) + ")");
        } else if (i < j) {
          if (n >= 1 && lhs != compose(s(n - 1, j - 1), d(n - 1, i)))
            throw Error(ErrorKind::InvalidInput, "s d braid fails (i<j) at level " +
                                                     std::to_string(n));
        } else {  // i > j + 1
          if (n >= 1 && lhs != compose(s(n - 1, j), d(n - 1, i - 1)))
            throw Error(ErrorKind::InvalidInput, "s d braid fails (i>j+1) at level " +
                                                     std::to_string(n));
        }
      }
  // s^j s^i = s^i s^{j+1} for i <= j
  for (int n = 0; n + 2 <= trunc; ++n)
    for (int i = 0; i <= n + 1; ++i)
      for (int j = i; j <= n; ++j)
        if (compose(s(n + 1, i), s(n, j)) != compose(s(n + 1, j + 1), s(n, i)))
          throw Error(ErrorKind::InvalidInput, "s s identity fails at level " + std::to_string(n));
}

Cosimplicial Cosimplicial::truncate(int n) const {
  if (n > trunc) throw Error(ErrorKind::InvalidInput, "cannot truncate upward");
  Cosimplicial out;
  out.inst = inst;
  out.trunc = n;
  out.levels.assign(levels.begin(), levels.begin() + n + 1);
  out.cofaces.assign(cofaces.begin(), cofaces.begin() + n);
  out.codegens.assign(codegens.begin(), codegens.begin() + n);
  return out;
}

bool Cosimplicial::operator==(const Cosimplicial& o) const {
  if (inst != o.inst || trunc != o.trunc || levels != o.levels) return false;
  return cofaces == o.cofaces && codegens == o.codegens;
}

// ---------------------------------------------------------------------------
// CosimplicialMap
// ---------------------------------------------------------------------------

CosimplicialMap CosimplicialMap::makeUnchecked(const Cosimplicial& src, const Cosimplicial& tgt,
                                               std::vector<Mor> maps) {
  CosimplicialMap f;
  f.src = src;
  f.tgt = tgt;
  f.levelMaps = std::move(maps);
  return f;
}

Report CosimplicialMap::validateReport() const {
  Report r;
  r.title = "cosimplicial map";
  if (src.trunc != tgt.trunc || static_cast<int>(levelMaps.size()) != src.trunc + 1) {
    r.fail("shape", "level count mismatch");
    return r;
  }
  for (int n = 0; n <= src.trunc; ++n)
    if (levelMaps[n].src() != src.level(n) || levelMaps[n].tgt() != tgt.level(n)) {
      r.fail("shape", "level map endpoints wrong at " + std::to_string(n));
      return r;
    }
  for (int n = 0; n < src.trunc; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      Mor a = compose(src.d(n, i), levelMaps[n + 1]);
      Mor b = compose(levelMaps[n], tgt.d(n, i));
      r.check("commutes with d^" + std::to_string(i) + " at level " + std::to_string(n), a == b,
              a == b ? "" : firstMismatch(a, b));
    }
    for (int i = 0; i <= n; ++i) {
      Mor a = compose(src.s(n, i), levelMaps[n]);
      Mor b = compose(levelMaps[n + 1], tgt.s(n, i));
      r.check("commutes with s^" + std::to_string(i) + " at level " + std::to_string(n), a == b,
              a == b ? "" : firstMismatch(a, b));
    }
  }
  return r;
}

CosimplicialMap CosimplicialMap::make(const Cosimplicial& src, const Cosimplicial& tgt,
                                      std::vector<Mor> maps) {
  CosimplicialMap f = makeUnchecked(src, tgt, std::move(maps));
  Report r = f.validateReport();
  if (!r.allPass()) {
    for (const auto& c : r.checks)
      if (c.status == "fail")
        throw Error(ErrorKind::InvalidInput, "not a cosimplicial map: " + c.name +
                                                 (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
  return f;
}

CosimplicialMap CosimplicialMap::id(const Cosimplicial& x) {
  std::vector<Mor> maps;
  for (int n = 0; n <= x.trunc; ++n) maps.push_back(Mor::identity(x.level(n)));
  return makeUnchecked(x, x, std::move(maps));
}

const Mor& CosimplicialMap::at(int n) const {
  if (n < 0 || n > src.trunc) throw Error(ErrorKind::Internal, "level map out of range");
  return levelMaps[static_cast<std::size_t>(n)];
}

bool CosimplicialMap::operator==(const CosimplicialMap& o) const {
  return levelMaps == o.levelMaps;
}

CosimplicialMap composeMaps(const CosimplicialMap& f, const CosimplicialMap& g) {
  std::vector<Mor> maps;
  for (int n = 0; n <= f.src.trunc; ++n) maps.push_back(compose(f.at(n), g.at(n)));
  return CosimplicialMap::makeUnchecked(f.src, g.tgt, std::move(maps));
}

bool isIsoMap(const CosimplicialMap& f) {
  for (const auto& m : f.levelMaps)
    if (!isIso(m)) return false;
  return true;
}

CosimplicialMap inverseMap(const CosimplicialMap& f) {
  std::vector<Mor> maps;
  for (const auto& m : f.levelMaps) maps.push_back(inverse(m));
  return CosimplicialMap::makeUnchecked(f.tgt, f.src, std::move(maps));
}

std::vector<CosimplicialMap> enumerateCosimplicialMaps(const Cosimplicial& x,
                                                       const Cosimplicial& y) {
  if (x.trunc != y.trunc) throw Error(ErrorKind::InvalidInput, "truncation mismatch");
  std::vector<CosimplicialMap> out;
  std::vector<Mor> chosen;
  std::function<void(int)> rec = [&](int n) {
    if (n > x.trunc) {
      out.push_back(CosimplicialMap::makeUnchecked(x, y, chosen));
      return;
    }
    for (const auto& cand : enumerateMorphisms(x.level(n), y.level(n))) {
      bool ok = true;
      if (n >= 1) {
        for (int i = 0; ok && i <= n; ++i)
          ok = compose(x.d(n - 1, i), cand) == compose(chosen[n - 1], y.d(n - 1, i));
        for (int i = 0; ok && i < n; ++i)
          ok = compose(x.s(n - 1, i), chosen[n - 1]) == compose(cand, y.s(n - 1, i));
      }
      if (!ok) continue;
      chosen.push_back(cand);
      rec(n + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------------------
// Degenerate cosimplicial objects
// ---------------------------------------------------------------------------

Cosimplicial constantCosimplicial(const Obj& a, int n) {
  Cosimplicial x;
  x.inst = a.instance();
  x.trunc = n;
  for (int k = 0; k <= n; ++k) x.levels.push_back(a);
  for (int k = 0; k < n; ++k) {
    x.cofaces.push_back(std::vector<Mor>(k + 2, Mor::identity(a)));
    x.codegens.push_back(std::vector<Mor>(k + 1, Mor::identity(a)));
  }
  x.validate();
  return x;
}

Cosimplicial cstUnit(Instance inst, int n) { return constantCosimplicial(Obj::unit(inst), n); }

Cosimplicial coskeleton(const Obj& a, int n) {
  Cosimplicial x;
  x.inst = a.instance();
  x.trunc = n;
  std::vector<Coproduct> cps;
  for (int k = 0; k <= n; ++k) {
    cps.push_back(coproduct(std::vector<Obj>(k + 1, a)));
    x.levels.push_back(cps.back().apex);
  }
  auto retagged = [&](int kFrom, int kTo, const std::function<std::size_t(std::size_t)>& f) {
    auto onObj = [&](const std::string& e) {
      auto [j, rest] = parseTag(e);
      return tagLabel(f(j), rest);
    };
    return buildMor(x.levels[kFrom], x.levels[kTo], onObj, onObj);
  };
  for (int k = 0; k < n; ++k) {
    std::vector<Mor> ds, ss;
    for (int i = 0; i <= k + 1; ++i)
      ds.push_back(retagged(k, k + 1, [i](std::size_t j) {
        return j < static_cast<std::size_t>(i) ? j : j + 1;
      }));
    for (int i = 0; i <= k; ++i)
      ss.push_back(retagged(k + 1, k, [i](std::size_t j) {
        return j <= static_cast<std::size_t>(i) ? j : j - 1;
      }));
    x.cofaces.push_back(std::move(ds));
    x.codegens.push_back(std::move(ss));
  }
  x.validate();
  return x;
}

Obj h0(const Cosimplicial& x) { return equalizer(x.d(0, 0), x.d(0, 1)).sub; }
Mor h0Include(const Cosimplicial& x) { return equalizer(x.d(0, 0), x.d(0, 1)).include; }

// ---------------------------------------------------------------------------
// Box products
// ---------------------------------------------------------------------------

namespace {
std::string tNode(int p) { return "t" + std::to_string(p); }
std::string bNode(int p) { return "b" + std::to_string(p); }
}  // namespace

Obj BoxProduct::summand(int n, int p) const { return tensor(x.level(p), y.level(n - p)); }

Mor BoxProduct::inj(int n, int p) const {
  if (n == 0) return Mor::identity(prod.level(0));
  return colimits[n].injections.at(tNode(p));
}

Mor BoxProduct::solveLevel(int n, const std::vector<Mor>& legs) const {
  if (n == 0) return legs.at(0);
  const Colimit& c = colimits[n];
  std::map<std::string, Mor> cocone;
  for (int p = 0; p <= n; ++p) cocone.emplace(tNode(p), legs.at(p));
  for (const auto& e : c.diagram->edges)
    if (e.name[0] == 'u') {
      int p = std::stoi(e.name.substr(1));
      cocone.emplace(bNode(p), compose(e.map, legs.at(p)));
    }
  return c.mediator(cocone);
}

BoxProduct box(const Cosimplicial& x, const Cosimplicial& y, int n) {
  if (x.inst != y.inst) throw Error(ErrorKind::InstanceMismatch, "box of different instances");
  if (x.trunc < n || y.trunc < n)
    throw Error(ErrorKind::InvalidInput, "inputs not truncated deep enough for box");
  BoxProduct bx;
  bx.x = x;
  bx.y = y;
  bx.prod.inst = x.inst;
  bx.prod.trunc = n;
  bx.colimits.resize(n + 1);
  bx.prod.levels.push_back(tensor(x.level(0), y.level(0)));
  for (int k = 1; k <= n; ++k) {
    Diagram dg;
    for (int p = 0; p <= k; ++p) dg.addNode(tNode(p), tensor(x.level(p), y.level(k - p)));
    for (int p = 0; p < k; ++p) dg.addNode(bNode(p), tensor(x.level(p), y.level(k - 1 - p)));
    for (int p = 0; p < k; ++p) {
      dg.addEdge("u" + std::to_string(p), bNode(p), tNode(p),
                 tensorMor(Mor::identity(x.level(p)), y.d(k - 1 - p, 0)));
      dg.addEdge("v" + std::to_string(p), bNode(p), tNode(p + 1),
                 tensorMor(x.d(p, p + 1), Mor::identity(y.level(k - 1 - p))));
    }
    bx.colimits[k] = finiteColimit(dg);
    bx.prod.levels.push_back(bx.colimits[k].apex);
  }
  // cofaces D^k and codegeneracies S^k via the r<k / r>=k case split
  for (int lev = 0; lev < n; ++lev) {
    std::vector<Mor> ds;
    for (int k = 0; k <= lev + 1; ++k) {
      std::vector<Mor> legs;
      for (int r = 0; r <= lev; ++r) {
        int s = lev - r;
        if (r < k)
          legs.push_back(compose(tensorMor(Mor::identity(x.level(r)), y.d(s, k - r)),
                                 bx.inj(lev + 1, r)));
        else
          legs.push_back(compose(tensorMor(x.d(r, k), Mor::identity(y.level(s))),
                                 bx.inj(lev + 1, r + 1)));
      }
      ds.push_back(bx.solveLevel(lev, legs));
    }
    bx.prod.cofaces.push_back(std::move(ds));

    std::vector<Mor> ss;
    for (int k = 0; k <= lev; ++k) {
      std::vector<Mor> legs;
      for (int p = 0; p <= lev + 1; ++p) {
        int q = lev + 1 - p;
        if (k >= p)
          legs.push_back(
              compose(tensorMor(Mor::identity(x.level(p)), y.s(q - 1, k - p)), bx.inj(lev, p)));
        else
          legs.push_back(
              compose(tensorMor(x.s(p - 1, k), Mor::identity(y.level(q))), bx.inj(lev, p - 1)));
      }
      ss.push_back(bx.solveLevel(lev + 1, legs));
    }
    bx.prod.codegens.push_back(std::move(ss));
  }
  bx.prod.validate();
  return bx;
}

Box1Product box1(const Cosimplicial& x, const Cosimplicial& y) {
  if (x.inst != y.inst) throw Error(ErrorKind::InstanceMismatch, "box1 of different instances");
  if (x.trunc < 1 || y.trunc < 1)
    throw Error(ErrorKind::InvalidInput, "box1 needs 1-truncated inputs");
  Box1Product b;
  b.x = x;
  b.y = y;
  Obj lvl0 = tensor(x.level(0), y.level(0));
  Mor left = tensorMor(Mor::identity(x.level(0)), y.d(0, 0));   // X0 (x) Y0 -> X0 (x) Y1
  Mor right = tensorMor(x.d(0, 1), Mor::identity(y.level(0)));  // X0 (x) Y0 -> X1 (x) Y0
  b.po = pushout(left, right);
  Mor d0 = compose(tensorMor(x.d(0, 0), Mor::identity(y.level(0))), b.po.fromRight);
  Mor d1 = compose(tensorMor(Mor::identity(x.level(0)), y.d(0, 1)), b.po.fromLeft);
  Mor s0 = b.po.mediator(tensorMor(Mor::identity(x.level(0)), y.s(0, 0)),
                         tensorMor(x.s(0, 0), Mor::identity(y.level(0))));
  b.prod.inst = x.inst;
  b.prod.trunc = 1;
  b.prod.levels = {lvl0, b.po.colim.apex};
  b.prod.cofaces = {{d0, d1}};
  b.prod.codegens = {{s0}};
  b.prod.validate();
  return b;
}

Mor Box1Product::solveLevel1(const Mor& legLeft, const Mor& legRight) const {
  return po.mediator(legLeft, legRight);
}

CosimplicialMap boxMap(const BoxProduct& src, const BoxProduct& tgt, const CosimplicialMap& f,
                       const CosimplicialMap& g) {
  std::vector<Mor> maps;
  for (int n = 0; n <= src.prod.trunc; ++n) {
    std::vector<Mor> legs;
    for (int p = 0; p <= n; ++p)
      legs.push_back(compose(tensorMor(f.at(p), g.at(n - p)), tgt.inj(n, p)));
    maps.push_back(src.solveLevel(n, legs));
  }
  return CosimplicialMap::make(src.prod, tgt.prod, std::move(maps));
}

Cosimplicial tensorLevelwise(const Cosimplicial& x, const Cosimplicial& y) {
  if (x.trunc != y.trunc) throw Error(ErrorKind::InvalidInput, "truncation mismatch");
  Cosimplicial out;
  out.inst = x.inst;
  out.trunc = x.trunc;
  for (int n = 0; n <= x.trunc; ++n) out.levels.push_back(tensor(x.level(n), y.level(n)));
  for (int n = 0; n < x.trunc; ++n) {
    std::vector<Mor> ds, ss;
    for (int i = 0; i <= n + 1; ++i) ds.push_back(tensorMor(x.d(n, i), y.d(n, i)));
    for (int i = 0; i <= n; ++i) ss.push_back(tensorMor(x.s(n, i), y.s(n, i)));
    out.cofaces.push_back(std::move(ds));
    out.codegens.push_back(std::move(ss));
  }
  out.validate();
  return out;
}

namespace {
// iterated top coface X^p -> X^n (d^{p+1}, then d^{p+2}, ...)
Mor topChain(const Cosimplicial& x, int p, int n) {
  Mor m = Mor::identity(x.level(p));
  for (int k = p; k < n; ++k) m = compose(m, x.d(k, k + 1));
  return m;
}
// iterated d^0: X^q -> X^n
Mor zeroChain(const Cosimplicial& x, int q, int n) {
  Mor m = Mor::identity(x.level(q));
  for (int k = q; k < n; ++k) m = compose(m, x.d(k, 0));
  return m;
}
}  // namespace

CosimplicialMap boxComparison(const BoxProduct& bx) {
  Cosimplicial tw = tensorLevelwise(bx.x.truncate(bx.prod.trunc), bx.y.truncate(bx.prod.trunc));
  std::vector<Mor> maps;
  for (int n = 0; n <= bx.prod.trunc; ++n) {
    std::vector<Mor> legs;
    for (int p = 0; p <= n; ++p)
      legs.push_back(tensorMor(topChain(bx.x, p, n), zeroChain(bx.y, n - p, n)));
    maps.push_back(bx.solveLevel(n, legs));
  }
  return CosimplicialMap::make(bx.prod, tw, std::move(maps));
}

CosimplicialMap boxUnitLeft(const BoxProduct& bx) {
  Cosimplicial tgt = bx.y.truncate(bx.prod.trunc);
  std::vector<Mor> maps;
  for (int n = 0; n <= bx.prod.trunc; ++n) {
    std::vector<Mor> legs;
    for (int p = 0; p <= n; ++p)
      legs.push_back(compose(unitorL(bx.y.level(n - p)), zeroChain(bx.y, n - p, n)));
    maps.push_back(bx.solveLevel(n, legs));
  }
  CosimplicialMap f = CosimplicialMap::make(bx.prod, tgt, std::move(maps));
  if (!isIsoMap(f)) throw Error(ErrorKind::Internal, "left unit comparison is not iso");
  return f;
}

CosimplicialMap boxUnitRight(const BoxProduct& bx) {
  Cosimplicial tgt = bx.x.truncate(bx.prod.trunc);
  std::vector<Mor> maps;
  for (int n = 0; n <= bx.prod.trunc; ++n) {
    std::vector<Mor> legs;
    for (int p = 0; p <= n; ++p)
      legs.push_back(compose(unitorR(bx.x.level(p)), topChain(bx.x, p, n)));
    maps.push_back(bx.solveLevel(n, legs));
  }
  CosimplicialMap f = CosimplicialMap::make(bx.prod, tgt, std::move(maps));
  if (!isIsoMap(f)) throw Error(ErrorKind::Internal, "right unit comparison is not iso");
  return f;
}

namespace {
// Solve a map (X box Y)^i (x) Z -> W from legs on (X^p (x) Y^{i-p}) (x) Z,
// using that the tensor preserves colimits.
Mor solveTensoredRight(const BoxProduct& bx, int i, const Obj& z, const std::vector<Mor>& legs) {
  if (i == 0) return legs.at(0);
  const Colimit& c = bx.colimits[i];
  Diagram dg;
  for (const auto& [name, obj] : c.diagram->nodes) dg.addNode(name, tensor(obj, z));
  for (const auto& e : c.diagram->edges)
    dg.addEdge(e.name, e.src, e.tgt, tensorMor(e.map, Mor::identity(z)));
  Colimit tc = finiteColimit(dg);
  std::map<std::string, Mor> cmpCone;
  for (const auto& [name, injm] : c.injections)
    cmpCone.emplace(name, tensorMor(injm, Mor::identity(z)));
  Mor cmp = tc.mediator(cmpCone);
  if (!isIso(cmp)) throw Error(ErrorKind::Internal, "tensor did not preserve the box colimit");
  std::map<std::string, Mor> cocone;
  for (int p = 0; p <= i; ++p) cocone.emplace(tNode(p), legs.at(p));
  for (const auto& e : dg.edges)
    if (e.name[0] == 'u') {
      int p = std::stoi(e.name.substr(1));
      cocone.emplace(bNode(p), compose(e.map, legs.at(p)));
    }
  return compose(inverse(cmp), tc.mediator(cocone));
}
}  // namespace

CosimplicialMap boxAssociator(const BoxProduct& xy, const BoxProduct& xy_z, const BoxProduct& yz,
                              const BoxProduct& x_yz) {
  const Cosimplicial& x = xy.x;
  const Cosimplicial& y = xy.y;
  const Cosimplicial& z = xy_z.y;
  int n = xy_z.prod.trunc;
  std::vector<Mor> maps;
  for (int lev = 0; lev <= n; ++lev) {
    std::vector<Mor> outer;
    for (int i = 0; i <= lev; ++i) {
      int j = lev - i;
      std::vector<Mor> inner;
      for (int p = 0; p <= i; ++p) {
        int q = i - p;
        Mor leg = compose(
            associator(x.level(p), y.level(q), z.level(j)),
            compose(tensorMor(Mor::identity(x.level(p)), yz.inj(q + j, q)), x_yz.inj(lev, p)));
        inner.push_back(leg);
      }
      outer.push_back(solveTensoredRight(xy, i, z.level(j), inner));
    }
    maps.push_back(xy_z.solveLevel(lev, outer));
  }
  CosimplicialMap f = CosimplicialMap::make(xy_z.prod, x_yz.prod, std::move(maps));
  if (!isIsoMap(f)) throw Error(ErrorKind::Internal, "box associator is not iso");
  return f;
}

// ---------------------------------------------------------------------------
// Smash and cotensor
// ---------------------------------------------------------------------------

Cosimplicial smash(const Obj& a, const Cosimplicial& x) {
  if (a.instance() != x.inst) throw Error(ErrorKind::InstanceMismatch, "smash instance mismatch");
  Cosimplicial out;
  out.inst = x.inst;
  out.trunc = x.trunc;
  for (int k = 0; k <= x.trunc; ++k) out.levels.push_back(tensor(a, x.level(k)));
  for (int k = 0; k < x.trunc; ++k) {
    std::vector<Mor> ds, ss;
    for (int i = 0; i <= k + 1; ++i) ds.push_back(tensorMor(Mor::identity(a), x.d(k, i)));
    for (int i = 0; i <= k; ++i) ss.push_back(tensorMor(Mor::identity(a), x.s(k, i)));
    out.cofaces.push_back(std::move(ds));
    out.codegens.push_back(std::move(ss));
  }
  out.validate();
  return out;
}

Cosimplicial cotensor(const Cosimplicial& x, const Obj& a) {
  if (a.instance() != x.inst)
    throw Error(ErrorKind::InstanceMismatch, "cotensor instance mismatch");
  Cosimplicial out;
  out.inst = x.inst;
  out.trunc = x.trunc;
  Mor ida = Mor::identity(a);
  for (int k = 0; k <= x.trunc; ++k) out.levels.push_back(internalHom(a, x.level(k)));
  for (int k = 0; k < x.trunc; ++k) {
    std::vector<Mor> ds, ss;
    for (int i = 0; i <= k + 1; ++i) ds.push_back(homMap(ida, x.d(k, i)));
    for (int i = 0; i <= k; ++i) ss.push_back(homMap(ida, x.s(k, i)));
    out.cofaces.push_back(std::move(ds));
    out.codegens.push_back(std::move(ss));
  }
  out.validate();
  return out;
}

CosimplicialMap smashInterchange(const Obj& a, const Obj& b, const BoxProduct& smashed,
                                 const BoxProduct& plain) {
  Obj ab = tensor(a, b);
  Cosimplicial tgt = smash(ab, plain.prod);
  int n = smashed.prod.trunc;
  std::vector<Mor> maps;
  for (int lev = 0; lev <= n; ++lev) {
    std::vector<Mor> legs;
    for (int p = 0; p <= lev; ++p) {
      // (A (x) X^p) (x) (B (x) Y^q)  ->  (A (x) B) (x) (X box Y)^lev
      Obj src = tensor(tensor(a, plain.x.level(p)), tensor(b, plain.y.level(lev - p)));
      const Mor injp = plain.inj(lev, p);
      auto shuffle = [&](const std::string& e) {
        auto [axl, byl] = parsePair(e);
        auto [al, xl] = parsePair(axl);
        auto [bl, yl] = parsePair(byl);
        return pairLabel(pairLabel(al, bl), injp(pairLabel(xl, yl)));
      };
      auto shuffleArr = [&](const std::string& e) {
        auto [axl, byl] = parsePair(e);
        auto [al, xl] = parsePair(axl);
        auto [bl, yl] = parsePair(byl);
        return pairLabel(pairLabel(al, bl), injp.onArrow(pairLabel(xl, yl)));
      };
      legs.push_back(buildMor(src, tgt.level(lev), shuffle, shuffleArr));
    }
    maps.push_back(smashed.solveLevel(lev, legs));
  }
  CosimplicialMap f = CosimplicialMap::make(smashed.prod, tgt, std::move(maps));
  if (!isIsoMap(f)) throw Error(ErrorKind::Internal, "smash interchange is not iso");
  return f;
}

// ---------------------------------------------------------------------------
// Ends
// ---------------------------------------------------------------------------

End uhomFull(const Cosimplicial& x, const Cosimplicial& y, int n) {
  if (x.trunc < n || y.trunc < n)
    throw Error(ErrorKind::InvalidInput, "truncation too shallow for requested Hom level");
  Diagram dg;
  for (int k = 0; k <= n; ++k)
    dg.addNode("h" + std::to_string(k), internalHom(x.level(k), y.level(k)));
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= k + 1; ++i) {
      std::string c = "cd" + std::to_string(k) + "i" + std::to_string(i);
      dg.addNode(c, internalHom(x.level(k), y.level(k + 1)));
      dg.addEdge(c + "post", "h" + std::to_string(k), c,
                 homMap(Mor::identity(x.level(k)), y.d(k, i)));
      dg.addEdge(c + "pre", "h" + std::to_string(k + 1), c,
                 homMap(x.d(k, i), Mor::identity(y.level(k + 1))));
    }
    for (int i = 0; i <= k; ++i) {
      std::string c = "cs" + std::to_string(k) + "i" + std::to_string(i);
      dg.addNode(c, internalHom(x.level(k + 1), y.level(k)));
      dg.addEdge(c + "post", "h" + std::to_string(k + 1), c,
                 homMap(Mor::identity(x.level(k + 1)), y.s(k, i)));
      dg.addEdge(c + "pre", "h" + std::to_string(k), c,
                 homMap(x.s(k, i), Mor::identity(y.level(k))));
    }
  }
  End e;
  e.limit = finiteLimit(dg);
  for (const auto& [name, obj] : dg.nodes) e.nodeNames.push_back(name);
  e.x = x.truncate(n);
  e.y = y.truncate(n);
  e.n = n;
  return e;
}

CosimplicialMap End::decode(const std::string& element) const {
  auto parts = parseTuple(element);
  std::vector<Mor> maps(n + 1);
  for (std::size_t idx = 0; idx < nodeNames.size(); ++idx) {
    if (nodeNames[idx][0] != 'h') continue;
    int k = std::stoi(nodeNames[idx].substr(1));
    if (x.inst == Instance::FinSet)
      maps[k] = Mor::fn(x.level(k), y.level(k), parseMapLabel(parts[idx]));
    else {
      auto [onObj, onArr] = parseFunLabel(parts[idx]);
      maps[k] = Mor::functor(x.level(k), y.level(k), onObj, onArr);
    }
  }
  return CosimplicialMap::make(x, y, std::move(maps));
}

std::string End::encode(const CosimplicialMap& f) const {
  auto homLabel = [&](const Mor& m) {
    return m.src().instance() == Instance::FinSet ? mapLabel(m.objMap())
                                                  : funLabel(m.objMap(), m.arrMap());
  };
  std::vector<std::string> parts;
  for (const auto& name : nodeNames) {
    if (name[0] == 'h') {
      parts.push_back(homLabel(f.at(std::stoi(name.substr(1)))));
    } else if (name[0] == 'c' && name[1] == 'd') {
      auto rest = name.substr(2);
      auto ipos = rest.find('i');
      int k = std::stoi(rest.substr(0, ipos));
      int i = std::stoi(rest.substr(ipos + 1));
      parts.push_back(homLabel(compose(f.at(k), y.d(k, i))));
    } else {
      auto rest = name.substr(2);
      auto ipos = rest.find('i');
      int k = std::stoi(rest.substr(0, ipos));
      int i = std::stoi(rest.substr(ipos + 1));
      parts.push_back(homLabel(compose(f.at(k + 1), y.s(k, i))));
    }
  }
  std::string label = tupleLabel(parts);
  const auto& elems = limit.apex.objectElems();
  if (!std::binary_search(elems.begin(), elems.end(), label))
    throw Error(ErrorKind::Internal, "encoded map is not an element of the end");
  return label;
}

bool uhomStabilizes(const Cosimplicial& x, const Cosimplicial& y, int n) {
  if (x.trunc < n + 1 || y.trunc < n + 1)
    throw Error(ErrorKind::InvalidInput, "inputs too shallow for stabilization check");
  End en = uhomFull(x, y, n);
  End en1 = uhomFull(x, y, n + 1);
  std::set<std::string> image;
  for (const auto& e : en1.object().objectElems()) {
    CosimplicialMap f = en1.decode(e);
    CosimplicialMap g =
        CosimplicialMap::makeUnchecked(en.x, en.y, std::vector<Mor>(f.levelMaps.begin(),
                                                                    f.levelMaps.begin() + n + 1));
    image.insert(en.encode(g));
  }
  if (image.size() != en1.object().objectElems().size()) return false;  // not injective
  return image.size() == en.object().objectElems().size();
}

Obj uhom1(const Cosimplicial& x, const Cosimplicial& y) {
  if (x.trunc < 1 || y.trunc < 1) throw Error(ErrorKind::InvalidInput, "uhom1 needs N >= 1");
  Obj h11 = internalHom(x.level(1), y.level(1));
  Obj h00 = internalHom(x.level(0), y.level(0));
  Obj c1 = internalHom(x.level(0), y.level(1));
  Obj c3 = internalHom(x.level(1), y.level(0));
  Obj corner = tensor(tensor(c1, c1), c3);
  Mor fromTop = pairing(pairing(homMap(x.d(0, 1), Mor::identity(y.level(1))),
                                homMap(x.d(0, 0), Mor::identity(y.level(1)))),
                        homMap(Mor::identity(x.level(1)), y.s(0, 0)));
  Mor fromBot = pairing(pairing(homMap(Mor::identity(x.level(0)), y.d(0, 1)),
                                homMap(Mor::identity(x.level(0)), y.d(0, 0))),
                        homMap(x.s(0, 0), Mor::identity(y.level(0))));
  Diagram dg;
  dg.addNode("A", h11);
  dg.addNode("B", h00);
  dg.addNode("C", corner);
  dg.addEdge("a", "A", "C", fromTop);
  dg.addEdge("b", "B", "C", fromBot);
  return finiteLimit(dg).apex;
}

// ---------------------------------------------------------------------------
// Comonoids
// ---------------------------------------------------------------------------

Comonoid cstUnitComonoid(Instance inst, int n) {
  Comonoid c;
  c.carrier = cstUnit(inst, n);
  c.square = box(c.carrier, c.carrier, n);
  Obj i = Obj::unit(inst);
  std::vector<Mor> deltaMaps, counitMaps;
  for (int k = 0; k <= n; ++k) {
    deltaMaps.push_back(compose(unitorLInv(i), c.square.inj(k, 0)));
    counitMaps.push_back(Mor::identity(i));
  }
  c.delta = CosimplicialMap::make(c.carrier, c.square.prod, std::move(deltaMaps));
  c.counit = CosimplicialMap::make(c.carrier, cstUnit(inst, n), std::move(counitMaps));
  return c;
}

Comonoid coskUnitComonoid(Instance inst, int n) {
  Comonoid c;
  c.carrier = coskeleton(Obj::unit(inst), n);
  c.square = box(c.carrier, c.carrier, n);
  std::vector<Mor> deltaMaps, counitMaps;
  for (int k = 0; k <= n; ++k) {
    // vertex j -> class of (vertex j in level j, vertex 0 in level k-j) at
    // corner (j, k-j): the vertex diagonal
    auto diag = [&](const std::string& e) {
      auto [j, rest] = parseTag(e);
      Mor inj = c.square.inj(k, static_cast<int>(j));
      return inj(pairLabel(tagLabel(j, rest), tagLabel(0, rest)));
    };
    auto diagArr = [&](const std::string& e) {
      auto [j, rest] = parseTag(e);
      Mor inj = c.square.inj(k, static_cast<int>(j));
      return inj.onArrow(pairLabel(tagLabel(j, rest), tagLabel(0, rest)));
    };
    deltaMaps.push_back(buildMor(c.carrier.level(k), c.square.prod.level(k), diag, diagArr));
    auto fold = [&](const std::string& e) { return parseTag(e).second; };
    counitMaps.push_back(buildMor(c.carrier.level(k), Obj::unit(inst), fold, fold));
  }
  c.delta = CosimplicialMap::make(c.carrier, c.square.prod, std::move(deltaMaps));
  c.counit = CosimplicialMap::make(c.carrier, cstUnit(inst, n), std::move(counitMaps));
  Report r = checkComonoid(c);
  if (!r.allPass()) throw Error(ErrorKind::Internal, "coskeleton comonoid failed its laws");
  return c;
}

Report checkComonoid(const Comonoid& c) {
  Report r;
  r.title = "comonoid laws";
  int n = c.carrier.trunc;
  r.absorb([&] {
    Report rr = c.delta.validateReport();
    Report renamed;
    for (auto& ch : rr.checks) renamed.checks.push_back({"delta " + ch.name, ch.status, ch.detail});
    return renamed;
  }());
  r.absorb([&] {
    Report rr = c.counit.validateReport();
    Report renamed;
    for (auto& ch : rr.checks)
      renamed.checks.push_back({"counit " + ch.name, ch.status, ch.detail});
    return renamed;
  }());
  // coassociativity through the associator
  try {
    BoxProduct sq_c = box(c.square.prod, c.carrier, n);
    BoxProduct c_sq = box(c.carrier, c.square.prod, n);
    CosimplicialMap lhs = composeMaps(
        c.delta, boxMap(c.square, sq_c, c.delta, CosimplicialMap::id(c.carrier)));
    CosimplicialMap rhs = composeMaps(
        c.delta, boxMap(c.square, c_sq, CosimplicialMap::id(c.carrier), c.delta));
    CosimplicialMap alpha = boxAssociator(c.square, sq_c, c.square, c_sq);
    CosimplicialMap lhsMoved = composeMaps(lhs, alpha);
    for (int k = 0; k <= n; ++k) {
      bool ok = lhsMoved.at(k) == rhs.at(k);
      r.check("coassociativity at level " + std::to_string(k), ok,
              ok ? "" : firstMismatch(lhsMoved.at(k), rhs.at(k)));
    }
  } catch (const Error& err) {
    r.fail("coassociativity", err.what());
  }
  // counit triangles through the unit isomorphisms
  try {
    Cosimplicial cst = cstUnit(c.carrier.inst, n);
    BoxProduct cstC = box(cst, c.carrier, n);
    BoxProduct cCst = box(c.carrier, cst, n);
    CosimplicialMap leftTri = composeMaps(
        composeMaps(c.delta, boxMap(c.square, cstC, c.counit, CosimplicialMap::id(c.carrier))),
        boxUnitLeft(cstC));
    CosimplicialMap rightTri = composeMaps(
        composeMaps(c.delta, boxMap(c.square, cCst, CosimplicialMap::id(c.carrier), c.counit)),
        boxUnitRight(cCst));
    for (int k = 0; k <= n; ++k) {
      bool okL = leftTri.at(k) == Mor::identity(c.carrier.level(k));
      bool okR = rightTri.at(k) == Mor::identity(c.carrier.level(k));
      r.check("left counit triangle at level " + std::to_string(k), okL,
              okL ? "" : firstMismatch(leftTri.at(k), Mor::identity(c.carrier.level(k))));
      r.check("right counit triangle at level " + std::to_string(k), okR,
              okR ? "" : firstMismatch(rightTri.at(k), Mor::identity(c.carrier.level(k))));
    }
  } catch (const Error& err) {
    r.fail("counit triangles", err.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Structure map
// ---------------------------------------------------------------------------

Mor structureMap(const Comonoid& c, const Cosimplicial& x, const Cosimplicial& y, const End& homX,
                 const End& homY, const BoxProduct& bxy, const End& homXY) {
  if (x.inst != c.carrier.inst || y.inst != c.carrier.inst)
    throw Error(ErrorKind::InstanceMismatch, "structure map instance mismatch");
  Obj src = tensor(homX.object(), homY.object());
  const Obj& tgt = homXY.object();
  int n = c.carrier.trunc;

  auto onPair = [&](const std::string& e) {
    auto [pl, ql] = parsePair(e);
    CosimplicialMap phi = homX.decode(pl);
    CosimplicialMap psi = homY.decode(ql);
    CosimplicialMap theta = composeMaps(c.delta, boxMap(c.square, bxy, phi, psi));
    return homXY.encode(theta);
  };
  if (src.instance() == Instance::FinSet) return buildMor(src, tgt, onPair);

  // FinCat: arrows of the end categories are families of natural
  // transformations; the image arrow is (mu box nu) whiskered along delta.
  auto onArrPair = [&](const std::string& aname) {
    auto [aXname, aYname] = parsePair(aname);
    const auto& aX = homX.object().cat().arrow(aXname);
    const auto& aY = homY.object().cat().arrow(aYname);
    CosimplicialMap phiS = homX.decode(aX.src), phiT = homX.decode(aX.tgt);
    CosimplicialMap psiS = homY.decode(aY.src), psiT = homY.decode(aY.tgt);
    CosimplicialMap thetaS = composeMaps(c.delta, boxMap(c.square, bxy, phiS, psiS));
    CosimplicialMap thetaT = composeMaps(c.delta, boxMap(c.square, bxy, phiT, psiT));
    // per-node component tables of the two end arrows
    auto endArrowComponents = [](const End& e, const std::string& arrowName) {
      auto parts = parseTuple(arrowName);
      std::map<int, std::map<std::string, std::string>> comps;
      for (std::size_t idx = 0; idx < e.nodeNames.size(); ++idx) {
        if (e.nodeNames[idx][0] != 'h') continue;
        comps[std::stoi(e.nodeNames[idx].substr(1))] =
            parseNatLabel(parsePair(parts[idx]).second);
      }
      return comps;
    };
    auto muComps = endArrowComponents(homX, aXname);
    auto nuComps = endArrowComponents(homY, aYname);
    // build the image end arrow levelwise
    std::map<int, std::map<std::string, std::string>> outComps;
    for (int k = 0; k <= n; ++k) {
      std::map<std::string, std::string> comp;
      for (const auto& zObj : c.carrier.level(k).cat().objects) {
        const std::string w = c.delta.at(k)(zObj);  // class in (C box C)^k
        // find a diagonal-summand member of the class
        std::string value;
        bool found = false;
        if (k == 0) {
          auto [z1, z2] = parsePair(w);
          value = bxy.inj(0, 0).onArrow(
              pairLabel(muComps.at(0).at(z1), nuComps.at(0).at(z2)));
          found = true;
        } else {
          for (const auto& [node, el] : c.square.colimits[k].objectClasses.at(w)) {
            if (node[0] != 't') continue;
            int p = std::stoi(node.substr(1));
            auto [z1, z2] = parsePair(el);
            value = bxy.inj(k, p).onArrow(
                pairLabel(muComps.at(p).at(z1), nuComps.at(k - p).at(z2)));
            found = true;
            break;
          }
        }
        if (!found) throw Error(ErrorKind::Internal, "no diagonal member in box class");
        comp[zObj] = value;
      }
      outComps[k] = std::move(comp);
    }
    // assemble the arrow label of the target end
    auto homLabel = [&](const Mor& m) { return funLabel(m.objMap(), m.arrMap()); };
    std::vector<std::string> parts;
    for (const auto& name : homXY.nodeNames) {
      auto funPart = [&](int k) {
        return pairLabel(homLabel(thetaS.at(k)), homLabel(thetaT.at(k)));
      };
      if (name[0] == 'h') {
        int k = std::stoi(name.substr(1));
        parts.push_back(pairLabel(funPart(k), natLabel(outComps.at(k))));
      } else {
        auto rest = name.substr(2);
        auto ipos = rest.find('i');
        int k = std::stoi(rest.substr(0, ipos));
        int i = std::stoi(rest.substr(ipos + 1));
        bool isD = name[1] == 'd';
        const Mor& post = isD ? bxy.prod.d(k, i) : bxy.prod.s(k, i);
        int lv = isD ? k : k + 1;
        std::map<std::string, std::string> whisk;
        for (const auto& [z, a] : outComps.at(lv)) whisk[z] = post.onArrow(a);
        Mor srcF = compose(thetaS.at(lv), post);
        Mor tgtF = compose(thetaT.at(lv), post);
        parts.push_back(
            pairLabel(pairLabel(homLabel(srcF), homLabel(tgtF)), natLabel(whisk)));
      }
    }
    return tupleLabel(parts);
  };
  return buildMor(src, tgt, onPair, onArrPair);
}

Mor unitStructureMap(const Comonoid& c, const End& homCst) {
  Obj i = Obj::unit(c.carrier.inst);
  std::string elt = homCst.encode(c.counit);
  if (i.instance() == Instance::FinSet) return Mor::fn(i, homCst.object(), {{"*", elt}});
  return Mor::functor(i, homCst.object(), {{"*", elt}},
                      {{"id*", homCst.object().cat().identity.at(elt)}});
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

namespace {
Cosimplicial coproductLevelwise(const Cosimplicial& x, const Cosimplicial& y) {
  Cosimplicial out;
  out.inst = x.inst;
  out.trunc = x.trunc;
  std::vector<Coproduct> cps;
  for (int k = 0; k <= x.trunc; ++k) {
    cps.push_back(coproduct({x.level(k), y.level(k)}));
    out.levels.push_back(cps.back().apex);
  }
  auto tagged = [&](const Mor& f0, const Mor& f1, const Obj& src, const Obj& tgt) {
    auto onObj = [&](const std::string& e) {
      auto [k, rest] = parseTag(e);
      return tagLabel(k, k == 0 ? f0(rest) : f1(rest));
    };
    return buildMor(src, tgt, onObj);
  };
  for (int k = 0; k < x.trunc; ++k) {
    std::vector<Mor> ds, ss;
    for (int i = 0; i <= k + 1; ++i)
      ds.push_back(tagged(x.d(k, i), y.d(k, i), out.levels[k], out.levels[k + 1]));
    for (int i = 0; i <= k; ++i)
      ss.push_back(tagged(x.s(k, i), y.s(k, i), out.levels[k + 1], out.levels[k]));
    out.cofaces.push_back(std::move(ds));
    out.codegens.push_back(std::move(ss));
  }
  out.validate();
  return out;
}

Obj randomSet(std::mt19937_64& rng, std::size_t maxSize) {
  std::uniform_int_distribution<std::size_t> dist(1, maxSize);
  std::size_t sz = dist(rng);
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < sz; ++i) elems.push_back("x" + std::to_string(i));
  return Obj::set(std::move(elems));
}
}  // namespace

Cosimplicial randomCosimplicial(std::mt19937_64& rng, int n, std::size_t maxLevelSize) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::uniform_int_distribution<int> shape(0, 5);
    Cosimplicial cand;
    switch (shape(rng)) {
      case 0:
        cand = constantCosimplicial(randomSet(rng, maxLevelSize), n);
        break;
      case 1:
        cand = coskeleton(Obj::unit(Instance::FinSet), n);
        break;
      case 2:
        cand = smash(randomSet(rng, 2), coskeleton(Obj::unit(Instance::FinSet), n));
        break;
      case 3:
        cand = tensorLevelwise(constantCosimplicial(randomSet(rng, 2), n),
                               coskeleton(Obj::unit(Instance::FinSet), n));
        break;
      case 4:
        cand = coproductLevelwise(constantCosimplicial(randomSet(rng, 2), n),
                                  coskeleton(Obj::unit(Instance::FinSet), n));
        break;
      default:
        cand = coproductLevelwise(constantCosimplicial(randomSet(rng, 2), n),
                                  constantCosimplicial(randomSet(rng, 2), n));
        break;
    }
    bool fits = true;
    for (const auto& l : cand.levels) fits = fits && l.size() <= maxLevelSize && l.size() >= 1;
    if (fits) return cand;
  }
  return constantCosimplicial(Obj::unit(Instance::FinSet), n);
}

bool corruptOneEntry(Cosimplicial& x, std::mt19937_64& rng) {
  if (x.inst != Instance::FinSet) return false;
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::uniform_int_distribution<int> levDist(0, x.trunc - 1);
    int nLev = levDist(rng);
    std::uniform_int_distribution<int> iDist(0, nLev + 1);
    int i = iDist(rng);
    const Obj& src = x.level(nLev);
    const Obj& tgt = x.level(nLev + 1);
    if (src.elems().empty() || tgt.elems().size() < 2) continue;
    std::uniform_int_distribution<std::size_t> eDist(0, src.elems().size() - 1);
    const std::string& e = src.elems()[eDist(rng)];
    auto table = x.d(nLev, i).objMap();
    const std::string old = table.at(e);
    for (const auto& other : tgt.elems())
      if (other != old) {
        table[e] = other;
        break;
      }
    if (table.at(e) == old) continue;
    x.cofaces[nLev][i] = Mor::fn(src, tgt, std::move(table));
    return true;
  }
  return false;
}

}  // namespace gct
