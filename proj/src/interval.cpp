#include "gct/interval.hpp"

#include <algorithm>
#include <sstream>

namespace gct {

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

namespace {

CocatInterval setInitial() {
  CocatInterval j;
  j.inst = Instance::FinSet;
  j.name = "set-initial";
  Obj unit = Obj::unit(Instance::FinSet);
  j.level1 = Obj::set({"0", "1"});
  j.level2 = Obj::set({"0", "1", "2"});
  j.d0 = Mor::fn(unit, j.level1, {{"*", "1"}});
  j.d1 = Mor::fn(unit, j.level1, {{"*", "0"}});
  j.p = Mor::fn(j.level1, unit, {{"0", "*"}, {"1", "*"}});
  j.inUpper = Mor::fn(j.level1, j.level2, {{"0", "1"}, {"1", "2"}});
  j.inLower = Mor::fn(j.level1, j.level2, {{"0", "0"}, {"1", "1"}});
  j.c = Mor::fn(j.level1, j.level2, {{"0", "0"}, {"1", "2"}});
  j.sigma = Mor::fn(j.level1, j.level1, {{"0", "1"}, {"1", "0"}});
  return j;
}

Obj ordinalCat(int n) {
  CatData c;
  for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int k = i; k <= n; ++k) {
      std::string name = "a" + std::to_string(i) + std::to_string(k);
      c.arrows.push_back({name, std::to_string(i), std::to_string(k)});
      if (i == k) c.identity[std::to_string(i)] = name;
    }
  for (int i = 0; i <= n; ++i)
    for (int k = i; k <= n; ++k)
      for (int l = k; l <= n; ++l)
        c.comp[{"a" + std::to_string(i) + std::to_string(k),
                "a" + std::to_string(k) + std::to_string(l)}] =
            "a" + std::to_string(i) + std::to_string(l);
  return Obj::cat(std::move(c));
}

Obj indiscreteCat(int n) {
  CatData c;
  for (int i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::string name = "m" + std::to_string(i) + std::to_string(k);
      c.arrows.push_back({name, std::to_string(i), std::to_string(k)});
      if (i == k) c.identity[std::to_string(i)] = name;
    }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        c.comp[{"m" + std::to_string(i) + std::to_string(k),
                "m" + std::to_string(k) + std::to_string(l)}] =
            "m" + std::to_string(i) + std::to_string(l);
  return Obj::cat(std::move(c));
}

CocatInterval catI() {
  CocatInterval j;
  j.inst = Instance::FinCat;
  j.name = "cat-i";
  Obj unit = Obj::unit(Instance::FinCat);
  j.level1 = ordinalCat(1);
  j.level2 = ordinalCat(2);
  j.d0 = Mor::functor(unit, j.level1, {{"*", "1"}}, {});
  j.d1 = Mor::functor(unit, j.level1, {{"*", "0"}}, {});
  j.p = Mor::functor(j.level1, unit, {{"0", "*"}, {"1", "*"}}, {{"a01", "id*"}});
  j.inUpper = Mor::functor(j.level1, j.level2, {{"0", "1"}, {"1", "2"}}, {{"a01", "a12"}});
  j.inLower = Mor::functor(j.level1, j.level2, {{"0", "0"}, {"1", "1"}}, {{"a01", "a01"}});
  j.c = Mor::functor(j.level1, j.level2, {{"0", "0"}, {"1", "2"}}, {{"a01", "a02"}});
  return j;
}

CocatInterval grpdJ() {
  CocatInterval j;
  j.inst = Instance::FinCat;
  j.name = "grpd-j";
  Obj unit = Obj::unit(Instance::FinCat);
  j.level1 = indiscreteCat(2);
  j.level2 = indiscreteCat(3);
  j.d0 = Mor::functor(unit, j.level1, {{"*", "1"}}, {});
  j.d1 = Mor::functor(unit, j.level1, {{"*", "0"}}, {});
  std::map<std::string, std::string> pArr;
  for (const auto& a : j.level1.cat().arrows) pArr[a.name] = "id*";
  j.p = Mor::functor(j.level1, unit, {{"0", "*"}, {"1", "*"}}, std::move(pArr));
  auto shiftMap = [&](const std::function<int(int)>& f) {
    std::map<std::string, std::string> obj, arr;
    for (int i = 0; i < 2; ++i) obj[std::to_string(i)] = std::to_string(f(i));
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        arr["m" + std::to_string(i) + std::to_string(k)] =
            "m" + std::to_string(f(i)) + std::to_string(f(k));
    return Mor::functor(j.level1, j.level2, std::move(obj), std::move(arr));
  };
  j.inUpper = shiftMap([](int i) { return i + 1; });
  j.inLower = shiftMap([](int i) { return i; });
  j.c = shiftMap([](int i) { return i == 0 ? 0 : 2; });
  std::map<std::string, std::string> sObj{{"0", "1"}, {"1", "0"}}, sArr;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k)
      sArr["m" + std::to_string(i) + std::to_string(k)] =
          "m" + std::to_string(1 - i) + std::to_string(1 - k);
  j.sigma = Mor::functor(j.level1, j.level1, std::move(sObj), std::move(sArr));
  return j;
}

std::string gapArrow(const std::string& block, const std::vector<std::string>& elems) {
  std::vector<std::string> parts = {block};
  parts.insert(parts.end(), elems.begin(), elems.end());
  return tupleLabel(parts);
}

CocatInterval twoC(const Obj& cset) {
  if (cset.instance() != Instance::FinSet)
    throw Error(ErrorKind::InvalidInput, "twoC takes a finite set (diagonal comonoid)");
  CocatInterval j;
  j.inst = Instance::FinCat;
  j.name = "two-c";
  Obj unit = Obj::unit(Instance::FinCat);

  CatData two;
  two.objects = {"0", "1"};
  two.arrows.push_back({"id0", "0", "0"});
  two.arrows.push_back({"id1", "1", "1"});
  two.identity["0"] = "id0";
  two.identity["1"] = "id1";
  for (const auto& x : cset.elems()) two.arrows.push_back({gapArrow("g", {x}), "0", "1"});
  two.comp[{"id0", "id0"}] = "id0";
  two.comp[{"id1", "id1"}] = "id1";
  for (const auto& x : cset.elems()) {
    two.comp[{"id0", gapArrow("g", {x})}] = gapArrow("g", {x});
    two.comp[{gapArrow("g", {x}), "id1"}] = gapArrow("g", {x});
  }
  j.level1 = Obj::cat(std::move(two));

  CatData three;
  three.objects = {"0", "1", "2"};
  for (int i = 0; i < 3; ++i) {
    three.arrows.push_back({"id" + std::to_string(i), std::to_string(i), std::to_string(i)});
    three.identity[std::to_string(i)] = "id" + std::to_string(i);
  }
  for (const auto& x : cset.elems()) {
    three.arrows.push_back({gapArrow("g01", {x}), "0", "1"});
    three.arrows.push_back({gapArrow("g12", {x}), "1", "2"});
  }
  for (const auto& x : cset.elems())
    for (const auto& y : cset.elems()) three.arrows.push_back({gapArrow("g02", {x, y}), "0", "2"});
  auto compIds = [&](CatData& cd) {
    for (const auto& f : cd.arrows)
      for (const auto& g : cd.arrows) {
        if (f.tgt != g.src) continue;
        if (cd.identity.at(f.src) == f.name)
          cd.comp[{f.name, g.name}] = g.name;
        else if (cd.identity.at(g.src) == g.name)
          cd.comp[{f.name, g.name}] = f.name;
      }
  };
  compIds(three);
  for (const auto& x : cset.elems())
    for (const auto& y : cset.elems())
      three.comp[{gapArrow("g01", {x}), gapArrow("g12", {y})}] = gapArrow("g02", {x, y});
  j.level2 = Obj::cat(std::move(three));

  j.d0 = Mor::functor(unit, j.level1, {{"*", "1"}}, {});
  j.d1 = Mor::functor(unit, j.level1, {{"*", "0"}}, {});
  std::map<std::string, std::string> pArr{{"id0", "id*"}, {"id1", "id*"}};
  for (const auto& x : cset.elems()) pArr[gapArrow("g", {x})] = "id*";
  j.p = Mor::functor(j.level1, unit, {{"0", "*"}, {"1", "*"}}, std::move(pArr));
  std::map<std::string, std::string> up{{"0", "1"}, {"1", "2"}}, upArr;
  std::map<std::string, std::string> lo{{"0", "0"}, {"1", "1"}}, loArr;
  std::map<std::string, std::string> cm{{"0", "0"}, {"1", "2"}}, cArr;
  for (const auto& x : cset.elems()) {
    upArr[gapArrow("g", {x})] = gapArrow("g12", {x});
    loArr[gapArrow("g", {x})] = gapArrow("g01", {x});
    cArr[gapArrow("g", {x})] = gapArrow("g02", {x, x});  // the diagonal comultiplication
  }
  j.inUpper = Mor::functor(j.level1, j.level2, std::move(up), std::move(upArr));
  j.inLower = Mor::functor(j.level1, j.level2, std::move(lo), std::move(loArr));
  j.c = Mor::functor(j.level1, j.level2, std::move(cm), std::move(cArr));
  return j;
}

}  // namespace

CocatInterval builtinInterval(BuiltinInterval kind, const Obj& comonoidSet) {
  switch (kind) {
    case BuiltinInterval::SetInitial:
      return setInitial();
    case BuiltinInterval::CatI:
      return catI();
    case BuiltinInterval::GrpdJ:
      return grpdJ();
    case BuiltinInterval::TwoC:
      return twoC(comonoidSet);
  }
  throw Error(ErrorKind::InvalidInput, "unknown builtin interval");
}

CocatInterval builtinIntervalByName(const std::string& name) {
  if (name == "set-initial") return setInitial();
  if (name == "cat-i") return catI();
  if (name == "grpd-j") return grpdJ();
  if (name.rfind("two-c", 0) == 0) {
    std::size_t n = 1;
    if (name.size() > 6 && name[5] == ':') n = std::stoull(name.substr(6));
    std::vector<std::string> elems;
    for (std::size_t i = 0; i < n; ++i) elems.push_back("c" + std::to_string(i));
    return twoC(Obj::set(std::move(elems)));
  }
  throw Error(ErrorKind::InvalidInput, "unknown interval name: " + name);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

namespace {
bool sigmaAxiomsHold(const CocatInterval& j, const Mor& sigma, std::string* why = nullptr) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (compose(j.d0, sigma) != j.d1) return explain("sigma d0 != d1");
  if (compose(j.d1, sigma) != j.d0) return explain("sigma d1 != d0");
  if (compose(sigma, sigma) != Mor::identity(j.level1)) return explain("sigma sigma != id");
  if (compose(sigma, j.p) != j.p) return explain("p sigma != p");
  // inverse laws via the pushout mediators [sigma,1] and [1,sigma]
  try {
    GivenPushout gp = GivenPushout::check(j.d0, j.d1, j.level2, j.inLower, j.inUpper);
    Mor invL = gp.mediator(sigma, Mor::identity(j.level1));
    Mor invR = gp.mediator(Mor::identity(j.level1), sigma);
    Mor lhsL = compose(j.c, invL);
    Mor lhsR = compose(j.c, invR);
    if (lhsL != compose(j.p, j.d0) || lhsR != compose(j.p, j.d1)) {
      // mirrored orientation?
      if (lhsL == compose(j.p, j.d1) && lhsR == compose(j.p, j.d0))
        return explain("inverse laws hold only with the mirrored orientation");
      return explain("inverse laws fail");
    }
  } catch (const Error& e) {
    return explain(std::string("inverse-law mediator failed: ") + e.what());
  }
  return true;
}
}  // namespace

std::optional<Mor> searchSigma(const CocatInterval& j) {
  for (const auto& cand : enumerateMorphisms(j.level1, j.level1))
    if (sigmaAxiomsHold(j, cand)) return cand;
  return std::nullopt;
}

Report validateInterval(const CocatInterval& j) {
  Report r;
  r.title = "interval axioms (" + (j.name.empty() ? std::string("user") : j.name) + ")";
  Obj unit = j.unitObj();
  r.check("p d0 = id", compose(j.d0, j.p) == Mor::identity(unit));
  r.check("p d1 = id", compose(j.d1, j.p) == Mor::identity(unit));
  bool square = compose(j.d0, j.inLower) == compose(j.d1, j.inUpper);
  r.check("gluing square inLower d0 = inUpper d1", square);
  if (!square) return r;
  try {
    GivenPushout::check(j.d0, j.d1, j.level2, j.inLower, j.inUpper);
    r.pass("level2 is the pushout of two segments");
  } catch (const Error& e) {
    r.fail("level2 is the pushout of two segments", e.what());
    return r;
  }
  try {
    DerivedInterval d = deriveCosimplicial(j, 1);
    Mor s0 = d.solveFromI2(compose(j.p, j.d1), Mor::identity(j.level1));
    Mor s1 = d.solveFromI2(Mor::identity(j.level1), compose(j.p, j.d0));
    r.check("counit law s0 c = id", compose(j.c, s0) == Mor::identity(j.level1));
    r.check("counit law s1 c = id", compose(j.c, s1) == Mor::identity(j.level1));
  } catch (const Error& e) {
    r.fail("codegeneracies exist", e.what());
  }
  try {
    DerivedInterval d = deriveCosimplicial(j, 3);
    r.check("coassociativity d1 c = d2 c",
            compose(j.c, d.cosimp.d(2, 1)) == compose(j.c, d.cosimp.d(2, 2)));
    r.pass("derived cosimplicial identities hold to level 3");
  } catch (const Error& e) {
    r.fail("coassociativity / derived structure", e.what());
  }
  if (j.sigma) {
    std::string why;
    bool ok = sigmaAxiomsHold(j, *j.sigma, &why);
    r.check("cogroupoid: sigma axioms", ok, why);
  } else {
    auto found = searchSigma(j);
    if (found)
      r.pass("cogroupoid: a valid sigma exists", found->describe());
    else
      r.pass("cocategory only: exhaustive search found no valid sigma");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Derived cosimplicial object
// ---------------------------------------------------------------------------

Mor DerivedInterval::solveFromI2(const Mor& lowerLeg, const Mor& upperLeg) const {
  return level2.mediator(lowerLeg, upperLeg);
}

Mor DerivedInterval::solveFromSegments(int n, const std::vector<Mor>& legs) const {
  if (static_cast<int>(legs.size()) != n)
    throw Error(ErrorKind::MediatorFailure, "wrong number of segment legs");
  if (n == 1) return legs[0];
  if (n == 2) return solveFromI2(legs[0], legs[1]);
  if (n == 3)
    return higher[3].mediator(solveFromI2(legs[0], legs[1]), solveFromI2(legs[1], legs[2]));
  std::vector<Mor> init(legs.begin(), legs.end() - 1);
  return higher[n].mediator(solveFromSegments(n - 1, init), legs.back());
}

Mor DerivedInterval::twoSegments(int n, int j) const {
  return solveFromI2(kappa[n][j], kappa[n][j + 1]);
}

DerivedInterval deriveCosimplicial(const CocatInterval& j, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "truncation must be >= 1");
  DerivedInterval d;
  d.data = j;
  Obj unit = j.unitObj();
  d.level2 = GivenPushout::check(j.d0, j.d1, j.level2, j.inLower, j.inUpper);
  d.higher.resize(std::max(4, n + 1));

  Cosimplicial& cs = d.cosimp;
  cs.inst = j.inst;
  cs.trunc = n;
  cs.levels = {unit, j.level1};
  cs.cofaces.push_back({j.d0, j.d1});
  cs.codegens.push_back({j.p});
  d.vertexMaps.push_back({Mor::identity(unit)});
  d.vertexMaps.push_back({j.d1, j.d0});
  d.kappa.push_back({});
  d.kappa.push_back({Mor::identity(j.level1)});

  if (n >= 2) {
    cs.levels.push_back(j.level2);
    cs.cofaces.push_back({j.inUpper, j.c, j.inLower});
    d.kappa.push_back({j.inLower, j.inUpper});
    d.vertexMaps.push_back(
        {compose(j.d1, j.inLower), compose(j.d0, j.inLower), compose(j.d0, j.inUpper)});
    Mor s0 = d.solveFromI2(compose(j.p, j.d1), Mor::identity(j.level1));
    Mor s1 = d.solveFromI2(Mor::identity(j.level1), compose(j.p, j.d0));
    cs.codegens.push_back({s0, s1});
  }

  for (int lev = 3; lev <= n; ++lev) {
    // build I^lev
    if (lev == 3) {
      d.higher[3] = pushout(j.inUpper, j.inLower);
      cs.levels.push_back(d.higher[3].colim.apex);
      Mor dTop = d.higher[3].fromLeft;   // embeds segments 0,1
      Mor dZero = d.higher[3].fromRight;  // embeds segments 1,2
      d.kappa.push_back({compose(j.inLower, dTop), compose(j.inUpper, dTop),
                         compose(j.inUpper, dZero)});
    } else {
      Mor topVertex = d.vertexMaps[lev - 1][lev - 1];
      d.higher[lev] = pushout(topVertex, j.d1);
      cs.levels.push_back(d.higher[lev].colim.apex);
      std::vector<Mor> ks;
      for (int seg = 0; seg < lev - 1; ++seg)
        ks.push_back(compose(d.kappa[lev - 1][seg], d.higher[lev].fromLeft));
      ks.push_back(d.higher[lev].fromRight);
      d.kappa.push_back(std::move(ks));
    }
    std::vector<Mor> vs;
    for (int v = 0; v < lev; ++v) vs.push_back(compose(j.d1, d.kappa[lev][v]));
    vs.push_back(compose(j.d0, d.kappa[lev][lev - 1]));
    d.vertexMaps.push_back(std::move(vs));

    // cofaces I^{lev-1} -> I^lev by the segment rule
    std::vector<Mor> ds;
    for (int i = 0; i <= lev; ++i) {
      std::vector<Mor> legs;
      for (int seg = 0; seg < lev - 1; ++seg) {
        if (seg == i - 1)
          legs.push_back(compose(j.c, d.twoSegments(lev, i - 1)));
        else if (seg < i - 1)
          legs.push_back(d.kappa[lev][seg]);
        else
          legs.push_back(d.kappa[lev][seg + 1]);
      }
      ds.push_back(d.solveFromSegments(lev - 1, legs));
    }
    cs.cofaces.push_back(std::move(ds));

    // codegeneracies I^lev -> I^{lev-1}
    std::vector<Mor> ss;
    for (int i = 0; i <= lev - 1; ++i) {
      std::vector<Mor> legs;
      for (int seg = 0; seg < lev; ++seg) {
        if (seg == i)
          legs.push_back(compose(j.p, d.vertexMaps[lev - 1][i]));
        else if (seg < i)
          legs.push_back(d.kappa[lev - 1][seg]);
        else
          legs.push_back(d.kappa[lev - 1][seg - 1]);
      }
      ss.push_back(d.solveFromSegments(lev, legs));
    }
    cs.codegens.push_back(std::move(ss));
  }

  cs.validate();
  return d;
}

// ---------------------------------------------------------------------------
// Comonoid on I^1
// ---------------------------------------------------------------------------

UnitComonoid comonoidOnI1(const CocatInterval& j) {
  GivenPushout gp = GivenPushout::check(j.d0, j.d1, j.level2, j.inLower, j.inUpper);
  // lower leg (through inLower, which receives d0): (d1 (x) 1) . lambda^{-1}
  // upper leg (through inUpper, receiving d1): (1 (x) d0) . rho^{-1}
  Mor lower = compose(unitorLInv(j.level1), tensorMor(j.d1, Mor::identity(j.level1)));
  Mor upper = compose(unitorRInv(j.level1), tensorMor(Mor::identity(j.level1), j.d0));
  UnitComonoid u;
  u.carrier = j.level1;
  u.phi = gp.mediator(lower, upper);
  u.delta = compose(j.c, u.phi);
  u.counit = j.p;
  return u;
}

Report checkUnitComonoid(const UnitComonoid& u, const CocatInterval& j) {
  Report r;
  r.title = "comonoid on I1";
  DerivedInterval d = deriveCosimplicial(j, 2);
  const Mor& s0 = d.cosimp.s(1, 0);
  const Mor& s1 = d.cosimp.s(1, 1);
  // note the orientation: evaluating the legs of phi forces s0 = (1 (x) p) phi
  // and s1 = (p (x) 1) phi
  r.check("s0 factors as (1 (x) p) phi",
          compose(u.phi, compose(tensorMor(Mor::identity(j.level1), j.p), unitorR(j.level1))) ==
              s0);
  r.check("s1 factors as (p (x) 1) phi",
          compose(u.phi, compose(tensorMor(j.p, Mor::identity(j.level1)), unitorL(j.level1))) ==
              s1);
  Mor l = compose(u.delta, compose(tensorMor(u.counit, Mor::identity(u.carrier)),
                                   unitorL(u.carrier)));
  Mor rr = compose(u.delta, compose(tensorMor(Mor::identity(u.carrier), u.counit),
                                    unitorR(u.carrier)));
  r.check("left counit law", l == Mor::identity(u.carrier));
  r.check("right counit law", rr == Mor::identity(u.carrier));
  Mor lhs = compose(u.delta, tensorMor(u.delta, Mor::identity(u.carrier)));
  Mor rhs = compose(u.delta, tensorMor(Mor::identity(u.carrier), u.delta));
  r.check("coassociativity",
          compose(lhs, associator(u.carrier, u.carrier, u.carrier)) == rhs);
  return r;
}

// ---------------------------------------------------------------------------
// Comonoid on the derived cosimplicial object
// ---------------------------------------------------------------------------

Comonoid comonoidOnIdot(const DerivedInterval& d, int n) {
  const CocatInterval& j = d.data;
  if (d.cosimp.trunc < n)
    throw Error(ErrorKind::InvalidInput, "derived interval too shallow for requested truncation");
  Comonoid c;
  c.carrier = d.cosimp.truncate(n);
  c.square = box(c.carrier, c.carrier, n);
  Obj unit = j.unitObj();

  std::vector<Mor> deltaMaps;
  deltaMaps.push_back(compose(unitorLInv(unit), c.square.inj(0, 0)));
  if (n >= 1) {
    // level 1: c under the identification (I box I)^1 ~ I^2
    Mor psi = c.square.solveLevel(
        1, {compose(unitorL(j.level1), j.inLower), compose(unitorR(j.level1), j.inUpper)});
    if (!isIso(psi)) throw Error(ErrorKind::Internal, "(I box I)^1 is not I^2");
    deltaMaps.push_back(compose(j.c, inverse(psi)));
  }
  if (n >= 2) {
    Mor f2 = d.solveFromI2(compose(deltaMaps[1], c.square.prod.d(1, 2)),
                           compose(deltaMaps[1], c.square.prod.d(1, 0)));
    if (compose(j.c, f2) != compose(deltaMaps[1], c.square.prod.d(1, 1)))
      throw Error(ErrorKind::InvalidInput,
                  "level-2 comultiplication condition f2 c = D1 c failed");
    deltaMaps.push_back(f2);
  }
  for (int lev = 3; lev <= n; ++lev) {
    std::vector<Mor> legs;
    for (int seg = 0; seg < lev; ++seg) {
      Mor lowerCorner =
          compose(unitorLInv(j.level1),
                  compose(tensorMor(d.vertexMaps[seg][seg], d.kappa[lev - seg][0]),
                          c.square.inj(lev, seg)));
      Mor upperCorner =
          compose(unitorRInv(j.level1),
                  compose(tensorMor(d.kappa[seg + 1][seg], d.vertexMaps[lev - seg - 1][0]),
                          c.square.inj(lev, seg + 1)));
      Mor e = d.solveFromI2(lowerCorner, upperCorner);
      legs.push_back(compose(j.c, e));
    }
    deltaMaps.push_back(d.solveFromSegments(lev, legs));
  }
  c.delta = CosimplicialMap::make(c.carrier, c.square.prod, std::move(deltaMaps));

  std::vector<Mor> counitMaps;
  for (int lev = 0; lev <= n; ++lev) {
    Mor m = Mor::identity(c.carrier.level(lev));
    for (int k = lev - 1; k >= 0; --k) m = compose(m, c.carrier.s(k, 0));
    counitMaps.push_back(m);
  }
  c.counit = CosimplicialMap::make(c.carrier, cstUnit(j.inst, n), std::move(counitMaps));

  Report r = checkComonoid(c);
  if (!r.allPass()) {
    std::string msg = "derived comonoid failed its laws:";
    for (const auto& ch : r.checks)
      if (ch.status == "fail") msg += " [" + ch.name + "]";
    throw Error(ErrorKind::InvalidInput, msg);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Lemma-5.5-style extension
// ---------------------------------------------------------------------------

CosimplicialMap mapFromInterval(const DerivedInterval& d, const Mor& f0, const Mor& f1,
                                const Cosimplicial& x) {
  const CocatInterval& j = d.data;
  int n = std::min(d.cosimp.trunc, x.trunc);
  if (compose(j.d0, f1) != compose(f0, x.d(0, 0)))
    throw Error(ErrorKind::InvalidInput, "square violation: f1 d0 != d0 f0");
  if (compose(j.d1, f1) != compose(f0, x.d(0, 1)))
    throw Error(ErrorKind::InvalidInput, "square violation: f1 d1 != d1 f0");
  if (compose(j.p, f0) != compose(f1, x.s(0, 0)))
    throw Error(ErrorKind::InvalidInput, "square violation: s0 f1 != f0 p");
  std::vector<Mor> maps = {f0, f1};
  if (n >= 2) {
    Mor f2 = d.solveFromI2(compose(f1, x.d(1, 2)), compose(f1, x.d(1, 0)));
    if (compose(j.c, f2) != compose(f1, x.d(1, 1)))
      throw Error(ErrorKind::InvalidInput, "obstruction: f2 c != d1 f1");
    maps.push_back(f2);
  }
  for (int lev = 3; lev <= n; ++lev) {
    std::vector<Mor> legs;
    for (int seg = 0; seg < lev; ++seg) {
      Mor g = f1;
      for (int k = 1; k <= seg; ++k) g = compose(g, x.d(k, 0));
      for (int k = seg + 1; k < lev; ++k) g = compose(g, x.d(k, k + 1));
      legs.push_back(g);
    }
    maps.push_back(d.solveFromSegments(lev, legs));
  }
  return CosimplicialMap::make(d.cosimp.truncate(n), x.truncate(n), std::move(maps));
}

Mor solveFromI2Tensored(const CocatInterval& j, const Obj& z, const Mor& lowerLeg,
                        const Mor& upperLeg) {
  Mor idz = Mor::identity(z);
  Pushout po = pushout(tensorMor(j.d0, idz), tensorMor(j.d1, idz));
  Mor cmp = po.mediator(tensorMor(j.inLower, idz), tensorMor(j.inUpper, idz));
  if (!isIso(cmp))
    throw Error(ErrorKind::Internal, "tensor did not preserve the interval pushout");
  return compose(inverse(cmp), po.mediator(lowerLeg, upperLeg));
}

}  // namespace gct
