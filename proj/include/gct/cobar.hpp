#pragma once

#include "gct/cosimplicial.hpp"
#include "gct/enriched.hpp"

namespace gct {

// ---------------------------------------------------------------------------
// Bimodules
// ---------------------------------------------------------------------------

struct Bimodule {
  VCategory amb;  // A
  std::map<std::pair<std::string, std::string>, Obj> value;
  // left action A(b,a) (x) phi(a,a') -> phi(b,a')
  std::map<std::tuple<std::string, std::string, std::string>, Mor> lact;
  // right action phi(a,a') (x) A(a',b') -> phi(a,b')
  std::map<std::tuple<std::string, std::string, std::string>, Mor> ract;

  const Obj& at(const std::string& a, const std::string& a2) const;
  const Mor& left(const std::string& b, const std::string& a, const std::string& a2) const;
  const Mor& right(const std::string& a, const std::string& a2, const std::string& b2) const;
  Report validate() const;
};

Bimodule unitBimodule(const VCategory& a);
Bimodule homBimodule(const VCategory& a, const VCategory& b, const VFunctor& f, const VFunctor& g);

// A map of bimodules over the same ambient category.
struct BimoduleMap {
  std::map<std::pair<std::string, std::string>, Mor> maps;
  const Mor& at(const std::string& a, const std::string& a2) const;
};
BimoduleMap identityBimoduleMap(const Bimodule& phi);

// Coend composition with its colimit data.
struct BimoduleComposite {
  Bimodule composite;
  std::map<std::pair<std::string, std::string>, Colimit> coends;

  // phi(a,x) (x) psi(x,a') -> (phi o psi)(a,a')
  Mor inj(const std::string& a, const std::string& x, const std::string& a2) const;
};
BimoduleComposite composeBimodules(const Bimodule& phi, const Bimodule& psi);

// The composition map <A,B>(f,g) o <A,B>(g,h) -> <A,B>(f,h) induced by B.
BimoduleMap homComposeMap(const BimoduleComposite& comp, const VCategory& a, const VCategory& b,
                          const VFunctor& f, const VFunctor& g, const VFunctor& h);
// Unit coherence: A o phi ~ phi and phi o A ~ phi, exhibited.
BimoduleMap coendUnitLeft(const BimoduleComposite& comp, const Bimodule& phi);   // A o phi -> phi
BimoduleMap coendUnitRight(const BimoduleComposite& comp, const Bimodule& phi);  // phi o A -> phi

// ---------------------------------------------------------------------------
// The cobar construction, elementwise
// ---------------------------------------------------------------------------

// An element of Y(phi)^n: one component morphism Abar(a0..an) -> phi(a0,an)
// per (n+1)-tuple of objects of A. The exponent is the left-associated tensor
// of consecutive homs (the unit object for n = 0).
struct CobarElem {
  int level = 0;
  std::map<std::vector<std::string>, Mor> comp;
  bool operator==(const CobarElem& o) const { return comp == o.comp; }
  std::string label() const;
};

// A morphism of Y(phi)^n between two elements (FinCat instances): per tuple a
// component table from exponent object-elements to arrows of phi(a0,an).
struct CobarMor {
  int level = 0;
  std::map<std::vector<std::string>, std::map<std::string, std::string>> comp;
  bool operator==(const CobarMor& o) const { return comp == o.comp; }
  std::string label() const;
};

struct Cobar {
  Bimodule phi;

  std::vector<std::vector<std::string>> tuples(int n) const;
  Obj exponent(const std::vector<std::string>& tuple) const;
  // split an exponent element label into its factor labels (n factors for an
  // (n+1)-tuple)
  static std::vector<std::string> factors(const std::string& label, int n);
  static std::string joinFactors(const std::vector<std::string>& parts);

  // structure maps, on elements and on morphisms
  CobarElem coface(int n, int i, const CobarElem& e) const;
  CobarElem codegen(int n, int i, const CobarElem& e) const;  // Y^{n+1} -> Y^n
  CobarMor cofaceMor(int n, int i, const CobarMor& m) const;
  CobarMor codegenMor(int n, int i, const CobarMor& m) const;

  // identity morphism at an element; vertical composition
  CobarMor idMor(const CobarElem& e) const;
  CobarMor composeMor(const CobarMor& f, const CobarMor& g) const;
  // enumerate morphisms between two elements (FinCat), componentwise natural
  std::vector<CobarMor> enumerateMors(const CobarElem& from, const CobarElem& to) const;

  // validity: each component lands where it should
  void check(const CobarElem& e) const;
  bool morValid(const CobarElem& from, const CobarElem& to, const CobarMor& m) const;

  std::vector<CobarElem> enumerateLevel(int n) const;  // guarded
};

// The canonical element of Y<A,B>(f,f): composites of f-images.
CobarElem cobarUnitElem(const Cobar& y, const VCategory& a, const VCategory& b, const VFunctor& f,
                        int n);

// Cup product into the cobar of the composite bimodule.
CobarElem cup(const Cobar& yphi, const Cobar& ypsi, const BimoduleComposite& comp,
              const CobarElem& x, const CobarElem& yel);
CobarMor cupMor(const Cobar& yphi, const Cobar& ypsi, const BimoduleComposite& comp,
                const CobarMor& x, const CobarMor& yel);
// Mixed whiskering used when composing along colimit words.
CobarMor cupMixed(const Cobar& yphi, const Cobar& ypsi, const BimoduleComposite& comp,
                  const CobarElem& xe, const CobarMor& xm, bool xIsMor, const CobarElem& ye,
                  const CobarMor& ym, bool yIsMor);

// Push an element/morphism along a bimodule map.
CobarElem pushElem(const Cobar& src, const Cobar& tgt, const BimoduleMap& t, const CobarElem& e);
CobarMor pushMor(const Cobar& src, const Cobar& tgt, const BimoduleMap& t, const CobarMor& m);

// ---------------------------------------------------------------------------
// Materialization (small inputs; the oracle route)
// ---------------------------------------------------------------------------

struct MaterializedCobar {
  Cosimplicial cosimp;
  Cobar y;
  std::vector<std::vector<CobarElem>> elems;  // per level, aligned with labels
  CobarElem decode(int n, const std::string& label) const;
  std::string encode(int n, const CobarElem& e) const;
};

MaterializedCobar materializeCobar(const Cobar& y, int n);

}  // namespace gct
