#pragma once

#include "gct/finite.hpp"
#include "gct/interval.hpp"
#include "gct/report.hpp"

namespace gct {

// ---------------------------------------------------------------------------
// V-graphs and V-categories
// ---------------------------------------------------------------------------

struct VGraph {
  Instance inst = Instance::FinSet;
  std::vector<std::string> objects;  // sorted
  std::map<std::pair<std::string, std::string>, Obj> hom;

  const Obj& at(const std::string& a, const std::string& b) const;
  void validate() const;  // total on objects x objects, single instance
};

struct VCategory {
  VGraph graph;
  // comp[(a,b,c)] : hom(a,b) (x) hom(b,c) -> hom(a,c), diagrammatic order
  std::map<std::tuple<std::string, std::string, std::string>, Mor> comp;
  std::map<std::string, Mor> unit;  // I -> hom(a,a)

  const std::vector<std::string>& objects() const { return graph.objects; }
  const Obj& hom(const std::string& a, const std::string& b) const { return graph.at(a, b); }
  const Mor& m(const std::string& a, const std::string& b, const std::string& c) const;
  const Mor& u(const std::string& a) const;
};

// A map of V-graphs (no law requirement).
struct GraphMap {
  VGraph src, tgt;
  std::map<std::string, std::string> onObj;
  std::map<std::pair<std::string, std::string>, Mor> onHom;

  const Mor& at(const std::string& a, const std::string& b) const;
  std::string describe() const;
  bool operator==(const GraphMap& o) const;
};
GraphMap composeGraphMaps(const GraphMap& f, const GraphMap& g);
GraphMap identityGraphMap(const VGraph& x);

// A V-functor is a graph map between the underlying graphs satisfying the
// functor laws; `make` validates them.
struct VFunctor {
  GraphMap map;
  static VFunctor make(const VCategory& a, const VCategory& b, GraphMap m);
  const std::string& operator()(const std::string& a) const { return map.onObj.at(a); }
  const Mor& at(const std::string& a, const std::string& b) const { return map.at(a, b); }
  std::string describe() const { return map.describe(); }
  bool operator==(const VFunctor& o) const { return map == o.map; }
  bool operator<(const VFunctor& o) const { return describe() < o.describe(); }
};

Report validateVCat(const VCategory& a);
VCategory tensorVCat(const VCategory& a, const VCategory& b);
VCategory dualVCat(const VCategory& a);
VFunctor composeVFunctors(const VCategory& a, const VCategory& b, const VCategory& c,
                          const VFunctor& f, const VFunctor& g);
VFunctor identityVFunctor(const VCategory& a);

// The one-object unit V-category and the discrete / indiscrete enrichments.
VCategory unitVCat(Instance inst);
VCategory discreteVCat(Instance inst, const std::vector<std::string>& labels);
VCategory indiscreteVCat(Instance inst, const std::vector<std::string>& labels);

// Gap categories: two(X) is the arrow category with hom(0,1) = X; three(C) has
// hom(0,2) = C (x) C with concatenation as composition.
VCategory gapTwo(const Obj& x);
VCategory gapThree(const Obj& c);

std::vector<VFunctor> enumerateVFunctors(const VCategory& a, const VCategory& b);
// Isomorphism-of-V-categories search for small inputs (tests and reports).
struct VCatIso {
  std::map<std::string, std::string> onObj;
  std::map<std::pair<std::string, std::string>, Mor> homIso;
};
std::optional<VCatIso> findVCatIso(const VCategory& a, const VCategory& b);

// ---------------------------------------------------------------------------
// The square product on graphs with a fixed object set
// ---------------------------------------------------------------------------

struct SquareProduct {
  VGraph graph;  // (X squareS Y)(a,b) = coproduct over z of X(a,z) (x) Y(z,b)
  VGraph x, y;
  std::map<std::pair<std::string, std::string>, Coproduct> parts;

  // X(a,z) (x) Y(z,b) -> (X squareS Y)(a,b)
  Mor inj(const std::string& a, const std::string& z, const std::string& b) const;
  // Mediator out of (X squareS Y)(a,b) given legs per middle object.
  Mor solve(const std::string& a, const std::string& b, const std::vector<Mor>& legs) const;
};

SquareProduct squareS(const VGraph& x, const VGraph& y);
GraphMap mapSquare(const SquareProduct& src, const SquareProduct& tgt, const GraphMap& f,
                   const GraphMap& g);
// Middle four exchange: (X (x) X') squareS (Y (x) Y') ~ (X square Y) (x) (X' square Y').
// Returned per hom-pair as an exhibited isomorphism.
std::map<std::pair<std::string, std::string>, Mor> middleFourExchange(
    const VGraph& x, const VGraph& xp, const VGraph& y, const VGraph& yp);
// Levelwise tensor of graphs over paired object sets.
VGraph tensorGraph(const VGraph& x, const VGraph& y);

// Composition as a graph map A squareS A -> A; the functor criterion.
GraphMap compositionSquare(const VCategory& a);
bool functorCriterion(const VCategory& a, const VCategory& b, const GraphMap& f);

// ---------------------------------------------------------------------------
// Homotopies
// ---------------------------------------------------------------------------

// Elementwise homotopy between two morphisms of V (5.8-style).
struct ElemHomotopy {
  CocatInterval interval;
  Mor from, to;  // f, g : X -> Y
  Mor h;         // I1 (x) X -> Y
};
ElemHomotopy mkElemHomotopy(const CocatInterval& j, const Mor& f, const Mor& g, const Mor& h);
ElemHomotopy constantElemHomotopy(const CocatInterval& j, const Mor& f);
ElemHomotopy verticalElem(const ElemHomotopy& h1, const ElemHomotopy& h2);
ElemHomotopy horizontalElem(const ElemHomotopy& f, const ElemHomotopy& k);
// The alternative horizontal composition through the comultiplication on I1.
ElemHomotopy horizontalElemViaComonoid(const ElemHomotopy& f, const ElemHomotopy& k);
ElemHomotopy invertElem(const ElemHomotopy& h);  // needs a cogroupoid interval

// Homotopy between parallel graph maps with equal object assignment, stored
// per hom-pair.
struct GraphHomotopy {
  CocatInterval interval;
  GraphMap from, to;
  std::map<std::pair<std::string, std::string>, Mor> h;

  ElemHomotopy elem(const std::string& a, const std::string& b) const;
};
GraphHomotopy mkHomotopy(const CocatInterval& j, const GraphMap& f, const GraphMap& g,
                         std::map<std::pair<std::string, std::string>, Mor> h);
GraphHomotopy constantHomotopy(const CocatInterval& j, const GraphMap& f);
GraphHomotopy verticalComposite(const GraphHomotopy& h1, const GraphHomotopy& h2);
GraphHomotopy whiskerPre(const GraphHomotopy& h, const GraphMap& u);   // H(I1 * u)
GraphHomotopy whiskerPost(const GraphHomotopy& h, const GraphMap& v);  // vH
GraphHomotopy flipHomotopy(const GraphHomotopy& h);                    // via sigma
bool homotopyEqual(const GraphHomotopy& a, const GraphHomotopy& b);
// Property (v): square-whiskering against a fixed graph map.
GraphHomotopy whiskerSquareRight(const SquareProduct& src, const SquareProduct& tgt,
                                 const GraphHomotopy& h, const GraphMap& phi);
GraphHomotopy whiskerSquareLeft(const SquareProduct& src, const SquareProduct& tgt,
                                const GraphMap& phi, const GraphHomotopy& h);

}  // namespace gct
