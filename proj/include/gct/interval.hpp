#pragma once

#include "gct/cosimplicial.hpp"
#include "gct/finite.hpp"
#include "gct/report.hpp"

namespace gct {

// ---------------------------------------------------------------------------
// Cocategory / cogroupoid intervals
// ---------------------------------------------------------------------------

// An internal cocategory on the unit object. The square inLower . d0 =
// inUpper . d1 exhibits level2 as the pushout of two copies of level1 glued at
// a vertex; inUpper is the upper-segment inclusion (the map omitting 0) and
// inLower the lower one (omitting the top). The gluing convention is the one
// fixed by the gap-category example and used globally.
struct CocatInterval {
  Instance inst = Instance::FinSet;
  std::string name;  // builtin tag or user label, for reports
  Obj level1, level2;
  Mor d0, d1;  // I -> I1; d0 picks the top endpoint, d1 the bottom
  Mor p;       // I1 -> I
  Mor inUpper, inLower;  // I1 -> I2 (the paper's i^0 and i^1)
  Mor c;                 // I1 -> I2, the cocomposition (omits the middle)
  std::optional<Mor> sigma;

  Obj unitObj() const { return Obj::unit(inst); }
};

enum class BuiltinInterval { SetInitial, CatI, GrpdJ, TwoC };

// twoC takes a comonoid in FinSet, i.e. a finite set with its diagonal.
CocatInterval builtinInterval(BuiltinInterval kind, const Obj& comonoidSet = Obj());
CocatInterval builtinIntervalByName(const std::string& name);  // "set-initial", "cat-i", ...

// Checks every interval axiom; cocategory and cogroupoid status are reported
// separately. When sigma is absent, an exhaustive search for a valid one is
// attempted and its outcome reported.
Report validateInterval(const CocatInterval& j);
std::optional<Mor> searchSigma(const CocatInterval& j);

// ---------------------------------------------------------------------------
// The derived cosimplicial object
// ---------------------------------------------------------------------------

struct DerivedInterval {
  CocatInterval data;
  Cosimplicial cosimp;
  // kappa[n][j] : I1 -> I^n, the j-th segment (0 <= j < n, n >= 1)
  std::vector<std::vector<Mor>> kappa;
  // vertexMaps[n][j] : I -> I^n (0 <= j <= n)
  std::vector<std::vector<Mor>> vertexMaps;

  GivenPushout level2;          // I^2 = I1 +_I I1
  std::vector<Pushout> higher;  // higher[n] presents I^n for n >= 3

  // Mediator out of I^2 given legs on the lower and upper segments.
  Mor solveFromI2(const Mor& lowerLeg, const Mor& upperLeg) const;
  // Mediator out of I^n given one leg per segment (shared-vertex compatible).
  Mor solveFromSegments(int n, const std::vector<Mor>& legs) const;
  // The long edge I^2 -> I^n whose image is segments j, j+1.
  Mor twoSegments(int n, int j) const;
};

DerivedInterval deriveCosimplicial(const CocatInterval& j, int n);

// ---------------------------------------------------------------------------
// Comonoid structures
// ---------------------------------------------------------------------------

// The comonoid structure on I^1 itself, solved from the interval data.
struct UnitComonoid {
  Obj carrier;  // I1
  Mor phi;      // I2 -> I1 (x) I1
  Mor delta;    // I1 -> I1 (x) I1, phi . c
  Mor counit;   // p
};
UnitComonoid comonoidOnI1(const CocatInterval& j);
Report checkUnitComonoid(const UnitComonoid& u, const CocatInterval& j);

// The cosimplicial comonoid on the derived object, built level by level: the
// level-1 piece is the cocomposition, level 2 glues the two outer cofaces, and
// higher levels follow the segment rule. The level-2 existence condition is
// verified explicitly and failure reported as an error.
Comonoid comonoidOnIdot(const DerivedInterval& d, int n);

// Lemma-5.5-style extension: a cosimplicial map I^- -> X from its levels 0, 1.
// Throws Error(InvalidInput) when the compatibility square or the level-2
// obstruction fails.
CosimplicialMap mapFromInterval(const DerivedInterval& d, const Mor& f0, const Mor& f1,
                                const Cosimplicial& x);

// Mediator out of I^2 (x) Z, using that the tensor preserves the defining
// pushout. Legs are indexed like solveFromI2: lower = through inLower (x) 1.
Mor solveFromI2Tensored(const CocatInterval& j, const Obj& z, const Mor& lowerLeg,
                        const Mor& upperLeg);

}  // namespace gct
