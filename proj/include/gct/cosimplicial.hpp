#pragma once

#include <random>

#include "gct/finite.hpp"
#include "gct/report.hpp"

namespace gct {

// ---------------------------------------------------------------------------
// Truncated cosimplicial objects
// ---------------------------------------------------------------------------

struct Cosimplicial {
  Instance inst = Instance::FinSet;
  int trunc = 0;                           // N
  std::vector<Obj> levels;                 // X^0 .. X^N
  std::vector<std::vector<Mor>> cofaces;   // cofaces[n][i] : X^n -> X^{n+1}, i <= n+1
  std::vector<std::vector<Mor>> codegens;  // codegens[n][i] : X^{n+1} -> X^n, i <= n

  const Obj& level(int n) const;
  const Mor& d(int n, int i) const;
  const Mor& s(int n, int i) const;
  void validate() const;  // all cosimplicial identities expressible within range
  Cosimplicial truncate(int n) const;
  bool operator==(const Cosimplicial& o) const;
};

struct CosimplicialMap {
  Cosimplicial src, tgt;
  std::vector<Mor> levelMaps;

  static CosimplicialMap make(const Cosimplicial& src, const Cosimplicial& tgt,
                              std::vector<Mor> maps);  // validates commutation
  static CosimplicialMap makeUnchecked(const Cosimplicial& src, const Cosimplicial& tgt,
                                       std::vector<Mor> maps);
  static CosimplicialMap id(const Cosimplicial& x);
  Report validateReport() const;  // per-square pass/fail without throwing
  const Mor& at(int n) const;
  int trunc() const { return src.trunc; }
  bool operator==(const CosimplicialMap& o) const;
};

CosimplicialMap composeMaps(const CosimplicialMap& f, const CosimplicialMap& g);
bool isIsoMap(const CosimplicialMap& f);
CosimplicialMap inverseMap(const CosimplicialMap& f);

// Exhaustive enumeration of truncated cosimplicial maps, by backtracking over
// levels. The independent oracle for the end computation.
std::vector<CosimplicialMap> enumerateCosimplicialMaps(const Cosimplicial& x,
                                                       const Cosimplicial& y);

// ---------------------------------------------------------------------------
// Degenerate cosimplicial objects
// ---------------------------------------------------------------------------

Cosimplicial constantCosimplicial(const Obj& a, int n);
Cosimplicial coskeleton(const Obj& a, int n);  // level k = (k+1)-fold coproduct of A
Cosimplicial cstUnit(Instance inst, int n);

Obj h0(const Cosimplicial& x);
Mor h0Include(const Cosimplicial& x);  // h0(X) -> X^0

// ---------------------------------------------------------------------------
// Box products
// ---------------------------------------------------------------------------

// The staircase colimit presentation of (X box Y)^n keeps the colimit data per
// level so that maps out of the box can be solved as cocones.
struct BoxProduct {
  Cosimplicial prod;
  Cosimplicial x, y;
  std::vector<Colimit> colimits;  // index n >= 1; level 0 is X^0 (x) Y^0 directly

  // Canonical injection X^p (x) Y^{n-p} -> (X box Y)^n.
  Mor inj(int n, int p) const;
  Obj summand(int n, int p) const;
  // Solve a map (X box Y)^n -> W from legs on the diagonal summands
  // (legs[p] : X^p (x) Y^{n-p} -> W); compatibility is checked.
  Mor solveLevel(int n, const std::vector<Mor>& legs) const;
};

BoxProduct box(const Cosimplicial& x, const Cosimplicial& y, int n);

// One-truncated box product built from the single pushout of 2.1-style data;
// agrees with box(x, y, 1) up to canonical isomorphism.
struct Box1Product {
  Cosimplicial prod;
  Cosimplicial x, y;
  Pushout po;  // level-1 pushout; fromLeft : X^0 (x) Y^1, fromRight : X^1 (x) Y^0
  Mor solveLevel1(const Mor& legLeft, const Mor& legRight) const;
};
Box1Product box1(const Cosimplicial& x, const Cosimplicial& y);

// Functorial action: (f box g) : X box Y -> X' box Y'.
CosimplicialMap boxMap(const BoxProduct& src, const BoxProduct& tgt, const CosimplicialMap& f,
                       const CosimplicialMap& g);

// Pointwise monoidal product (levelwise tensor) and the canonical comparison
// (X box Y) -> (X tensor Y), the opmonoidal structure of the identity functor.
Cosimplicial tensorLevelwise(const Cosimplicial& x, const Cosimplicial& y);
CosimplicialMap boxComparison(const BoxProduct& bx);

// Unit and associativity isomorphisms, exhibited as invertible maps.
CosimplicialMap boxUnitLeft(const BoxProduct& bx);    // cstI box X -> X
CosimplicialMap boxUnitRight(const BoxProduct& bx);   // X box cstI -> X
// (X box Y) box Z -> X box (Y box Z); all four box products supplied.
CosimplicialMap boxAssociator(const BoxProduct& xy, const BoxProduct& xy_z,
                              const BoxProduct& yz, const BoxProduct& x_yz);

// ---------------------------------------------------------------------------
// THC situation: smash, cotensor, Hom
// ---------------------------------------------------------------------------

Cosimplicial smash(const Obj& a, const Cosimplicial& x);    // (A smash X)^n = A (x) X^n
Cosimplicial cotensor(const Cosimplicial& x, const Obj& a); // (X^A)^n = (X^n)^A

// Interchange (A smash X) box (B smash Y) ~ (A (x) B) smash (X box Y).
CosimplicialMap smashInterchange(const Obj& a, const Obj& b, const BoxProduct& smashed,
                                 const BoxProduct& plain);

// The end over the truncation: Hom(X, Y) as an object of V.
struct End {
  Limit limit;
  std::vector<std::string> nodeNames;  // sorted node order of the limit tuples
  Cosimplicial x, y;
  int n = 0;

  const Obj& object() const { return limit.apex; }
  // Decode an element of the end as a truncated cosimplicial map.
  CosimplicialMap decode(const std::string& element) const;
  // Encode a cosimplicial map as an element label of the end.
  std::string encode(const CosimplicialMap& f) const;
};

End uhomFull(const Cosimplicial& x, const Cosimplicial& y, int n);
// Recomputes at n+1 and reports whether the canonical comparison is an iso.
bool uhomStabilizes(const Cosimplicial& x, const Cosimplicial& y, int n);

// The 1-truncated Hom as the limit of the displayed cospan.
Obj uhom1(const Cosimplicial& x, const Cosimplicial& y);

// ---------------------------------------------------------------------------
// Cosimplicial comonoids
// ---------------------------------------------------------------------------

struct Comonoid {
  Cosimplicial carrier;
  BoxProduct square;  // carrier box carrier
  CosimplicialMap delta;
  CosimplicialMap counit;  // carrier -> cstI
};

Comonoid cstUnitComonoid(Instance inst, int n);
Comonoid coskUnitComonoid(Instance inst, int n);

Report checkComonoid(const Comonoid& c);

// The monoidal structure map Hom(C,X) (x) Hom(C,Y) -> Hom(C, X box Y)
// obtained as the THC-transpose of the smash/evaluate composite.
Mor structureMap(const Comonoid& c, const Cosimplicial& x, const Cosimplicial& y,
                 const End& homX, const End& homY, const BoxProduct& bxy, const End& homXY);
// Unit structure map I -> Hom(C, cstI), the transpose of the counit.
Mor unitStructureMap(const Comonoid& c, const End& homCst);

// ---------------------------------------------------------------------------
// Random instances (law suites and robustness tests)
// ---------------------------------------------------------------------------

Cosimplicial randomCosimplicial(std::mt19937_64& rng, int n, std::size_t maxLevelSize);
// Corrupts one coface table entry; returns false when no corruptible entry
// exists (all levels too small).
bool corruptOneEntry(Cosimplicial& x, std::mt19937_64& rng);

}  // namespace gct
