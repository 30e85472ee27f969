#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gct {

// ---------------------------------------------------------------------------
// Errors and bounds
// ---------------------------------------------------------------------------

enum class ErrorKind {
  InstanceMismatch,
  InvalidInput,
  NonStabilizing,
  BoundBreach,
  MediatorFailure,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrorKind kind;
};

// Size guards shared by enumeration-heavy operations. The engine may override
// these from CLI flags or environment variables.
struct Bounds {
  std::size_t maxWordLength = 64;
  std::size_t maxHomSize = 4096;
  std::size_t maxCandidates = 1000000;
  std::size_t maxRules = 4000;
};

Bounds& bounds();

// ---------------------------------------------------------------------------
// Label codec: composite labels are built from escaped components so that
// parsing them back is unambiguous. Labels only need to be unique within one
// object.
// ---------------------------------------------------------------------------

std::string escLabel(const std::string& s);
// Splits a composite body on top-level occurrences of `sep`, honouring escapes.
std::vector<std::string> splitEsc(const std::string& body, char sep);
std::string unescLabel(const std::string& s);

std::string tupleLabel(const std::vector<std::string>& parts);
std::vector<std::string> parseTuple(const std::string& label);
std::string pairLabel(const std::string& a, const std::string& b);
std::pair<std::string, std::string> parsePair(const std::string& label);
std::string tagLabel(std::size_t k, const std::string& s);
std::pair<std::size_t, std::string> parseTag(const std::string& label);

// Function-table label for an element of an internal hom.
std::string mapLabel(const std::map<std::string, std::string>& table);
std::map<std::string, std::string> parseMapLabel(const std::string& label);
// Functor label: object map plus arrow map.
std::string funLabel(const std::map<std::string, std::string>& onObjects,
                     const std::map<std::string, std::string>& onArrows);
std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>
parseFunLabel(const std::string& label);
// Natural transformation label: component table.
std::string natLabel(const std::map<std::string, std::string>& components);
std::map<std::string, std::string> parseNatLabel(const std::string& label);

// ---------------------------------------------------------------------------
// Objects of a finite base instance
// ---------------------------------------------------------------------------

enum class Instance { FinSet, FinCat };

std::string instanceName(Instance i);

// A finite category: objects, named arrows (identities included), a total
// composition table in diagrammatic order (first; then).
struct CatData {
  std::vector<std::string> objects;  // sorted, duplicate-free
  struct Arrow {
    std::string name, src, tgt;
  };
  std::vector<Arrow> arrows;                     // sorted by name
  std::map<std::string, std::string> identity;   // object -> arrow name
  std::map<std::pair<std::string, std::string>, std::string> comp;

  const Arrow& arrow(const std::string& name) const;
  bool hasArrow(const std::string& name) const;
  std::string compose(const std::string& f, const std::string& g) const;
  bool isIdentity(const std::string& name) const;
  std::vector<std::string> hom(const std::string& a, const std::string& b) const;
  void validate() const;  // associativity/unit laws by exhaustive iteration
  void sortAndIndex();
};

class Obj {
public:
  Obj() = default;
  static Obj set(std::vector<std::string> elems);
  static Obj cat(CatData data);
  static Obj unit(Instance inst);
  static Obj empty(Instance inst);

  Instance instance() const { return inst_; }
  bool isSet() const { return inst_ == Instance::FinSet; }

  const std::vector<std::string>& elems() const;  // FinSet only
  const CatData& cat() const;                     // FinCat only

  // Uniform views used by generic code.
  const std::vector<std::string>& objectElems() const;  // FinSet elems / FinCat objects
  std::vector<std::string> morphismElems() const;       // FinCat arrows, empty for FinSet
  std::size_t size() const;                             // object-element count

  bool operator==(const Obj& o) const;
  bool operator!=(const Obj& o) const { return !(*this == o); }
  bool operator<(const Obj& o) const;

  std::string describe() const;

private:
  Instance inst_ = Instance::FinSet;
  std::shared_ptr<const std::vector<std::string>> elems_;
  std::shared_ptr<const CatData> cat_;
};

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

class Mor {
public:
  Mor() = default;
  // FinSet morphism: total function table.
  static Mor fn(const Obj& src, const Obj& tgt, std::map<std::string, std::string> table);
  // FinCat morphism: functor given by object and arrow maps (identities may be
  // omitted from `onArrows`; they are filled in).
  static Mor functor(const Obj& src, const Obj& tgt, std::map<std::string, std::string> onObjects,
                     std::map<std::string, std::string> onArrows);
  static Mor identity(const Obj& x);

  const Obj& src() const { return src_; }
  const Obj& tgt() const { return tgt_; }

  const std::string& operator()(const std::string& objElem) const;
  const std::string& onArrow(const std::string& arrowName) const;
  const std::map<std::string, std::string>& objMap() const { return *obj_; }
  const std::map<std::string, std::string>& arrMap() const { return *arr_; }

  bool operator==(const Mor& o) const;  // extensional table equality
  bool operator!=(const Mor& o) const { return !(*this == o); }
  bool operator<(const Mor& o) const;

  bool defined() const { return obj_ != nullptr; }
  std::string describe() const;

private:
  Obj src_, tgt_;
  std::shared_ptr<const std::map<std::string, std::string>> obj_;
  std::shared_ptr<const std::map<std::string, std::string>> arr_;  // FinCat only
};

Mor compose(const Mor& f, const Mor& g);  // diagrammatic: f first, then g
bool isIso(const Mor& f);
Mor inverse(const Mor& f);

// ---------------------------------------------------------------------------
// Monoidal structure (cartesian) and internal hom
// ---------------------------------------------------------------------------

Obj tensor(const Obj& x, const Obj& y);
Mor tensorMor(const Mor& f, const Mor& g);
Mor unitorL(const Obj& x);     // I (x) X -> X
Mor unitorLInv(const Obj& x);  // X -> I (x) X
Mor unitorR(const Obj& x);     // X (x) I -> X
Mor unitorRInv(const Obj& x);
Mor associator(const Obj& x, const Obj& y, const Obj& z);  // (X(x)Y)(x)Z -> X(x)(Y(x)Z)
Mor associatorInv(const Obj& x, const Obj& y, const Obj& z);
Mor symmetry(const Obj& x, const Obj& y);  // X(x)Y -> Y(x)X
Mor proj1(const Obj& x, const Obj& y);
Mor proj2(const Obj& x, const Obj& y);
Mor pairing(const Mor& f, const Mor& g);  // Z -> X(x)Y from Z->X, Z->Y
Mor toTerminal(const Obj& x);

struct Coproduct {
  Obj apex;
  std::vector<Mor> injections;
};
Coproduct coproduct(const std::vector<Obj>& parts);
// Mediator out of a coproduct: legs from each part into a common target.
Mor coproductMediator(const Coproduct& cp, const std::vector<Mor>& legs);

Obj internalHom(const Obj& x, const Obj& y);  // Y^X
Mor evalMor(const Obj& x, const Obj& y);      // Y^X (x) X -> Y
Mor curry(const Mor& f, const Obj& z, const Obj& x, const Obj& y);    // from Z(x)X->Y
Mor uncurry(const Mor& f, const Obj& z, const Obj& x, const Obj& y);  // from Z->Y^X
// Functorial action on homs: Y^X -> Y'^X' from X'->X and Y->Y'.
Mor homMap(const Mor& pre, const Mor& post);

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

// Builds a morphism from element-level functions (object elements, and arrow
// elements for FinCat); validation happens in the Mor constructors.
Mor buildMor(const Obj& src, const Obj& tgt,
             const std::function<std::string(const std::string&)>& onObj,
             const std::function<std::string(const std::string&)>& onArr = nullptr);

std::vector<Mor> enumerateMorphisms(const Obj& x, const Obj& y);
std::size_t countMorphisms(const Obj& x, const Obj& y);
// All natural transformations between two functors (FinCat); used by the
// internal hom and by tests.
std::vector<std::map<std::string, std::string>> enumerateNatTrans(const Obj& x, const Obj& y,
                                                                  const Mor& f, const Mor& g);
std::optional<Mor> findIso(const Obj& x, const Obj& y);

// ---------------------------------------------------------------------------
// Finite diagrams, limits, colimits
// ---------------------------------------------------------------------------

struct Diagram {
  std::map<std::string, Obj> nodes;
  struct Edge {
    std::string name, src, tgt;
    Mor map;
  };
  std::vector<Edge> edges;

  void addNode(const std::string& name, const Obj& x);
  void addEdge(const std::string& name, const std::string& src, const std::string& tgt,
               const Mor& map);
  void validate() const;

  static Diagram span(const Obj& apex, const Mor& left, const Mor& right);
  static Diagram parallelPair(const Mor& f, const Mor& g);
};

struct Colimit {
  Obj apex;
  std::map<std::string, Mor> injections;
  // class label -> members as (node, element) pairs; for FinCat also arrow
  // classes with representative generator words.
  std::map<std::string, std::vector<std::pair<std::string, std::string>>> objectClasses;
  struct Letter {
    std::string node, arrow;
  };
  std::map<std::string, std::vector<Letter>> arrowWords;  // apex arrow -> representative word
  std::shared_ptr<const Diagram> diagram;

  Mor mediator(const std::map<std::string, Mor>& cocone) const;
};

struct Limit {
  Obj apex;
  std::map<std::string, Mor> projections;
  std::shared_ptr<const Diagram> diagram;

  Mor mediator(const std::map<std::string, Mor>& cone) const;
};

Colimit finiteColimit(const Diagram& d);
Limit finiteLimit(const Diagram& d);

// Pushout of a span X <-l- A -r-> Y; injections ordered (from X, from Y).
struct Pushout {
  Colimit colim;
  Mor fromLeft, fromRight;
  Mor mediator(const Mor& legLeft, const Mor& legRight) const;
};
Pushout pushout(const Mor& left, const Mor& right);

// Equalizer of f,g : X -> Y as a subobject of X with its inclusion.
struct Equalizer {
  Obj sub;
  Mor include;
};
Equalizer equalizer(const Mor& f, const Mor& g);

// Wraps a claimed pushout: checks the square commutes and that the canonical
// comparison from the freshly computed pushout is an isomorphism, then lets
// callers solve mediators against the given apex.
struct GivenPushout {
  Obj apex;
  Mor inLeft, inRight;  // the claimed injections
  Pushout canonical;
  Mor comparisonInv;  // apex -> canonical apex

  static GivenPushout check(const Mor& left, const Mor& right, const Obj& apex, const Mor& inLeft,
                            const Mor& inRight);
  Mor mediator(const Mor& legLeft, const Mor& legRight) const;
};

}  // namespace gct
