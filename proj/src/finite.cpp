#include "gct/finite.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace gct {

Bounds& bounds() {
  static Bounds b;
  return b;
}

// ---------------------------------------------------------------------------
// Label codec
// ---------------------------------------------------------------------------

namespace {
bool needsEscape(char c) {
  switch (c) {
    case '\\':
    case ',':
    case '(':
    case ')':
    case '{':
    case '}':
    case ';':
    case ':':
    case '>':
    case '|':
      return true;
    default:
      return false;
  }
}
}  // namespace

std::string escLabel(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (needsEscape(c)) out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string unescLabel(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) ++i;
    out.push_back(s[i]);
  }
  return out;
}

std::vector<std::string> splitEsc(const std::string& body, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '\\' && i + 1 < body.size()) {
      cur.push_back(body[i]);
      cur.push_back(body[i + 1]);
      ++i;
    } else if (body[i] == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(body[i]);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string tupleLabel(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += escLabel(parts[i]);
  }
  out.push_back(')');
  return out;
}

std::vector<std::string> parseTuple(const std::string& label) {
  if (label.size() < 2 || label.front() != '(' || label.back() != ')')
    throw Error(ErrorKind::Internal, "not a tuple label: " + label);
  std::string body = label.substr(1, label.size() - 2);
  if (body.empty()) return {};
  std::vector<std::string> parts = splitEsc(body, ',');
  for (auto& p : parts) p = unescLabel(p);
  return parts;
}

std::string pairLabel(const std::string& a, const std::string& b) { return tupleLabel({a, b}); }

std::pair<std::string, std::string> parsePair(const std::string& label) {
  auto parts = parseTuple(label);
  if (parts.size() != 2) throw Error(ErrorKind::Internal, "not a pair label: " + label);
  return {parts[0], parts[1]};
}

std::string tagLabel(std::size_t k, const std::string& s) {
  return std::to_string(k) + ":" + escLabel(s);
}

std::pair<std::size_t, std::string> parseTag(const std::string& label) {
  std::size_t pos = 0;
  while (pos < label.size() && label[pos] >= '0' && label[pos] <= '9') ++pos;
  if (pos == 0 || pos >= label.size() || label[pos] != ':')
    throw Error(ErrorKind::Internal, "not a tagged label: " + label);
  return {std::stoull(label.substr(0, pos)), unescLabel(label.substr(pos + 1))};
}

namespace {
std::string encodeTable(const std::map<std::string, std::string>& table) {
  std::string out;
  bool first = true;
  for (const auto& [k, v] : table) {
    if (!first) out.push_back(';');
    first = false;
    out += escLabel(k) + ">" + escLabel(v);
  }
  return out;
}

std::map<std::string, std::string> decodeTable(const std::string& body) {
  std::map<std::string, std::string> table;
  if (body.empty()) return table;
  for (const auto& entry : splitEsc(body, ';')) {
    auto kv = splitEsc(entry, '>');
    if (kv.size() != 2) throw Error(ErrorKind::Internal, "bad table entry: " + entry);
    table[unescLabel(kv[0])] = unescLabel(kv[1]);
  }
  return table;
}
}  // namespace

std::string mapLabel(const std::map<std::string, std::string>& table) {
  return "F{" + encodeTable(table) + "}";
}

std::map<std::string, std::string> parseMapLabel(const std::string& label) {
  if (label.size() < 3 || label.compare(0, 2, "F{") != 0 || label.back() != '}')
    throw Error(ErrorKind::Internal, "not a map label: " + label);
  return decodeTable(label.substr(2, label.size() - 3));
}

std::string funLabel(const std::map<std::string, std::string>& onObjects,
                     const std::map<std::string, std::string>& onArrows) {
  return "F{" + encodeTable(onObjects) + "|" + encodeTable(onArrows) + "}";
}

std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>
parseFunLabel(const std::string& label) {
  if (label.size() < 3 || label.compare(0, 2, "F{") != 0 || label.back() != '}')
    throw Error(ErrorKind::Internal, "not a functor label: " + label);
  auto halves = splitEsc(label.substr(2, label.size() - 3), '|');
  if (halves.size() != 2) throw Error(ErrorKind::Internal, "bad functor label: " + label);
  return {decodeTable(halves[0]), decodeTable(halves[1])};
}

std::string natLabel(const std::map<std::string, std::string>& components) {
  return "N{" + encodeTable(components) + "}";
}

std::map<std::string, std::string> parseNatLabel(const std::string& label) {
  if (label.size() < 3 || label.compare(0, 2, "N{") != 0 || label.back() != '}')
    throw Error(ErrorKind::Internal, "not a nat label: " + label);
  return decodeTable(label.substr(2, label.size() - 3));
}

// ---------------------------------------------------------------------------
// CatData
// ---------------------------------------------------------------------------

std::string instanceName(Instance i) { return i == Instance::FinSet ? "FinSet" : "FinCat"; }

const CatData::Arrow& CatData::arrow(const std::string& name) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), name,
                             [](const Arrow& a, const std::string& n) { return a.name < n; });
  if (it == arrows.end() || it->name != name)
    throw Error(ErrorKind::Internal, "unknown arrow: " + name);
  return *it;
}

bool CatData::hasArrow(const std::string& name) const {
  auto it = std::lower_bound(arrows.begin(), arrows.end(), name,
                             [](const Arrow& a, const std::string& n) { return a.name < n; });
  return it != arrows.end() && it->name == name;
}

std::string CatData::compose(const std::string& f, const std::string& g) const {
  auto it = comp.find({f, g});
  if (it == comp.end())
    throw Error(ErrorKind::Internal, "composition undefined: " + f + " ; " + g);
  return it->second;
}

bool CatData::isIdentity(const std::string& name) const {
  const Arrow& a = arrow(name);
  auto it = identity.find(a.src);
  return it != identity.end() && it->second == name;
}

std::vector<std::string> CatData::hom(const std::string& a, const std::string& b) const {
  std::vector<std::string> out;
  for (const auto& ar : arrows)
    if (ar.src == a && ar.tgt == b) out.push_back(ar.name);
  return out;
}

void CatData::sortAndIndex() {
  std::sort(objects.begin(), objects.end());
  objects.erase(std::unique(objects.begin(), objects.end()), objects.end());
  std::sort(arrows.begin(), arrows.end(),
            [](const Arrow& a, const Arrow& b) { return a.name < b.name; });
}

void CatData::validate() const {
  std::set<std::string> objSet(objects.begin(), objects.end());
  if (objSet.size() != objects.size())
    throw Error(ErrorKind::InvalidInput, "duplicate object labels");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second)
      throw Error(ErrorKind::InvalidInput, "duplicate arrow label: " + a.name);
    if (!objSet.count(a.src) || !objSet.count(a.tgt))
      throw Error(ErrorKind::InvalidInput, "arrow endpoint missing: " + a.name);
  }
  for (const auto& o : objects) {
    auto it = identity.find(o);
    if (it == identity.end()) throw Error(ErrorKind::InvalidInput, "missing identity at " + o);
    const Arrow& id = arrow(it->second);
    if (id.src != o || id.tgt != o)
      throw Error(ErrorKind::InvalidInput, "identity has wrong endpoints at " + o);
  }
  // composition defined exactly on composable pairs, with correct endpoints
  std::map<std::string, std::vector<const Arrow*>> bySrc;
  for (const auto& a : arrows) bySrc[a.src].push_back(&a);
  std::size_t composablePairs = 0;
  for (const auto& f : arrows) {
    auto it = bySrc.find(f.tgt);
    if (it == bySrc.end()) continue;
    for (const Arrow* g : it->second) {
      ++composablePairs;
      auto ct = comp.find({f.name, g->name});
      if (ct == comp.end())
        throw Error(ErrorKind::InvalidInput,
                    "composition table missing at (" + f.name + "," + g->name + ")");
      const Arrow& h = arrow(ct->second);
      if (h.src != f.src || h.tgt != g->tgt)
        throw Error(ErrorKind::InvalidInput,
                    "composite has wrong endpoints at (" + f.name + "," + g->name + ")");
    }
  }
  if (comp.size() != composablePairs)
    throw Error(ErrorKind::InvalidInput, "composition table has extra entries");
  for (const auto& f : arrows) {
    if (compose(identity.at(f.src), f.name) != f.name ||
        compose(f.name, identity.at(f.tgt)) != f.name)
      throw Error(ErrorKind::InvalidInput, "unit law fails at " + f.name);
  }
  for (const auto& f : arrows) {
    auto gi = bySrc.find(f.tgt);
    if (gi == bySrc.end()) continue;
    for (const Arrow* g : gi->second) {
      auto hi = bySrc.find(g->tgt);
      if (hi == bySrc.end()) continue;
      const std::string& fg = compose(f.name, g->name);
      for (const Arrow* h : hi->second) {
        if (compose(fg, h->name) != compose(f.name, compose(g->name, h->name)))
          throw Error(ErrorKind::InvalidInput, "associativity fails at (" + f.name + "," +
                                                   g->name + "," + h->name + ")");
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Obj
// ---------------------------------------------------------------------------

Obj Obj::set(std::vector<std::string> elems) {
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw Error(ErrorKind::InvalidInput, "duplicate set element labels");
  Obj o;
  o.inst_ = Instance::FinSet;
  o.elems_ = std::make_shared<const std::vector<std::string>>(std::move(elems));
  return o;
}

Obj Obj::cat(CatData data) {
  data.sortAndIndex();
  data.validate();
  Obj o;
  o.inst_ = Instance::FinCat;
  o.cat_ = std::make_shared<const CatData>(std::move(data));
  return o;
}

Obj Obj::unit(Instance inst) {
  if (inst == Instance::FinSet) return set({"*"});
  CatData c;
  c.objects = {"*"};
  c.arrows = {{"id*", "*", "*"}};
  c.identity["*"] = "id*";
  c.comp[{"id*", "id*"}] = "id*";
  return cat(std::move(c));
}

Obj Obj::empty(Instance inst) {
  if (inst == Instance::FinSet) return set({});
  return cat(CatData{});
}

const std::vector<std::string>& Obj::elems() const {
  if (inst_ != Instance::FinSet || !elems_)
    throw Error(ErrorKind::Internal, "elems() on non-FinSet object");
  return *elems_;
}

const CatData& Obj::cat() const {
  if (inst_ != Instance::FinCat || !cat_)
    throw Error(ErrorKind::Internal, "cat() on non-FinCat object");
  return *cat_;
}

const std::vector<std::string>& Obj::objectElems() const {
  return inst_ == Instance::FinSet ? elems() : cat().objects;
}

std::vector<std::string> Obj::morphismElems() const {
  if (inst_ == Instance::FinSet) return {};
  std::vector<std::string> out;
  for (const auto& a : cat().arrows) out.push_back(a.name);
  return out;
}

std::size_t Obj::size() const { return objectElems().size(); }

bool Obj::operator==(const Obj& o) const {
  if (inst_ != o.inst_) return false;
  if (inst_ == Instance::FinSet) return elems() == o.elems();
  const CatData &a = cat(), &b = o.cat();
  if (a.objects != b.objects || a.identity != b.identity || a.comp != b.comp) return false;
  if (a.arrows.size() != b.arrows.size()) return false;
  for (std::size_t i = 0; i < a.arrows.size(); ++i)
    if (a.arrows[i].name != b.arrows[i].name || a.arrows[i].src != b.arrows[i].src ||
        a.arrows[i].tgt != b.arrows[i].tgt)
      return false;
  return true;
}

bool Obj::operator<(const Obj& o) const { return describe() < o.describe(); }

std::string Obj::describe() const {
  std::ostringstream os;
  if (inst_ == Instance::FinSet) {
    os << "set{";
    for (const auto& e : elems()) os << escLabel(e) << ";";
    os << "}";
  } else {
    os << "cat{";
    for (const auto& o2 : cat().objects) os << escLabel(o2) << ";";
    os << "|";
    for (const auto& a : cat().arrows)
      os << escLabel(a.name) << ":" << escLabel(a.src) << ">" << escLabel(a.tgt) << ";";
    os << "|";
    for (const auto& [k, v] : cat().comp)
      os << escLabel(k.first) << "." << escLabel(k.second) << ">" << escLabel(v) << ";";
    os << "}";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Mor
// ---------------------------------------------------------------------------

Mor Mor::fn(const Obj& src, const Obj& tgt, std::map<std::string, std::string> table) {
  if (src.instance() != Instance::FinSet || tgt.instance() != Instance::FinSet)
    throw Error(ErrorKind::InstanceMismatch, "fn() requires FinSet objects");
  std::set<std::string> tgtSet(tgt.elems().begin(), tgt.elems().end());
  for (const auto& e : src.elems()) {
    auto it = table.find(e);
    if (it == table.end())
      throw Error(ErrorKind::InvalidInput, "function table not total at " + e);
    if (!tgtSet.count(it->second))
      throw Error(ErrorKind::InvalidInput, "function value outside target: " + it->second);
  }
  if (table.size() != src.elems().size())
    throw Error(ErrorKind::InvalidInput, "function table has extra entries");
  Mor m;
  m.src_ = src;
  m.tgt_ = tgt;
  m.obj_ = std::make_shared<const std::map<std::string, std::string>>(std::move(table));
  return m;
}

Mor Mor::functor(const Obj& src, const Obj& tgt, std::map<std::string, std::string> onObjects,
                 std::map<std::string, std::string> onArrows) {
  if (src.instance() != Instance::FinCat || tgt.instance() != Instance::FinCat)
    throw Error(ErrorKind::InstanceMismatch, "functor() requires FinCat objects");
  const CatData& A = src.cat();
  const CatData& B = tgt.cat();
  for (const auto& o : A.objects) {
    auto it = onObjects.find(o);
    if (it == onObjects.end()) throw Error(ErrorKind::InvalidInput, "object map not total at " + o);
    if (!std::binary_search(B.objects.begin(), B.objects.end(), it->second))
      throw Error(ErrorKind::InvalidInput, "object image missing: " + it->second);
  }
  if (onObjects.size() != A.objects.size())
    throw Error(ErrorKind::InvalidInput, "object map has extra entries");
  for (const auto& o : A.objects) onArrows[A.identity.at(o)] = B.identity.at(onObjects.at(o));
  for (const auto& a : A.arrows) {
    auto it = onArrows.find(a.name);
    if (it == onArrows.end())
      throw Error(ErrorKind::InvalidInput, "arrow map not total at " + a.name);
    const CatData::Arrow& img = B.arrow(it->second);
    if (img.src != onObjects.at(a.src) || img.tgt != onObjects.at(a.tgt))
      throw Error(ErrorKind::InvalidInput, "arrow image has wrong endpoints at " + a.name);
  }
  if (onArrows.size() != A.arrows.size())
    throw Error(ErrorKind::InvalidInput, "arrow map has extra entries");
  std::map<std::string, std::vector<const CatData::Arrow*>> bySrc;
  for (const auto& a : A.arrows) bySrc[a.src].push_back(&a);
  for (const auto& f : A.arrows) {
    auto it = bySrc.find(f.tgt);
    if (it == bySrc.end()) continue;
    for (const CatData::Arrow* g : it->second) {
      if (onArrows.at(A.compose(f.name, g->name)) !=
          B.compose(onArrows.at(f.name), onArrows.at(g->name)))
        throw Error(ErrorKind::InvalidInput,
                    "functor does not preserve composition at (" + f.name + "," + g->name + ")");
    }
  }
  Mor m;
  m.src_ = src;
  m.tgt_ = tgt;
  m.obj_ = std::make_shared<const std::map<std::string, std::string>>(std::move(onObjects));
  m.arr_ = std::make_shared<const std::map<std::string, std::string>>(std::move(onArrows));
  return m;
}

Mor Mor::identity(const Obj& x) {
  std::map<std::string, std::string> obj;
  for (const auto& e : x.objectElems()) obj[e] = e;
  if (x.instance() == Instance::FinSet) return fn(x, x, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : x.cat().arrows) arr[a.name] = a.name;
  return functor(x, x, std::move(obj), std::move(arr));
}

const std::string& Mor::operator()(const std::string& objElem) const {
  auto it = obj_->find(objElem);
  if (it == obj_->end()) throw Error(ErrorKind::Internal, "element not in source: " + objElem);
  return it->second;
}

const std::string& Mor::onArrow(const std::string& arrowName) const {
  if (!arr_) throw Error(ErrorKind::Internal, "onArrow() on a FinSet morphism");
  auto it = arr_->find(arrowName);
  if (it == arr_->end()) throw Error(ErrorKind::Internal, "arrow not in source: " + arrowName);
  return it->second;
}

bool Mor::operator==(const Mor& o) const {
  if (!defined() || !o.defined()) return defined() == o.defined();
  if (src_ != o.src_ || tgt_ != o.tgt_) return false;
  if (*obj_ != *o.obj_) return false;
  if ((arr_ == nullptr) != (o.arr_ == nullptr)) return false;
  return !arr_ || *arr_ == *o.arr_;
}

bool Mor::operator<(const Mor& o) const {
  if (*obj_ != *o.obj_) return *obj_ < *o.obj_;
  if (arr_ && o.arr_) return *arr_ < *o.arr_;
  return false;
}

std::string Mor::describe() const {
  if (!arr_) return mapLabel(*obj_);
  return funLabel(*obj_, *arr_);
}

Mor compose(const Mor& f, const Mor& g) {
  if (f.tgt() != g.src()) throw Error(ErrorKind::Internal, "non-composable morphisms");
  std::map<std::string, std::string> obj;
  for (const auto& [k, v] : f.objMap()) obj[k] = g(v);
  if (f.src().instance() == Instance::FinSet) return Mor::fn(f.src(), g.tgt(), std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& [k, v] : f.arrMap()) arr[k] = g.onArrow(v);
  return Mor::functor(f.src(), g.tgt(), std::move(obj), std::move(arr));
}

bool isIso(const Mor& f) {
  std::set<std::string> seen;
  for (const auto& [k, v] : f.objMap()) seen.insert(v);
  if (seen.size() != f.tgt().objectElems().size() || seen.size() != f.objMap().size())
    return false;
  if (f.src().instance() == Instance::FinCat) {
    std::set<std::string> aseen;
    for (const auto& [k, v] : f.arrMap()) aseen.insert(v);
    if (aseen.size() != f.tgt().cat().arrows.size() || aseen.size() != f.arrMap().size())
      return false;
  }
  return true;
}

Mor inverse(const Mor& f) {
  if (!isIso(f)) throw Error(ErrorKind::Internal, "inverse of a non-isomorphism");
  std::map<std::string, std::string> obj;
  for (const auto& [k, v] : f.objMap()) obj[v] = k;
  if (f.src().instance() == Instance::FinSet) return Mor::fn(f.tgt(), f.src(), std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& [k, v] : f.arrMap()) arr[v] = k;
  return Mor::functor(f.tgt(), f.src(), std::move(obj), std::move(arr));
}

// ---------------------------------------------------------------------------
// Tensor (cartesian product) and friends
// ---------------------------------------------------------------------------

namespace {
void requireSameInstance(const Obj& x, const Obj& y) {
  if (x.instance() != y.instance())
    throw Error(ErrorKind::InstanceMismatch, "objects from different instances");
}
}  // namespace

Obj tensor(const Obj& x, const Obj& y) {
  requireSameInstance(x, y);
  if (x.instance() == Instance::FinSet) {
    std::vector<std::string> elems;
    for (const auto& a : x.elems())
      for (const auto& b : y.elems()) elems.push_back(pairLabel(a, b));
    return Obj::set(std::move(elems));
  }
  const CatData& A = x.cat();
  const CatData& B = y.cat();
  CatData c;
  for (const auto& a : A.objects)
    for (const auto& b : B.objects) c.objects.push_back(pairLabel(a, b));
  for (const auto& f : A.arrows)
    for (const auto& g : B.arrows)
      c.arrows.push_back(
          {pairLabel(f.name, g.name), pairLabel(f.src, g.src), pairLabel(f.tgt, g.tgt)});
  for (const auto& a : A.objects)
    for (const auto& b : B.objects)
      c.identity[pairLabel(a, b)] = pairLabel(A.identity.at(a), B.identity.at(b));
  for (const auto& f1 : A.arrows)
    for (const auto& g1 : B.arrows)
      for (const auto& f2 : A.arrows) {
        if (f1.tgt != f2.src) continue;
        for (const auto& g2 : B.arrows) {
          if (g1.tgt != g2.src) continue;
          c.comp[{pairLabel(f1.name, g1.name), pairLabel(f2.name, g2.name)}] =
              pairLabel(A.compose(f1.name, f2.name), B.compose(g1.name, g2.name));
        }
      }
  return Obj::cat(std::move(c));
}

Mor tensorMor(const Mor& f, const Mor& g) {
  Obj s = tensor(f.src(), g.src());
  Obj t = tensor(f.tgt(), g.tgt());
  std::map<std::string, std::string> obj;
  for (const auto& a : f.src().objectElems())
    for (const auto& b : g.src().objectElems()) obj[pairLabel(a, b)] = pairLabel(f(a), g(b));
  if (s.instance() == Instance::FinSet) return Mor::fn(s, t, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& u : f.src().cat().arrows)
    for (const auto& v : g.src().cat().arrows)
      arr[pairLabel(u.name, v.name)] = pairLabel(f.onArrow(u.name), g.onArrow(v.name));
  return Mor::functor(s, t, std::move(obj), std::move(arr));
}

Mor unitorL(const Obj& x) {
  Obj ix = tensor(Obj::unit(x.instance()), x);
  std::map<std::string, std::string> obj;
  for (const auto& e : x.objectElems()) obj[pairLabel("*", e)] = e;
  if (x.instance() == Instance::FinSet) return Mor::fn(ix, x, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : x.cat().arrows) arr[pairLabel("id*", a.name)] = a.name;
  return Mor::functor(ix, x, std::move(obj), std::move(arr));
}

Mor unitorLInv(const Obj& x) { return inverse(unitorL(x)); }

Mor unitorR(const Obj& x) {
  Obj xi = tensor(x, Obj::unit(x.instance()));
  std::map<std::string, std::string> obj;
  for (const auto& e : x.objectElems()) obj[pairLabel(e, "*")] = e;
  if (x.instance() == Instance::FinSet) return Mor::fn(xi, x, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : x.cat().arrows) arr[pairLabel(a.name, "id*")] = a.name;
  return Mor::functor(xi, x, std::move(obj), std::move(arr));
}

Mor unitorRInv(const Obj& x) { return inverse(unitorR(x)); }

Mor associator(const Obj& x, const Obj& y, const Obj& z) {
  Obj s = tensor(tensor(x, y), z);
  Obj t = tensor(x, tensor(y, z));
  auto remap = [](const std::string& l) {
    auto [xy, c] = parsePair(l);
    auto [a, b] = parsePair(xy);
    return pairLabel(a, pairLabel(b, c));
  };
  std::map<std::string, std::string> obj;
  for (const auto& e : s.objectElems()) obj[e] = remap(e);
  if (s.instance() == Instance::FinSet) return Mor::fn(s, t, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : s.cat().arrows) arr[a.name] = remap(a.name);
  return Mor::functor(s, t, std::move(obj), std::move(arr));
}

Mor associatorInv(const Obj& x, const Obj& y, const Obj& z) {
  return inverse(associator(x, y, z));
}

Mor symmetry(const Obj& x, const Obj& y) {
  Obj s = tensor(x, y);
  Obj t = tensor(y, x);
  auto remap = [](const std::string& l) {
    auto [a, b] = parsePair(l);
    return pairLabel(b, a);
  };
  std::map<std::string, std::string> obj;
  for (const auto& e : s.objectElems()) obj[e] = remap(e);
  if (s.instance() == Instance::FinSet) return Mor::fn(s, t, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : s.cat().arrows) arr[a.name] = remap(a.name);
  return Mor::functor(s, t, std::move(obj), std::move(arr));
}

Mor proj1(const Obj& x, const Obj& y) {
  Obj s = tensor(x, y);
  std::map<std::string, std::string> obj;
  for (const auto& e : s.objectElems()) obj[e] = parsePair(e).first;
  if (s.instance() == Instance::FinSet) return Mor::fn(s, x, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : s.cat().arrows) arr[a.name] = parsePair(a.name).first;
  return Mor::functor(s, x, std::move(obj), std::move(arr));
}

Mor proj2(const Obj& x, const Obj& y) {
  Obj s = tensor(x, y);
  std::map<std::string, std::string> obj;
  for (const auto& e : s.objectElems()) obj[e] = parsePair(e).second;
  if (s.instance() == Instance::FinSet) return Mor::fn(s, y, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : s.cat().arrows) arr[a.name] = parsePair(a.name).second;
  return Mor::functor(s, y, std::move(obj), std::move(arr));
}

Mor pairing(const Mor& f, const Mor& g) {
  if (f.src() != g.src()) throw Error(ErrorKind::Internal, "pairing with different sources");
  Obj t = tensor(f.tgt(), g.tgt());
  std::map<std::string, std::string> obj;
  for (const auto& e : f.src().objectElems()) obj[e] = pairLabel(f(e), g(e));
  if (f.src().instance() == Instance::FinSet) return Mor::fn(f.src(), t, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : f.src().cat().arrows)
    arr[a.name] = pairLabel(f.onArrow(a.name), g.onArrow(a.name));
  return Mor::functor(f.src(), t, std::move(obj), std::move(arr));
}

Mor toTerminal(const Obj& x) {
  Obj i = Obj::unit(x.instance());
  std::map<std::string, std::string> obj;
  for (const auto& e : x.objectElems()) obj[e] = "*";
  if (x.instance() == Instance::FinSet) return Mor::fn(x, i, std::move(obj));
  std::map<std::string, std::string> arr;
  for (const auto& a : x.cat().arrows) arr[a.name] = "id*";
  return Mor::functor(x, i, std::move(obj), std::move(arr));
}

// ---------------------------------------------------------------------------
// Coproducts
// ---------------------------------------------------------------------------

Coproduct coproduct(const std::vector<Obj>& parts) {
  if (parts.empty()) throw Error(ErrorKind::InvalidInput, "coproduct of zero objects needs an instance");
  Instance inst = parts[0].instance();
  for (const auto& p : parts) requireSameInstance(parts[0], p);
  Coproduct cp;
  if (inst == Instance::FinSet) {
    std::vector<std::string> elems;
    for (std::size_t k = 0; k < parts.size(); ++k)
      for (const auto& e : parts[k].elems()) elems.push_back(tagLabel(k, e));
    cp.apex = Obj::set(std::move(elems));
    for (std::size_t k = 0; k < parts.size(); ++k) {
      std::map<std::string, std::string> t;
      for (const auto& e : parts[k].elems()) t[e] = tagLabel(k, e);
      cp.injections.push_back(Mor::fn(parts[k], cp.apex, std::move(t)));
    }
    return cp;
  }
  CatData c;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const CatData& A = parts[k].cat();
    for (const auto& o : A.objects) c.objects.push_back(tagLabel(k, o));
    for (const auto& a : A.arrows)
      c.arrows.push_back({tagLabel(k, a.name), tagLabel(k, a.src), tagLabel(k, a.tgt)});
    for (const auto& o : A.objects) c.identity[tagLabel(k, o)] = tagLabel(k, A.identity.at(o));
    for (const auto& [fg, h] : A.comp)
      c.comp[{tagLabel(k, fg.first), tagLabel(k, fg.second)}] = tagLabel(k, h);
  }
  cp.apex = Obj::cat(std::move(c));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const CatData& A = parts[k].cat();
    std::map<std::string, std::string> obj, arr;
    for (const auto& o : A.objects) obj[o] = tagLabel(k, o);
    for (const auto& a : A.arrows) arr[a.name] = tagLabel(k, a.name);
    cp.injections.push_back(Mor::functor(parts[k], cp.apex, std::move(obj), std::move(arr)));
  }
  return cp;
}

Mor coproductMediator(const Coproduct& cp, const std::vector<Mor>& legs) {
  if (legs.size() != cp.injections.size())
    throw Error(ErrorKind::MediatorFailure, "wrong number of coproduct legs");
  Obj tgt = legs.empty() ? Obj() : legs[0].tgt();
  for (const auto& l : legs)
    if (l.tgt() != tgt) throw Error(ErrorKind::MediatorFailure, "coproduct legs disagree on target");
  std::map<std::string, std::string> obj, arr;
  for (const auto& e : cp.apex.objectElems()) {
    auto [k, rest] = parseTag(e);
    obj[e] = legs[k](rest);
  }
  if (cp.apex.instance() == Instance::FinSet) return Mor::fn(cp.apex, tgt, std::move(obj));
  for (const auto& a : cp.apex.cat().arrows) {
    auto [k, rest] = parseTag(a.name);
    arr[a.name] = legs[k].onArrow(rest);
  }
  return Mor::functor(cp.apex, tgt, std::move(obj), std::move(arr));
}

// ---------------------------------------------------------------------------
// Internal hom
// ---------------------------------------------------------------------------

namespace {
// Enumerate all functors X -> Y as (object map, arrow map) pairs, identities
// filled in, in canonical order.
void enumFunctorsInto(const CatData& A, const CatData& B,
                      const std::function<void(const std::map<std::string, std::string>&,
                                               const std::map<std::string, std::string>&)>& emit) {
  std::vector<std::string> nonId;
  for (const auto& a : A.arrows)
    if (A.identity.at(a.src) != a.name) nonId.push_back(a.name);

  std::map<std::string, std::string> onObj, onArr;
  // backtracking over object assignments, then arrow assignments
  std::function<void(std::size_t)> assignArrow = [&](std::size_t ai) {
    if (ai == nonId.size()) {
      // full composition check
      std::map<std::string, std::string> full = onArr;
      for (const auto& o : A.objects) full[A.identity.at(o)] = B.identity.at(onObj.at(o));
      for (const auto& f : A.arrows)
        for (const auto& g : A.arrows) {
          if (f.tgt != g.src) continue;
          if (full.at(A.compose(f.name, g.name)) != B.compose(full.at(f.name), full.at(g.name)))
            return;
        }
      emit(onObj, full);
      return;
    }
    const CatData::Arrow& a = A.arrow(nonId[ai]);
    for (const auto& cand : B.arrows) {
      if (cand.src != onObj.at(a.src) || cand.tgt != onObj.at(a.tgt)) continue;
      onArr[a.name] = cand.name;
      // partial composition pruning between already-assigned arrows
      bool ok = true;
      std::map<std::string, std::string> partial = onArr;
      for (const auto& o : A.objects) partial[A.identity.at(o)] = B.identity.at(onObj.at(o));
      for (std::size_t i = 0; ok && i <= ai; ++i)
        for (std::size_t j = 0; ok && j <= ai; ++j) {
          const auto& f = A.arrow(nonId[i]);
          const auto& g = A.arrow(nonId[j]);
          if (f.tgt != g.src) continue;
          auto it = partial.find(A.compose(f.name, g.name));
          if (it != partial.end() &&
              it->second != B.compose(partial.at(f.name), partial.at(g.name)))
            ok = false;
        }
      if (ok) assignArrow(ai + 1);
      onArr.erase(a.name);
    }
  };
  std::function<void(std::size_t)> assignObj = [&](std::size_t oi) {
    if (oi == A.objects.size()) {
      assignArrow(0);
      return;
    }
    if (B.objects.empty() && oi < A.objects.size()) return;
    for (const auto& cand : B.objects) {
      onObj[A.objects[oi]] = cand;
      assignObj(oi + 1);
      onObj.erase(A.objects[oi]);
    }
  };
  if (A.objects.empty())
    assignArrow(0);
  else
    assignObj(0);
}
}  // namespace

std::vector<std::map<std::string, std::string>> enumerateNatTrans(const Obj& x, const Obj& y,
                                                                  const Mor& f, const Mor& g) {
  const CatData& A = x.cat();
  const CatData& B = y.cat();
  std::vector<std::map<std::string, std::string>> out;
  std::map<std::string, std::string> comp;
  std::function<void(std::size_t)> rec = [&](std::size_t oi) {
    if (oi == A.objects.size()) {
      out.push_back(comp);
      return;
    }
    const std::string& o = A.objects[oi];
    for (const auto& cand : B.arrows) {
      if (cand.src != f(o) || cand.tgt != g(o)) continue;
      comp[o] = cand.name;
      bool ok = true;
      for (const auto& a : A.arrows) {
        if (!comp.count(a.src) || !comp.count(a.tgt)) continue;
        // naturality: f(a) ; comp[tgt] == comp[src] ; g(a)
        if (B.compose(f.onArrow(a.name), comp.at(a.tgt)) !=
            B.compose(comp.at(a.src), g.onArrow(a.name))) {
          ok = false;
          break;
        }
      }
      if (ok) rec(oi + 1);
      comp.erase(o);
    }
  };
  rec(0);
  return out;
}

Obj internalHom(const Obj& x, const Obj& y) {
  requireSameInstance(x, y);
  if (x.instance() == Instance::FinSet) {
    std::vector<std::string> elems;
    std::map<std::string, std::string> table;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == x.elems().size()) {
        elems.push_back(mapLabel(table));
        return;
      }
      for (const auto& v : y.elems()) {
        table[x.elems()[i]] = v;
        rec(i + 1);
      }
      table.erase(x.elems()[i]);
    };
    rec(0);
    if (elems.size() > bounds().maxCandidates)
      throw Error(ErrorKind::BoundBreach, "internal hom too large");
    return Obj::set(std::move(elems));
  }
  // FinCat: functor category
  const CatData& A = x.cat();
  const CatData& B = y.cat();
  std::vector<std::pair<std::map<std::string, std::string>, std::map<std::string, std::string>>>
      functors;
  enumFunctorsInto(A, B, [&](const auto& onObj, const auto& onArr) {
    functors.push_back({onObj, onArr});
    if (functors.size() > bounds().maxCandidates)
      throw Error(ErrorKind::BoundBreach, "functor category too large");
  });
  CatData c;
  std::vector<Mor> funMors;
  for (const auto& [onObj, onArr] : functors) {
    c.objects.push_back(funLabel(onObj, onArr));
    funMors.push_back(Mor::functor(x, y, onObj, onArr));
  }
  // arrows: natural transformations between each ordered pair of functors
  for (std::size_t i = 0; i < functors.size(); ++i)
    for (std::size_t j = 0; j < functors.size(); ++j) {
      for (const auto& comp : enumerateNatTrans(x, y, funMors[i], funMors[j])) {
        std::string name = pairLabel(pairLabel(c.objects[i], c.objects[j]), natLabel(comp));
        c.arrows.push_back({name, c.objects[i], c.objects[j]});
      }
    }
  for (std::size_t i = 0; i < functors.size(); ++i) {
    std::map<std::string, std::string> comp;
    for (const auto& o : A.objects) comp[o] = B.identity.at(funMors[i](o));
    c.identity[c.objects[i]] = pairLabel(pairLabel(c.objects[i], c.objects[i]), natLabel(comp));
  }
  // composition: vertical composition of components
  for (const auto& f : c.arrows)
    for (const auto& g : c.arrows) {
      if (f.tgt != g.src) continue;
      auto cf = parseNatLabel(parsePair(f.name).second);
      auto cg = parseNatLabel(parsePair(g.name).second);
      std::map<std::string, std::string> ch;
      for (const auto& [o, a] : cf) ch[o] = B.compose(a, cg.at(o));
      c.comp[{f.name, g.name}] = pairLabel(pairLabel(f.src, g.tgt), natLabel(ch));
    }
  return Obj::cat(std::move(c));
}

Mor evalMor(const Obj& x, const Obj& y) {
  Obj h = internalHom(x, y);
  Obj s = tensor(h, x);
  std::map<std::string, std::string> obj;
  if (x.instance() == Instance::FinSet) {
    for (const auto& e : s.elems()) {
      auto [fl, xe] = parsePair(e);
      obj[e] = parseMapLabel(fl).at(xe);
    }
    return Mor::fn(s, y, std::move(obj));
  }
  const CatData& B = y.cat();
  for (const auto& e : s.cat().objects) {
    auto [fl, xe] = parsePair(e);
    obj[e] = parseFunLabel(fl).first.at(xe);
  }
  std::map<std::string, std::string> arr;
  for (const auto& a : s.cat().arrows) {
    auto [na, ua] = parsePair(a.name);
    auto [fg, natl] = parsePair(na);
    auto [fl, gl] = parsePair(fg);
    auto comps = parseNatLabel(natl);
    auto F = parseFunLabel(fl);
    const auto& u = x.cat().arrow(ua);
    // F(u) ; nu_{tgt}
    arr[a.name] = B.compose(F.second.at(ua), comps.at(u.tgt));
  }
  return Mor::functor(s, y, std::move(obj), std::move(arr));
}

Mor curry(const Mor& f, const Obj& z, const Obj& x, const Obj& y) {
  Obj h = internalHom(x, y);
  std::map<std::string, std::string> obj;
  if (z.instance() == Instance::FinSet) {
    for (const auto& ze : z.elems()) {
      std::map<std::string, std::string> t;
      for (const auto& xe : x.elems()) t[xe] = f(pairLabel(ze, xe));
      obj[ze] = mapLabel(t);
    }
    return Mor::fn(z, h, std::move(obj));
  }
  const CatData& Z = z.cat();
  const CatData& X = x.cat();
  for (const auto& ze : Z.objects) {
    std::map<std::string, std::string> onObj, onArr;
    for (const auto& xe : X.objects) onObj[xe] = f(pairLabel(ze, xe));
    for (const auto& u : X.arrows) onArr[u.name] = f.onArrow(pairLabel(Z.identity.at(ze), u.name));
    obj[ze] = funLabel(onObj, onArr);
  }
  std::map<std::string, std::string> arr;
  for (const auto& w : Z.arrows) {
    std::map<std::string, std::string> comps;
    for (const auto& xe : X.objects) comps[xe] = f.onArrow(pairLabel(w.name, X.identity.at(xe)));
    arr[w.name] = pairLabel(pairLabel(obj.at(w.src), obj.at(w.tgt)), natLabel(comps));
  }
  return Mor::functor(z, h, std::move(obj), std::move(arr));
}

Mor uncurry(const Mor& g, const Obj& z, const Obj& x, const Obj& y) {
  Obj s = tensor(z, x);
  std::map<std::string, std::string> obj;
  if (z.instance() == Instance::FinSet) {
    for (const auto& e : s.elems()) {
      auto [ze, xe] = parsePair(e);
      obj[e] = parseMapLabel(g(ze)).at(xe);
    }
    return Mor::fn(s, y, std::move(obj));
  }
  const CatData& B = y.cat();
  const CatData& X = x.cat();
  for (const auto& e : s.cat().objects) {
    auto [ze, xe] = parsePair(e);
    obj[e] = parseFunLabel(g(ze)).first.at(xe);
  }
  std::map<std::string, std::string> arr;
  for (const auto& a : s.cat().arrows) {
    // a = (w, u), w: z->z', u: x->x'
    auto [we, ue] = parsePair(a.name);
    const auto& w = z.cat().arrow(we);
    auto F = parseFunLabel(g(w.src));
    auto comps = parseNatLabel(parsePair(g.onArrow(we)).second);
    const auto& u = X.arrow(ue);
    arr[a.name] = B.compose(F.second.at(ue), comps.at(u.tgt));
  }
  return Mor::functor(s, y, std::move(obj), std::move(arr));
}

Mor homMap(const Mor& pre, const Mor& post) {
  // pre: X' -> X, post: Y -> Y'; result Y^X -> Y'^X'
  Obj src = internalHom(pre.tgt(), post.src());
  Obj tgt = internalHom(pre.src(), post.tgt());
  std::map<std::string, std::string> obj;
  if (src.instance() == Instance::FinSet) {
    for (const auto& fl : src.elems()) {
      auto t = parseMapLabel(fl);
      std::map<std::string, std::string> t2;
      for (const auto& xe : pre.src().elems()) t2[xe] = post(t.at(pre(xe)));
      obj[fl] = mapLabel(t2);
    }
    return Mor::fn(src, tgt, std::move(obj));
  }
  for (const auto& fl : src.cat().objects) {
    auto [onObj, onArr] = parseFunLabel(fl);
    std::map<std::string, std::string> o2, a2;
    for (const auto& xe : pre.src().cat().objects) o2[xe] = post(onObj.at(pre(xe)));
    for (const auto& u : pre.src().cat().arrows)
      a2[u.name] = post.onArrow(onArr.at(pre.onArrow(u.name)));
    obj[fl] = funLabel(o2, a2);
  }
  std::map<std::string, std::string> arr;
  for (const auto& a : src.cat().arrows) {
    auto comps = parseNatLabel(parsePair(a.name).second);
    std::map<std::string, std::string> c2;
    for (const auto& xe : pre.src().cat().objects) c2[xe] = post.onArrow(comps.at(pre(xe)));
    arr[a.name] = pairLabel(pairLabel(obj.at(a.src), obj.at(a.tgt)), natLabel(c2));
  }
  return Mor::functor(src, tgt, std::move(obj), std::move(arr));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

Mor buildMor(const Obj& src, const Obj& tgt,
             const std::function<std::string(const std::string&)>& onObj,
             const std::function<std::string(const std::string&)>& onArr) {
  std::map<std::string, std::string> obj;
  for (const auto& e : src.objectElems()) obj[e] = onObj(e);
  if (src.instance() == Instance::FinSet) return Mor::fn(src, tgt, std::move(obj));
  std::map<std::string, std::string> arr;
  if (!onArr) throw Error(ErrorKind::Internal, "buildMor needs an arrow function for FinCat");
  for (const auto& a : src.cat().arrows) arr[a.name] = onArr(a.name);
  return Mor::functor(src, tgt, std::move(obj), std::move(arr));
}

std::vector<Mor> enumerateMorphisms(const Obj& x, const Obj& y) {
  requireSameInstance(x, y);
  std::vector<Mor> out;
  if (x.instance() == Instance::FinSet) {
    std::map<std::string, std::string> table;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == x.elems().size()) {
        out.push_back(Mor::fn(x, y, table));
        return;
      }
      for (const auto& v : y.elems()) {
        table[x.elems()[i]] = v;
        rec(i + 1);
      }
      table.erase(x.elems()[i]);
    };
    rec(0);
    if (out.size() > bounds().maxCandidates)
      throw Error(ErrorKind::BoundBreach, "too many morphisms to enumerate");
    return out;
  }
  enumFunctorsInto(x.cat(), y.cat(), [&](const auto& onObj, const auto& onArr) {
    out.push_back(Mor::functor(x, y, onObj, onArr));
    if (out.size() > bounds().maxCandidates)
      throw Error(ErrorKind::BoundBreach, "too many functors to enumerate");
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t countMorphisms(const Obj& x, const Obj& y) { return enumerateMorphisms(x, y).size(); }

std::optional<Mor> findIso(const Obj& x, const Obj& y) {
  if (x.instance() != y.instance()) return std::nullopt;
  if (x.instance() == Instance::FinSet) {
    if (x.elems().size() != y.elems().size()) return std::nullopt;
    std::map<std::string, std::string> t;
    for (std::size_t i = 0; i < x.elems().size(); ++i) t[x.elems()[i]] = y.elems()[i];
    return Mor::fn(x, y, std::move(t));
  }
  if (x.cat().objects.size() != y.cat().objects.size() ||
      x.cat().arrows.size() != y.cat().arrows.size())
    return std::nullopt;
  std::optional<Mor> found;
  try {
    enumFunctorsInto(x.cat(), y.cat(), [&](const auto& onObj, const auto& onArr) {
      if (found) return;
      Mor m = Mor::functor(x, y, onObj, onArr);
      if (isIso(m)) found = m;
    });
  } catch (const Error&) {
    return std::nullopt;
  }
  return found;
}

}  // namespace gct
