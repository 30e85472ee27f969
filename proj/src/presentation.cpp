#include "gct/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <functional>

namespace gct {

int Presentation::genId(const std::string& name) const {
  auto it = std::lower_bound(gens.begin(), gens.end(), name,
                             [](const Gen& g, const std::string& n) { return g.name < n; });
  if (it == gens.end() || it->name != name)
    throw Error(ErrorKind::Internal, "unknown generator: " + name);
  return static_cast<int>(it - gens.begin());
}

void Presentation::sortGens() {
  std::sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) { return a.name < b.name; });
}

std::string SolvedPresentation::identityName(const std::string& obj) {
  return tupleLabel({"e", obj});
}

std::string SolvedPresentation::wordName(const std::vector<std::string>& genNames) {
  std::vector<std::string> parts = {"w"};
  parts.insert(parts.end(), genNames.begin(), genNames.end());
  return tupleLabel(parts);
}

std::string SolvedPresentation::arrowOfWord(const Presentation::Word& w) const {
  std::string cur = identityName(w.src);
  for (int id : w.letters) cur = category.cat().compose(cur, genArrow[id]);
  return cur;
}

std::vector<int> SolvedPresentation::lettersOf(const std::string& arrowName) const {
  auto parts = parseTuple(arrowName);
  if (parts.empty()) throw Error(ErrorKind::Internal, "bad arrow name");
  std::vector<int> letters;
  if (parts[0] == "e") return letters;
  for (std::size_t i = 1; i < parts.size(); ++i) letters.push_back(pres.genId(parts[i]));
  return letters;
}

// ---------------------------------------------------------------------------
// Congruence-closure saturation for composition-table presentations
// ---------------------------------------------------------------------------

namespace {

bool shortlexLess(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class Saturator {
public:
  explicit Saturator(const Presentation& p) : p_(p) {}

  bool applicable() const {
    for (const auto& [a, b] : p_.relations) {
      std::size_t la = a.letters.size(), lb = b.letters.size();
      if (la < lb) std::swap(la, lb);
      if (la > 2 || (la == 2 && lb == 2)) return false;
    }
    return true;
  }

  SolvedPresentation run() {
    for (const auto& o : p_.objects) {
      idSym_[o] = newSym(o, o, {}, true);
    }
    genSym_.resize(p_.gens.size());
    for (std::size_t g = 0; g < p_.gens.size(); ++g)
      genSym_[g] = newSym(p_.gens[g].src, p_.gens[g].tgt, {static_cast<int>(g)}, false);
    for (const auto& [a0, b0] : p_.relations) {
      const auto& a = a0.letters.size() >= b0.letters.size() ? a0 : b0;
      const auto& b = a0.letters.size() >= b0.letters.size() ? b0 : a0;
      int rhs = b.letters.empty() ? idSym_.at(b.src) : genSym_[b.letters[0]];
      if (a.letters.size() <= 1) {
        int lhs = a.letters.empty() ? idSym_.at(a.src) : genSym_[a.letters[0]];
        merge(lhs, rhs);
      } else {
        define(genSym_[a.letters[0]], genSym_[a.letters[1]], rhs);
      }
    }
    fixpoint();
    return extract();
  }

private:
  struct Sym {
    std::string src, tgt;
    std::vector<int> rep;  // generator word; empty = identity
    bool isId;
  };

  static std::uint64_t keyOf(int x, int y) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) |
           static_cast<std::uint32_t>(y);
  }

  const Presentation& p_;
  std::vector<Sym> syms_;
  std::vector<int> parent_;
  std::map<std::string, int> idSym_;
  std::vector<int> genSym_;
  std::unordered_map<std::uint64_t, int> table_;
  std::vector<std::vector<std::uint64_t>> occurs_;  // symbol -> keys it appears in
  std::deque<std::uint64_t> dirty_;                 // keys to revisit for associativity

  int newSym(const std::string& src, const std::string& tgt, std::vector<int> rep, bool isId) {
    int id = static_cast<int>(syms_.size());
    syms_.push_back({src, tgt, std::move(rep), isId});
    parent_.push_back(id);
    occurs_.push_back({});
    return id;
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool repBetter(int a, int b) {  // is a's rep a better root choice than b's
    if (syms_[a].rep.size() != syms_[b].rep.size())
      return syms_[a].rep.size() < syms_[b].rep.size();
    if (syms_[a].rep != syms_[b].rep) return syms_[a].rep < syms_[b].rep;
    return a < b;
  }

  int lookup(int x, int y) {
    if (syms_[x].isId) return y;
    if (syms_[y].isId) return x;
    auto it = table_.find(keyOf(x, y));
    return it == table_.end() ? -1 : find(it->second);
  }

  void define(int x, int y, int v) {
    x = find(x);
    y = find(y);
    v = find(v);
    if (syms_[x].isId) {
      merge(y, v);
      return;
    }
    if (syms_[y].isId) {
      merge(x, v);
      return;
    }
    auto [it, inserted] = table_.try_emplace(keyOf(x, y), v);
    if (!inserted) {
      merge(it->second, v);
      return;
    }
    occurs_[x].push_back(keyOf(x, y));
    occurs_[y].push_back(keyOf(x, y));
    occurs_[v].push_back(keyOf(x, y));
    dirty_.push_back(keyOf(x, y));
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (syms_[a].src != syms_[b].src || syms_[a].tgt != syms_[b].tgt)
      throw Error(ErrorKind::Internal, "congruence merges non-parallel morphisms");
    int root = repBetter(a, b) ? a : b;
    int loser = root == a ? b : a;
    parent_[loser] = root;
    syms_[root].isId = syms_[root].isId || syms_[loser].isId;
    // re-normalize every table entry touching the loser
    std::vector<std::uint64_t> moved;
    moved.swap(occurs_[loser]);
    for (std::uint64_t key : moved) {
      auto it = table_.find(key);
      if (it == table_.end()) continue;
      int x = static_cast<int>(key >> 32);
      int y = static_cast<int>(key & 0xffffffffu);
      if (find(x) == x && find(y) == y && x != loser && y != loser) {
        // only the value uses the loser; normalize in place
        if (find(it->second) != it->second) it->second = find(it->second);
        occurs_[find(it->second)].push_back(key);
        dirty_.push_back(key);
        continue;
      }
      int v = find(it->second);
      table_.erase(it);
      define(x, y, v);  // reinserts under normalized key (may merge further)
    }
  }

  bool dirtyPass() {
    bool changed = false;
    std::size_t steps = 0;
    while (!dirty_.empty()) {
      if (++steps > 20000000)
        throw Error(ErrorKind::NonStabilizing, "saturation did not converge (step bound)");
      std::uint64_t key = dirty_.front();
      dirty_.pop_front();
      auto it = table_.find(key);
      if (it == table_.end()) continue;
      const int x0 = static_cast<int>(key >> 32);
      const int y0 = static_cast<int>(key & 0xffffffffu);
      if (find(x0) != x0 || find(y0) != y0) continue;  // stale; reinserted on merge
      // triples with this entry on the left: (x y) z against x (y z)
      std::vector<std::uint64_t> around = occurs_[y0];
      for (std::uint64_t k2 : around) {
        int x = find(x0), y = find(y0);
        if (x != x0 || y != y0) break;  // merged away; the new key is queued
        auto it2 = table_.find(k2);
        if (it2 == table_.end()) continue;
        int a = static_cast<int>(k2 >> 32);
        int z = static_cast<int>(k2 & 0xffffffffu);
        if (find(a) != y || find(z) != z) continue;
        int u = lookup(x, y);
        int v = find(it2->second);
        int uz = lookup(u, z);
        int xv = lookup(x, v);
        if (uz < 0 && xv < 0) continue;
        if (uz < 0)
          define(u, z, xv);
        else if (xv < 0)
          define(x, v, uz);
        else if (uz != xv)
          merge(uz, xv);
        changed = true;
      }
      if (find(x0) != x0 || find(y0) != y0 || !table_.count(key)) continue;
      // triples with this entry on the right: w (x y) against (w x) y
      around = occurs_[x0];
      for (std::uint64_t k2 : around) {
        int x = find(x0), y = find(y0);
        if (x != x0 || y != y0) break;
        auto it2 = table_.find(k2);
        if (it2 == table_.end()) continue;
        int w = static_cast<int>(k2 >> 32);
        int b = static_cast<int>(k2 & 0xffffffffu);
        if (find(b) != x || find(w) != w) continue;
        int u = lookup(x, y);
        int q = find(it2->second);
        int qy = lookup(q, y);
        int wu = lookup(w, u);
        if (qy < 0 && wu < 0) continue;
        if (qy < 0)
          define(q, y, wu);
        else if (wu < 0)
          define(w, u, qy);
        else if (qy != wu)
          merge(qy, wu);
        changed = true;
      }
    }
    return changed;
  }

  // Complete associativity pass over a snapshot, indexed by the middle
  // symbol. Run after the table stabilizes: at a fixpoint with a total table
  // this verifies every triple.
  bool fullPass() {
    bool changed = false;
    std::vector<std::pair<std::pair<int, int>, int>> snapshot;
    snapshot.reserve(table_.size());
    for (const auto& [key, val] : table_)
      snapshot.push_back({{static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu)},
                          val});
    std::map<int, std::vector<std::pair<int, int>>> byFirst;
    for (const auto& [key, val] : snapshot)
      byFirst[find(key.first)].push_back({key.second, val});
    for (const auto& [key, val] : snapshot) {
      int x = find(key.first), y = find(key.second);
      if (syms_[x].isId || syms_[y].isId) continue;
      int u = lookup(x, y);
      if (u < 0) continue;
      auto it = byFirst.find(y);
      if (it == byFirst.end()) continue;
      for (const auto& [z0, v0] : it->second) {
        int z = find(z0);
        int v = lookup(y, z);
        if (v < 0) continue;
        int uz = lookup(find(u), z);
        int xv = lookup(find(x), find(v));
        if (uz < 0 && xv < 0) continue;
        if (uz < 0) {
          define(u, z, xv);
          changed = true;
        } else if (xv < 0) {
          define(x, v, uz);
          changed = true;
        } else if (uz != xv) {
          merge(uz, xv);
          changed = true;
        }
      }
    }
    return changed;
  }

  std::vector<int> rootsSorted() {
    std::vector<int> roots;
    for (int i = 0; i < static_cast<int>(syms_.size()); ++i)
      if (find(i) == i && !syms_[i].isId) roots.push_back(i);
    std::sort(roots.begin(), roots.end(), [&](int a, int b) { return repBetter(a, b); });
    return roots;
  }

  void fixpoint() {
    const std::size_t maxSymbols = 200000;
    for (std::size_t round = 0;; ++round) {
      if (round > 4096)
        throw Error(ErrorKind::NonStabilizing, "presentation does not saturate (round bound)");
      for (;;) {
        dirtyPass();
        if (!fullPass()) break;
      }
      std::map<std::pair<std::string, std::string>, std::size_t> homCount;
      for (int i = 0; i < static_cast<int>(syms_.size()); ++i)
        if (find(i) == i && !syms_[i].isId) ++homCount[{syms_[i].src, syms_[i].tgt}];
      for (auto it = homCount.begin(); it != homCount.end(); ++it)
        if (it->second > bounds().maxHomSize)
          throw Error(ErrorKind::NonStabilizing,
                      "hom-set (" + it->first.first + " -> " + it->first.second +
                          ") exceeds size bound");
      bool defined = false;
      std::vector<int> roots = rootsSorted();
      std::map<std::string, std::vector<int>> bySrc;
      for (int r : roots) bySrc[syms_[r].src].push_back(r);
      for (int x : roots) {
        auto it = bySrc.find(syms_[x].tgt);
        if (it == bySrc.end()) continue;
        for (int y : it->second) {
          if (find(x) != x || find(y) != y) continue;
          if (lookup(x, y) >= 0) continue;
          if (syms_.size() >= maxSymbols)
            throw Error(ErrorKind::NonStabilizing,
                        "presentation does not saturate (symbol bound)");
          std::vector<int> rep = syms_[x].rep;
          rep.insert(rep.end(), syms_[y].rep.begin(), syms_[y].rep.end());
          if (rep.size() >= bounds().maxWordLength)
            throw Error(ErrorKind::NonStabilizing,
                        "hom-set (" + syms_[x].src + " -> " + syms_[y].tgt +
                            ") did not stabilize within word-length bound");
          define(x, y, newSym(syms_[x].src, syms_[y].tgt, std::move(rep), false));
          defined = true;
        }
      }
      if (!defined) break;
    }
  }

  SolvedPresentation extract() {
    CatData c;
    c.objects = p_.objects;
    for (const auto& o : p_.objects) {
      std::string id = SolvedPresentation::identityName(o);
      c.arrows.push_back({id, o, o});
      c.identity[o] = id;
    }
    auto nameOf = [&](int root) {
      if (syms_[root].isId) return SolvedPresentation::identityName(syms_[root].src);
      std::vector<std::string> names;
      for (int g : syms_[root].rep) names.push_back(p_.gens[g].name);
      return SolvedPresentation::wordName(names);
    };
    std::vector<int> roots = rootsSorted();
    for (int r : roots) c.arrows.push_back({nameOf(r), syms_[r].src, syms_[r].tgt});
    c.sortAndIndex();
    for (int x : roots)
      for (int y : roots) {
        if (syms_[x].tgt != syms_[y].src) continue;
        c.comp[{nameOf(x), nameOf(y)}] = nameOf(lookup(x, y));
      }
    for (int r : roots) {
      c.comp[{SolvedPresentation::identityName(syms_[r].src), nameOf(r)}] = nameOf(r);
      c.comp[{nameOf(r), SolvedPresentation::identityName(syms_[r].tgt)}] = nameOf(r);
    }
    for (const auto& o : p_.objects)
      c.comp[{SolvedPresentation::identityName(o), SolvedPresentation::identityName(o)}] =
          SolvedPresentation::identityName(o);

    SolvedPresentation out;
    out.pres = p_;
    out.category = Obj::cat(std::move(c));
    for (std::size_t g = 0; g < p_.gens.size(); ++g)
      out.genArrow.push_back(nameOf(find(genSym_[g])));
    return out;
  }
};

// ---------------------------------------------------------------------------
// Generic shortlex Knuth-Bendix fallback
// ---------------------------------------------------------------------------

struct Rewriter {
  const Presentation& pres;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rules;

  bool reduceOnce(std::vector<int>& w) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& [lhs, rhs] : rules) {
        if (lhs.size() > w.size() - i) continue;
        if (std::equal(lhs.begin(), lhs.end(), w.begin() + i)) {
          std::vector<int> out(w.begin(), w.begin() + i);
          out.insert(out.end(), rhs.begin(), rhs.end());
          out.insert(out.end(), w.begin() + i + lhs.size(), w.end());
          w = std::move(out);
          return true;
        }
      }
    return false;
  }

  std::vector<int> reduce(std::vector<int> w) const {
    while (reduceOnce(w)) {
    }
    return w;
  }

  void addRule(std::vector<int> a, std::vector<int> b, std::deque<std::size_t>& fresh) {
    a = reduce(std::move(a));
    b = reduce(std::move(b));
    if (a == b) return;
    if (shortlexLess(a, b)) std::swap(a, b);
    if (a.size() > bounds().maxWordLength)
      throw Error(ErrorKind::NonStabilizing, "rewriting rule exceeds word-length bound");
    rules.push_back({std::move(a), std::move(b)});
    if (rules.size() > bounds().maxRules)
      throw Error(ErrorKind::NonStabilizing, "rewriting system exceeds rule bound");
    fresh.push_back(rules.size() - 1);
  }

  void complete() {
    std::deque<std::size_t> fresh;
    for (std::size_t i = 0; i < rules.size(); ++i) fresh.push_back(i);
    std::size_t steps = 0;
    while (!fresh.empty()) {
      if (++steps > 200000)
        throw Error(ErrorKind::NonStabilizing, "completion did not terminate within bound");
      std::size_t ri = fresh.front();
      fresh.pop_front();
      std::size_t count = rules.size();
      for (std::size_t rj = 0; rj < count; ++rj) {
        const std::pair<std::size_t, std::size_t> orders[2] = {{ri, rj}, {rj, ri}};
        for (auto [i, j] : orders) {
          const auto l1 = rules[i].first, r1 = rules[i].second;
          const auto l2 = rules[j].first, r2 = rules[j].second;
          for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
            if (!std::equal(l2.begin(), l2.begin() + k, l1.end() - k)) continue;
            std::vector<int> left = r1;
            left.insert(left.end(), l2.begin() + k, l2.end());
            std::vector<int> right(l1.begin(), l1.end() - k);
            right.insert(right.end(), r2.begin(), r2.end());
            addRule(std::move(left), std::move(right), fresh);
          }
          if (i != j && l2.size() < l1.size()) {
            for (std::size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
              if (!std::equal(l2.begin(), l2.end(), l1.begin() + pos)) continue;
              std::vector<int> right(l1.begin(), l1.begin() + pos);
              right.insert(right.end(), r2.begin(), r2.end());
              right.insert(right.end(), l1.begin() + pos + l2.size(), l1.end());
              addRule(r1, std::move(right), fresh);
            }
          }
        }
      }
    }
  }
};

SolvedPresentation solveByRewriting(const Presentation& p) {
  Rewriter rw{p, {}};
  {
    std::deque<std::size_t> fresh;
    for (const auto& [a, b] : p.relations) rw.addRule(a.letters, b.letters, fresh);
  }
  rw.complete();

  std::vector<std::vector<int>> bySrc(p.objects.size());
  std::map<std::string, std::size_t> objIndex;
  for (std::size_t i = 0; i < p.objects.size(); ++i) objIndex[p.objects[i]] = i;
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    bySrc[objIndex.at(p.gens[g].src)].push_back(static_cast<int>(g));

  auto endsWithLhs = [&](const std::vector<int>& w) {
    for (const auto& [lhs, rhs] : rw.rules) {
      if (lhs.size() > w.size()) continue;
      if (std::equal(lhs.begin(), lhs.end(), w.end() - lhs.size())) return true;
    }
    return false;
  };

  struct Path {
    std::string src, tgt;
    std::vector<int> letters;
  };
  std::vector<Path> irreducible;
  std::deque<Path> queue;
  for (const auto& o : p.objects) queue.push_back({o, o, {}});
  std::map<std::pair<std::string, std::string>, std::size_t> homCount;
  while (!queue.empty()) {
    Path cur = queue.front();
    queue.pop_front();
    if (!cur.letters.empty()) irreducible.push_back(cur);
    for (int g : bySrc[objIndex.at(cur.tgt)]) {
      Path next{cur.src, p.gens[g].tgt, cur.letters};
      next.letters.push_back(g);
      if (endsWithLhs(next.letters)) continue;
      if (next.letters.size() >= bounds().maxWordLength)
        throw Error(ErrorKind::NonStabilizing, "hom-set (" + next.src + " -> " + next.tgt +
                                                   ") did not stabilize within word-length bound");
      std::size_t& n = homCount[{next.src, next.tgt}];
      if (++n > bounds().maxHomSize)
        throw Error(ErrorKind::NonStabilizing,
                    "hom-set (" + next.src + " -> " + next.tgt + ") exceeds size bound");
      queue.push_back(std::move(next));
    }
  }

  CatData c;
  c.objects = p.objects;
  for (const auto& o : p.objects) {
    std::string id = SolvedPresentation::identityName(o);
    c.arrows.push_back({id, o, o});
    c.identity[o] = id;
  }
  auto nameOf = [&](const std::vector<int>& letters, const std::string& srcObj) {
    if (letters.empty()) return SolvedPresentation::identityName(srcObj);
    std::vector<std::string> names;
    for (int id : letters) names.push_back(p.gens[id].name);
    return SolvedPresentation::wordName(names);
  };
  for (const auto& path : irreducible)
    c.arrows.push_back({nameOf(path.letters, path.src), path.src, path.tgt});
  c.sortAndIndex();
  std::map<std::string, std::vector<int>> lettersByName;
  for (const auto& a : c.arrows) {
    auto parts = parseTuple(a.name);
    std::vector<int> ls;
    if (parts[0] == "w")
      for (std::size_t i = 1; i < parts.size(); ++i) ls.push_back(p.genId(parts[i]));
    lettersByName[a.name] = ls;
  }
  for (const auto& f : c.arrows)
    for (const auto& g : c.arrows) {
      if (f.tgt != g.src) continue;
      std::vector<int> w = lettersByName.at(f.name);
      const auto& gl = lettersByName.at(g.name);
      w.insert(w.end(), gl.begin(), gl.end());
      w = rw.reduce(std::move(w));
      c.comp[{f.name, g.name}] = nameOf(w, f.src);
    }

  SolvedPresentation out;
  out.pres = p;
  out.category = Obj::cat(std::move(c));
  for (std::size_t g = 0; g < p.gens.size(); ++g)
    out.genArrow.push_back(nameOf(rw.reduce({static_cast<int>(g)}), p.gens[g].src));
  return out;
}

}  // namespace

SolvedPresentation solvePresentation(Presentation p) {
  p.sortGens();
  std::sort(p.objects.begin(), p.objects.end());
  Saturator sat(p);
  if (sat.applicable()) return sat.run();
  return solveByRewriting(p);
}

}  // namespace gct
