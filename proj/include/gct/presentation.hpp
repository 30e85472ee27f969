#pragma once

#include "gct/finite.hpp"

namespace gct {

// Finite presentation of a category: a generating graph plus relations between
// parallel generator words. Solved by shortlex rewriting with completion; the
// solver fails loudly when hom-sets do not stabilize within the word-length
// bound instead of hanging.
struct Presentation {
  std::vector<std::string> objects;  // sorted labels
  struct Gen {
    std::string name, src, tgt;
  };
  std::vector<Gen> gens;  // sorted by name; index is the letter id
  struct Word {
    std::string src, tgt;      // endpoints (needed for the empty word)
    std::vector<int> letters;  // generator ids; empty means identity at src
  };
  std::vector<std::pair<Word, Word>> relations;

  int genId(const std::string& name) const;
  void sortGens();
};

struct SolvedPresentation {
  Presentation pres;
  Obj category;
  std::vector<std::string> genArrow;  // generator id -> arrow name in `category`

  // Arrow name of a word, folded through the solved composition table.
  std::string arrowOfWord(const Presentation::Word& w) const;
  static std::string identityName(const std::string& obj);
  static std::string wordName(const std::vector<std::string>& genNames);

  // Representative letters of an apex arrow (empty for identities).
  std::vector<int> lettersOf(const std::string& arrowName) const;
};

// Relations of colimit presentations always have the composition-table shape
// (a pair of generators against at most one); those are solved by congruence
// closure over a partial composition table. Anything longer falls back to a
// shortlex Knuth-Bendix completion. Throws Error(NonStabilizing) when
// saturation or completion exceeds the configured bounds; the message names
// the offending hom-pair when known.
SolvedPresentation solvePresentation(Presentation p);

}  // namespace gct
