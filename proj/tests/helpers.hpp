#pragma once

#include <string>
#include <vector>

#include "gct/finite.hpp"

namespace gct::testing {

// The ordinal [n] as a finite category: objects "0".."n", one arrow i->j for
// i <= j, named aij.
inline Obj ordinal(int n) {
  CatData c;
  for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::string name = "a" + std::to_string(i) + std::to_string(j);
      c.arrows.push_back({name, std::to_string(i), std::to_string(j)});
      if (i == j) c.identity[std::to_string(i)] = name;
    }
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k)
        c.comp[{"a" + std::to_string(i) + std::to_string(j),
                "a" + std::to_string(j) + std::to_string(k)}] =
            "a" + std::to_string(i) + std::to_string(k);
  return Obj::cat(std::move(c));
}

// Indiscrete category on n objects: exactly one arrow between any two objects.
inline Obj indiscrete(int n) {
  CatData c;
  for (int i = 0; i < n; ++i) c.objects.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string name = "m" + std::to_string(i) + std::to_string(j);
      c.arrows.push_back({name, std::to_string(i), std::to_string(j)});
      if (i == j) c.identity[std::to_string(i)] = name;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        c.comp[{"m" + std::to_string(i) + std::to_string(j),
                "m" + std::to_string(j) + std::to_string(k)}] =
            "m" + std::to_string(i) + std::to_string(k);
  return Obj::cat(std::move(c));
}

inline Obj fset(std::vector<std::string> elems) { return Obj::set(std::move(elems)); }

}  // namespace gct::testing
