#pragma once

#include <string_view>
#include <vector>

namespace subgrowth {

/// Built-in copies of the graphs shipped under data/.
struct CorpusEntry {
  std::string_view name;
  std::string_view text;
};

inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"c2_free_c2", R"gog(# Cyc(2) * Cyc(2), the infinite dihedral group.
vertex A = Cyc(2);
vertex B = Cyc(2);

edge t A B {
  group Trivial;
  into A: ;
  into B: ;
}

expect mu 0;
)gog"},
      {"free1", R"gog(# Infinite cyclic group: one trivial vertex with one loop.
vertex v = Trivial;
edge f1 v v { group Trivial; left: ; right: ; }

expect mu 0;
)gog"},
      {"free2", R"gog(# Free group of rank 2 as a bouquet of two loops.
vertex v = Trivial;
edge f1 v v { group Trivial; left: ; right: ; }
edge f2 v v { group Trivial; left: ; right: ; }

expect mu 1;
)gog"},
      {"hnn_s3", R"gog(# HNN extension of Sym(3) conjugating one transposition to another.
vertex v = Sym(3);

edge t v v {
  group Cyc(2);
  left: (1 2);
  right: (2 3);
}
)gog"},
      {"modular", R"gog(# Cyc(2) * Cyc(3)
vertex A = Cyc(2);
vertex B = Cyc(3);

edge t A B {
  group Trivial;
  into A: ;
  into B: ;
}

expect mu 1/6;
)gog"},
      {"s3_amalgam_c2", R"gog(# Sym(3) amalgamated with itself over a transposition.
vertex A = Sym(3);
vertex B = Sym(3);

edge c A B {
  group Cyc(2);
  into A: (1 2);
  into B: (1 2);
}
)gog"},
      {"s3_amalgam_c3", R"gog(# Sym(3) amalgamated with itself over its rotation subgroup.
vertex A = Sym(3);
vertex B = Sym(3);

edge c A B {
  group Cyc(3);
  into A: (1 2 3);
  into B: (1 2 3);
}
)gog"},
      {"s4_klein_amalgam", R"gog(# Sym(4) amalgamated with itself over a Klein four-group, the normal one on
# the left and a non-normal one on the right.
vertex X = Sym(4);
vertex Y = Sym(4);

edge k X Y {
  degree 4;
  gens (1 2)(3 4), (1 3)(2 4);
  into X: (1 2)(3 4), (1 3)(2 4);
  into Y: (1 2)(3 4), (1 2);
}

expect mu 1/4;
)gog"},
      {"s4_transposition", R"gog(# Sym(4) amalgamated with itself over a transposition.
vertex A = Sym(4);
vertex B = Sym(4);

edge c A B {
  group Cyc(2);
  into A: (1 2);
  into B: (1 2);
}
)gog"},
      {"triangle_d10", R"gog(# Triangle of groups: two copies of Sym(3) and the dihedral group of order 10.
vertex S1 = Sym(3);
vertex S2 = Sym(3);
vertex D = Dih(5);

edge c3 S1 S2 {
  group Cyc(3);
  into S1: (1 2 3);
  into S2: (1 2 3);
}
edge a S1 D {
  group Cyc(2);
  into S1: (1 2);
  into D: (2 5)(3 4);
}
edge b S2 D {
  group Cyc(2);
  into S2: (1 3);
  into D: (1 3)(4 5);
}

expect mu 3/2;
)gog"},
  };
  return entries;
}

inline const CorpusEntry* find_corpus(std::string_view name) {
  for (const auto& e : corpus())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace subgrowth
