// Walks through the small examples: the two algorithm round trips, the
// G(4,10) singular locus, the G(3,8) Richardson variety and g[2,4].

#include <iostream>

#include "rankvar/rankvar.hpp"

using namespace rankvar;

int main() {
  RankSet M = make_rank_set(8, {{1, 7}, {2, 6}, {3, 4}, {4, 5}, {6, 8}});
  RichardsonDatum R = rich(M);
  std::cout << "rich(" << render_text(M) << ")\n  = " << render_text(R) << "\n";
  std::cout << "rank of that = " << render_text(rank_of(R)) << "\n\n";

  FlagShape s(7, {2, 4});
  RichardsonDatum S(PartialPermutation(s, {4, 6, 2, 7}), PartialPermutation(s, {2, 7, 3, 5}));
  RankSet N = rank_of(S);
  std::cout << "rank(" << render_text(S) << ")\n  = " << render_text(N) << "\n";
  std::cout << "rich of that = " << render_text(rich(N)) << "\n\n";

  RankSet X = make_rank_set(10, {{1, 6}, {3, 4}, {5, 10}, {7, 8}});
  std::cout << render_text(rank_singular_locus(X), true) << "\n";

  FlagShape g38 = FlagShape::grassmannian(3, 8);
  PartialPermutation u(g38, {4, 6, 8});
  std::cout << "hook components of X_(4,6,8):";
  for (const auto& w : schubert_singular_grassmannian(u)) std::cout << "  (" << render_text(w) << ")";
  RankSet Y = rank_of(RichardsonDatum(u, u));
  std::cout << "\nR(u,u) has rank set " << render_paper(Y) << " with " << tfixed_points(Y).size()
            << " T-fixed points, " << smooth_tfixed_points(Y).size() << " of them smooth\n\n";

  RankSet Z = make_rank_set(12, {{1, 5}, {2, 6}, {3, 7}, {4, 4}, {8, 10}, {9, 11}, {12, 12}});
  if (auto d = segre_decomposition(Z)) {
    std::cout << render_text(Z) << " is smooth:";
    for (const auto& b : d->blocks) std::cout << " G(" << b.j << "," << b.m << ")";
    std::cout << "\n\n";
  }

  std::cout << "g[2,4] = " << g_poly_direct(2, 4) << "\n";
  std::cout << "point counts of " << render_paper(full_staircase(2, 4)) << " over F_2, F_3: "
            << count_points(full_staircase(2, 4), 2) << ", " << count_points(full_staircase(2, 4), 3) << "\n";
}
