// Two operator words that agree on the 2x2-grid crystal but not in B(infinity),
// so no crystal morphism B(infinity) -> B_C can send the highest weight element to u_C.

#include "crystal_grid/crystal_grid.hpp"

#include <iostream>

using namespace crystal_grid;

static std::string show(const std::vector<int>& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) out += (k ? "," : "") + std::to_string(x[k]);
  return out;
}

int main() {
  const auto [a, b] = g22::counterexample_words();
  const auto ca = g22::apply_word(a, g22::u_C).result;
  const auto cb = g22::apply_word(b, g22::u_C).result;
  std::cout << "wA = " << a.to_string() << "\nwB = " << b.to_string() << "\n";
  std::cout << "in B_C:      wA(u_C) = " << (ca ? ca->to_string() : "0") << ", wB(u_C) = " << (cb ? cb->to_string() : "0")
            << "\n";

  const binfty::PolyhedralModel model(GridQuiver({2, 2}).cartan(), binfty::IotaSequence({1, 2, 3, 4}, 40));
  const auto cmp = binfty::words_distinct(model, a, b);
  auto trimmed = [](std::vector<int> x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
    return x;
  };
  std::cout << "in B(inf):   xA = (" << show(trimmed(cmp.xA)) << "), xB = (" << show(trimmed(cmp.xB)) << ")\n";
  std::cout << (cmp.distinct && ca == cb ? "the words separate B(inf) but not B_C\n" : "unexpected: no separation\n");
  return cmp.distinct && ca == cb ? 0 : 1;
}
