// Check a coloring, solve a variant exactly, run a construction.

#include <iostream>

#include "nbcolor/construct.hpp"
#include "nbcolor/exact.hpp"
#include "nbcolor/gadgets.hpp"
#include "nbcolor/generators.hpp"

int main() {
  using namespace nbcolor;

  Gadget fritsch = generate("fritsch");
  SolveResult r = chromatic_number(fritsch.graph, variant::pUMo);
  std::cout << "fritsch pUMo = " << *r.value << " (" << to_string(r.status) << ")\n";

  PlaneEmbedding e = random_planar(12, 7);
  Coloring c = color_pcfo(e);
  std::cout << "random triangulation: pCFo construction uses " << c.max_color() << " colors, "
            << (is_valid(e.graph(), c, variant::pCFo) ? "valid" : "invalid") << '\n';
  std::cout << "exact pCFo of the same graph = " << *chromatic_number(e.graph(), variant::pCFo).value << '\n';
}
