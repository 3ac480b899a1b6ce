// Builds K(n, g), cuts it into pieces and prints the certificate next to the
// upper bound, then the face-width of a toroidal grid.
//
//   representativity_demo [n] [g]

#include <cstdlib>
#include <iostream>

#include "reptopo/reptopo.hpp"

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 4;
  const int g = argc > 2 ? std::atoi(argv[2]) : 2;

  try {
    const auto spec = reptopo::FamilySpec::exactly(n, g);
    const auto knot = reptopo::generate(spec);
    std::cout << reptopo::to_string(spec) << " = " << nlohmann::json(knot).dump() << "\n";
    std::cout << "components after smoothing: " << reptopo::trace_components(knot) << "\n";

    for (const auto& piece : reptopo::chain_pieces(knot)) {
      const auto m = reptopo::piece_minima(piece);
      std::cout << "  " << m.id << ": loop_min " << m.loop_min << ", arc_min ";
      if (m.arc_min) std::cout << *m.arc_min << "\n";
      else std::cout << "none\n";
    }
    const auto rep = reptopo::representativity_exact(knot);
    std::cout << "certified r >= " << rep.lower << ", r <= " << rep.upper << " (" << reptopo::to_string(rep.upper_witness)
              << ")";
    if (rep.exact) std::cout << ", so r(F, K) = " << *rep.exact;
    std::cout << "\n";
  } catch (const reptopo::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  // 5x5 grid on the torus: darts 4v..4v+3 point east, north, west, south.
  const int k = 5;
  std::vector<std::vector<int>> rotations;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < k * k; ++v) rotations.push_back({4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3});
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int v = i * k + j;
      edges.push_back({4 * v, 4 * (i * k + (j + 1) % k) + 2});
      edges.push_back({4 * v + 1, 4 * (((i + 1) % k) * k + j) + 3});
    }
  }
  const reptopo::RotationSystem grid(rotations, edges);
  std::cout << "5x5 toroidal grid: genus " << reptopo::genus(grid) << ", face-width "
            << *reptopo::face_width(grid).width << "\n";
}
