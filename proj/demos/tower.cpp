// Walks the tower: split octonions, the Albert algebra, the Brown algebra,
// then fixed subalgebras of the catalog involutions over F_7.

#include <iostream>

#include "e6kit/e6kit.hpp"

using namespace e6kit;

int main() {
  FieldSpec f = FieldSpec::prime_field(7);
  CDAlgebra C = CDAlgebra::split_octonions(f);
  Vec x = C.element({1, 2, 0, 3, 0, 1, 1, 0}), y = C.element({3, 1, 4, 1, 2, 0, 0, 5});
  std::cout << "q(x) = " << C.qnorm(x) << ", q(y) = " << C.qnorm(y) << ", q(xy) = " << C.qnorm(C.mul(x, y)) << "\n";

  auto J = AlbertAlgebra::split_hermitian(f);
  Vec a = J->diag(2, 3, 4);
  std::cout << "N(diag(2,3,4)) = " << J->norm(a) << ", inverse = " << albert_to_json(*J, J->jinverse(a))["xi"] << "\n";

  InvolutionCatalog cat(f);
  for (const char* d : {"s", "t", "varpi", "s.varpi", "t.varpi"}) {
    const BrownAlgebra& B = cat.brown(false);
    FixedReport r = fixed_subalgebra(B, cat.realize(d, Space::B));
    std::cout << d << ": dim " << r.dimension << " " << brown_fixed_shape(B, r.basis) << "\n";
  }

  for (const auto& s : enumerate(e6_affine(), 2, true, false)) {
    for (int v : s.s) std::cout << v;
    std::cout << " " << s.residual_type() << "\n";
  }
}
