// Two-point blow-up walkthrough: solve the scale, certify, classify.
#include <iostream>

#include "cytforge/cyt.hpp"
#include "cytforge/skt.hpp"
#include "cytforge/topology.hpp"

int main() {
  using namespace cytforge;
  auto m = std::make_shared<const SurfaceModel>(blowup_cp2(2, Position::General));
  auto b = make_bundle(m, {parse_class(*m, "3H-E1-E2"), parse_class(*m, "H-2E1-E2")});

  auto s = solve_scale(b, b.curvatures[0]);
  if (!s) {
    std::cout << "no scale along omega1\n";
    return 1;
  }
  CohClass F = *s * b.curvatures[0];
  CytCertificate c = verify_cyt(b, F);
  std::cout << "scale " << s->str() << ", F = " << format_class(*m, F) << "\n";
  std::cout << "lambdas " << c.lambdas[0].str() << ", " << c.lambdas[1].str() << "  cyt "
            << (c.verdict ? "yes" : "no") << "\n";
  std::cout << "sum of squares " << verify_skt(b).total.str() << "\n";

  TopologyCertificate t = topology_certificate(b);
  std::cout << "b2(M) = " << (t.tables ? t.tables->betti[2] : -1) << "  label " << t.diffeo_label << "\n";
  return c.verdict && t.classified() ? 0 : 1;
}
