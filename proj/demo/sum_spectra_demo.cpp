// Prints the possible spectra of A + B for A ~ diag(4,1,-5), B ~ diag(2,1,-3)
// in su(2,1), in human-readable form.

#include "orbitsum/orbitsum.hpp"

#include <iostream>

namespace {

void print_constraint(const orbitsum::RealFormData& form, const orbitsum::Constraint& c, const char* rel)
{
  bool first = true;
  for (std::size_t i = 0; i < c.normal.size(); ++i) {
    const auto& k = c.normal[i];
    if (sgn(k) == 0) continue;
    if (!first) std::cout << (sgn(k) > 0 ? " + " : " - ");
    else if (sgn(k) < 0) std::cout << "-";
    const orbitsum::Rational mag = abs(k);
    if (mag != 1) std::cout << orbitsum::to_display(mag);
    std::cout << form.coordinate_name(i);
    first = false;
  }
  std::cout << " " << rel << " " << orbitsum::to_display(c.offset) << "\n";
}

}  // namespace

int main()
{
  using namespace orbitsum;
  const RealFormData form = su(2, 1);
  const OrbitSumResult r = sum_spectra(form, Spectrum{to_vec({4, 1, -5})}, Spectrum{to_vec({2, 1, -3})});

  std::cout << form.designator() << ": spectra of A + B\n";
  for (const auto& c : r.s_ab.inequalities) print_constraint(form, c, "≥");
  for (const auto& c : r.s_ab.equalities) print_constraint(form, c, "=");

  std::cout << "vertices:";
  for (const auto& v : r.vertices.vertices) {
    std::cout << " (";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << to_display(v[i]);
    std::cout << ")";
  }
  std::cout << "\nrays:";
  for (const auto& v : r.vertices.rays) {
    std::cout << " (";
    for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << to_display(v[i]);
    std::cout << ")";
  }
  std::cout << "\nvertex criterion: " << (check_vertex_criterion(r).holds ? "holds" : "FAILS")
            << "\nrecession law: " << (check_recession_law(r).holds ? "holds" : "FAILS") << "\n";
}
