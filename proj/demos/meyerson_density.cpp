// Empirical atomic density of the Meyerson monoid M_{4,6} along a
// power-of-ten checkpoint ladder, against the limit 1 - 1/q = 1/2.

#include <iostream>

#include "acm/density.hpp"

int main() {
  acm::Acm meyerson = acm::Acm::create(4, 6);
  acm::DensityReport report =
      acm::density_report(meyerson, acm::make_checkpoints(1000000));
  acm::write_density_csv(report, std::cout);

  acm::PartitionCounts pc = acm::qr_partition(meyerson, 1000000);
  std::cout << "\nQ/R split at 10^6: " << pc.q_members << " members in Q ("
            << pc.q_atoms << " atoms), " << pc.r_members << " in R (" << pc.r_atoms
            << " atoms + the unit)\n";
  return 0;
}
