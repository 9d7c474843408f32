#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bimod/mtc.hpp"

namespace bimod {

struct CatalogEntry {
  std::string name;
  std::shared_ptr<const MtcData> data;
  std::string provenance;
};

/// Built-in categories: trivial, vec_z<n> (2 <= n <= 12), fibonacci, ising,
/// toric_code, su2_<k> (1 <= k <= 4). Throws UnknownCatalogName.
CatalogEntry catalog(const std::string& name, double tol = kDefaultTol);

/// Names exercised by the test and acceptance suites.
std::vector<std::string> catalog_names();

/// Unvalidated builders, exposed for tests that perturb the data.
MtcData make_fibonacci();
MtcData make_ising();
MtcData make_toric_code();
MtcData make_vec_zn(int n);
MtcData make_su2k(int k);

}  // namespace bimod
