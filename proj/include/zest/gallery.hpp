#pragma once

#include <map>
#include <memory>
#include <string>

#include "zest/category.hpp"

namespace zest {

/// Built-in dataset plus bookkeeping: which source each field came from and
/// the designated objects the cyclic-zesting machinery keys off.
struct GalleryEntry {
  std::string name;
  std::shared_ptr<const CategoryData> cat;
  std::map<std::string, std::string> provenance;  // field -> citation note
  int generator_label = -1;   // generator g of the distinguished cyclic subgroup
  int degree_one_label = -1;  // object pinning q via chi_g
  CycNum zeta;                // fixed square root of q (2N-th root)
};

/// Full-capability pointed braided category C(C, Theta): fusion is the group
/// law, dims are 1, twists are Theta, S_{a,b} = B(a,b)^{-1} with the
/// polarization B(a,b) = Theta(a+b)/(Theta(a)Theta(b)).
CategoryData pointed(const FinAbGroup& c, const std::vector<CycNum>& theta);

/// The pointed subcategory P(N, k) of SU(N)_k: theta_j = zeta_{2N}^{k j (N-j)}.
PointedForm su_pointed(int n, int k);

/// Built-in datasets: "su3_3" (full data), "su4_4" and "su4_2" (partial).
const GalleryEntry& builtin(const std::string& name);
std::vector<std::string> gallery_names();

/// Every present capability field must carry a provenance note.
ValidationReport provenance_lint(const GalleryEntry& entry);

}  // namespace zest
