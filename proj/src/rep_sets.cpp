#include "sfvs/rep_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace sfvs {

RepresentativeResult representative_subset(const MatroidRep& rep, int d1, int d2,
                                           std::vector<Triple> family) {
  if (rep.matrix.rows() != d1 + d2)
    throw std::invalid_argument("representative_subset: block sizes do not match rows");
  std::stable_sort(family.begin(), family.end(),
                   [](const Triple& a, const Triple& b) { return a.origin < b.origin; });
  const std::size_t dim = static_cast<std::size_t>(d1) * (d1 > 0 ? d1 - 1 : 0) / 2 * d2;
  IncrementalBasis basis(dim);
  RepresentativeResult out;
  for (const Triple& t : family) {
    auto a = rep.matrix.column(rep.column_of(t.first));
    auto b = rep.matrix.column(rep.column_of(t.second));
    auto c = rep.matrix.column(rep.column_of(t.hat));
    std::vector<Fp> w = wedge3_coordinates(a, b, c, d1, d2);
    if (std::all_of(w.begin(), w.end(), [](Fp x) { return x.is_zero(); })) {
      ++out.dependent;
      continue;
    }
    if (basis.insert(std::move(w))) out.kept.push_back(t);
  }
  return out;
}

}  // namespace sfvs
