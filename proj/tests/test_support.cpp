#include "test_support.hpp"

#include <stdexcept>
#include <vector>

#include "zetascan/zeta.hpp"

namespace zetascan_test {

const zetascan::ZeroTable& oracle_zeros_100() {
  static const zetascan::ZeroTable table = [] {
    zetascan::ZeroSearchResult r = zetascan::find_zeros(237.0);
    if (!r.count_consistent || r.zeros.size() < 100)
      throw std::runtime_error("oracle zero search failed its count check");
    r.zeros.resize(100);
    return zetascan::make_zero_table(std::move(r.zeros));
  }();
  return table;
}

zetascan::ZeroTable oracle_zeros(std::size_t count) {
  const auto& full = oracle_zeros_100().gammas;
  if (count > full.size()) throw std::runtime_error("not enough oracle zeros");
  return zetascan::make_zero_table(
      std::vector<double>(full.begin(), full.begin() + count));
}

}  // namespace zetascan_test
