#include "invseq/enumerate.hpp"

namespace invseq {

std::vector<InversionSequence> enumeration_prefixes(int depth) {
  std::vector<InversionSequence> out;
  out.reserve(static_cast<std::size_t>(factorial(depth)));
  for_each_inversion_sequence(
      depth, [&](const InversionSequence& e) { out.push_back(e); });
  return out;
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

int default_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace invseq
