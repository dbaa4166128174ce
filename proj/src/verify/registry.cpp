#include <algorithm>
#include <stdexcept>

#include "cases.hpp"

namespace stcalc::verify {

namespace {

std::vector<TheoremCase> build() {
  std::vector<TheoremCase> all;
  cases::register_intro(all);
  cases::register_derivative(all);
  cases::register_operator(all);
  cases::register_trinomial(all);
  cases::register_rogers(all);
  cases::register_polytopic(all);
  cases::register_generating(all);
  cases::register_products(all);
  std::sort(all.begin(), all.end(), [](const TheoremCase& a, const TheoremCase& b) { return a.id < b.id; });
  auto dup = std::adjacent_find(all.begin(), all.end(),
                                [](const TheoremCase& a, const TheoremCase& b) { return a.id == b.id; });
  if (dup != all.end()) throw std::logic_error("duplicate case id " + dup->id);
  return all;
}

}  // namespace

const std::vector<TheoremCase>& registry() {
  static const std::vector<TheoremCase> cases = build();
  return cases;
}

const TheoremCase* find_case(const std::string& id) {
  const auto& all = registry();
  auto it = std::lower_bound(all.begin(), all.end(), id,
                             [](const TheoremCase& c, const std::string& key) { return c.id < key; });
  return it != all.end() && it->id == id ? &*it : nullptr;
}

}  // namespace stcalc::verify
