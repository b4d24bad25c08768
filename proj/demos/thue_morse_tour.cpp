// A short walk through the library on the Thue-Morse sequence.

#include "gtm/gtm.hpp"

#include <iostream>

int main() {
  const auto tm = gtm::thue_morse();

  std::cout << "A_5 = ";
  for (auto v : gtm::generate_prefix_morphic(tm, 5)) std::cout << v;
  std::cout << "\n";

  const auto verdict = gtm::classify(tm);
  std::cout << "classify: " << gtm::to_string(verdict.status) << "\n";

  const auto witness = gtm::build_witness(tm, 0, 1, 4);
  std::cout << "stammering witness at m = 4: |U| = " << witness.prefix.size()
            << ", |V| = " << witness.repeated.size() << ", w = " << witness.exponent << "\n";

  const auto dfao = gtm::kernel_explore(tm, 64);
  std::cout << "2-kernel states: " << dfao.states.size() << "\n";

  const auto interval = gtm::eval_series(tm, 0, 1, 2, 15);
  std::cout << "sum a(n) 2^(-n-1) = " << gtm::render_decimal(interval, 15).text << "...\n";

  const auto cf = gtm::eval_cf(tm, 0, 1, 30);
  std::cout << "irrationality exponent estimate (depth 30): "
            << gtm::irrationality_estimate(cf).value << "\n";
}
