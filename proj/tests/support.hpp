#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <vector>
#include <string>

#include "linarr/error.hpp"
#include "linarr/nomenclature.hpp"

namespace fixtures {

inline const char* const kSevenLines = "1^+1 2^-1 3^+1 7^+1 6^+1 4^-1 5^+1";
inline const char* const kTwinFirst = "1^+1 2^-1 5^+1 3^+1 4^-1 6^+1";
inline const char* const kTwinSecond = "1^+1 2^-1 5^+1 3^+1 6^+1 4^-1";

// Every nomenclature of size n, leading signs in either case.
inline std::vector<linarr::Nomenclature> all_nomenclatures(int n) {
  std::vector<linarr::Nomenclature> out;
  linarr::Permutation pi(n);
  for (int k = 0; k < n; ++k) pi[k] = k + 1;
  do {
    linarr::Triple lead = linarr::make_triple(pi[0], pi[1], pi[2]);
    for (int lead_case = 0; lead_case < 2; ++lead_case)
      for (int mask = 0; mask < (1 << (n - 3)); ++mask) {
        std::vector<linarr::NomenclatureEntry> e;
        for (int k = 0; k < n; ++k) {
          bool plus = k < 3 ? ((pi[k] == lead[1]) == (lead_case == 1)) : ((mask >> (k - 3)) & 1);
          e.push_back({pi[k], plus ? linarr::Sign::Plus : linarr::Sign::Minus});
        }
        out.emplace_back(std::move(e));
      }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

}  // namespace fixtures

inline void expect_code(const std::function<void()>& f, const std::string& code) {
  try {
    f();
    ADD_FAILURE() << "expected error " << code;
  } catch (const linarr::Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}
