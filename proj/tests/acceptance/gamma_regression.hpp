#pragma once

// Observed c-vectors of Atilde_n on the (p+q)^j (1+pq)^(k-j) line, n = 1..20,
// recorded from a scan of this implementation. Values for n <= 6 match the
// published expansions; the rest are regression data only.

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace regression {

inline nlohmann::json gamma_line_vector(std::size_t n) {
  static const std::vector<std::vector<std::string>> kVectors = {
      /* n=1 */ {"1"},
      /* n=2 */ {"1", "1"},
      /* n=3 */ {"1", "2"},
      /* n=4 */ {"1", "6", "5"},
      /* n=5 */ {"1", "13", "16"},
      /* n=6 */ {"1", "29", "89", "61"},
      /* n=7 */ {"1", "60", "297", "272"},
      /* n=8 */ {"1", "124", "1134", "2396", "1385"},
      /* n=9 */ {"1", "251", "3651", "10841", "7936"},
      /* n=10 */ {"1", "507", "12212", "62372", "101187", "50521"},
      /* n=11 */ {"1", "1018", "38158", "274418", "580013", "353792"},
      /* n=12 */ {"1", "2042", "120587", "1330692", "4661047", "6151666", "2702765"},
      /* n=13 */ {"1", "4089", "369930", "5686570", "26085165", "42783189", "22368256"},
      /* n=14 */ {"1", "8185", "1138419", "25356235", "171711535", "456354999", "508230445", "199360981"},
      /* n=15 */ {"1", "16376", "3456183", "105986800", "935756615", "3105779064", "4161453649", "1903757312"},
      /* n=16 */ {"1", "32760", "10499564", "451694920", "5543958390", "26544674504", "56783677900", "54733245816", "19391512145"},
      /* n=17 */ {"1", "65527", "31695253", "1859310259", "29537038435", "176341150309", "455677824583", "516091588657", "209865342976"},
      /* n=18 */ {"1", "131063", "95675510", "7722957002", "164609156024", "1333176799064", "4894963278602", "8758856581430", "7444968033863", "2404879675441"},
      /* n=19 */ {"1", "262134", "287943972", "31466012130", "861756109578", "8665124831034", "38421255090876", "81036974264238", "79482337109205", "29088885112832"},
      /* n=20 */ {"1", "524278", "866453265", "128745585312", "4625456276994", "60797106154764", "359908814494362", "1067168844346800", "1640974541897853", "1247786170748846", "370371188237525"},
  };
  if (n == 0 || n > kVectors.size()) return nullptr;
  return kVectors[n - 1];
}

}  // namespace regression
