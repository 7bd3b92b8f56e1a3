#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "springerstab/numbers.hpp"
#include "springerstab/rational_poly.hpp"

namespace springerstab::reference {

// Golden values of f_{k,r}. Each entry stores the integer numerator
// coefficients ascending by power over the common denominator k!, exactly
// as displayed by to_display_string modulo coefficient order; the display
// form is kept alongside for eyeball auditing.
struct FkrEntry {
  int k;
  int r;
  long long den;
  std::string_view nums;  // k+1 integers, ascending by power
};

inline constexpr std::array<FkrEntry, 47> fkr_table = {{
    // r = 2
    {0, 2, 1, "1"},                                         // 1
    {1, 2, 1, "-1,1"},                                      // x-1
    {2, 2, 2, "0,-3,1"},                                    // (x^2-3x)/2
    {3, 2, 6, "0,5,-6,1"},                                  // (x^3-6x^2+5x)/6
    {4, 2, 24, "0,-14,23,-10,1"},                           // (x^4-10x^3+23x^2-14x)/24
    {5, 2, 120, "0,54,-105,65,-15,1"},                      // (x^5-15x^4+65x^3-105x^2+54x)/120
    {6, 2, 720, "0,-264,574,-435,145,-21,1"},               // (x^6-21x^5+145x^4-435x^3+574x^2-264x)/720
    {7, 2, 5040, "0,1560,-3682,3199,-1330,280,-28,1"},      // (x^7-28x^6+280x^5-1330x^4+3199x^3-3682x^2+1560x)/5040
    // r = 3
    {0, 3, 1, "1"},                                         // 1
    {1, 3, 1, "-1,1"},                                      // x-1
    {2, 3, 2, "-2,-1,1"},                                   // (x^2-x-2)/2
    {3, 3, 6, "6,-13,0,1"},                                 // (x^3-13x+6)/6
    {4, 3, 24, "0,34,-37,2,1"},                             // (x^4+2x^3-37x^2+34x)/24
    {5, 3, 120, "0,134,55,-75,5,1"},                        // (x^5+5x^4-75x^3+55x^2+134x)/120
    {6, 3, 720, "0,-1044,1204,-45,-125,9,1"},               // (x^6+9x^5-125x^4-45x^3+1204x^2-1044x)/720
    {7, 3, 5040, "0,2652,-7084,5089,-490,-182,14,1"},       // (x^7+14x^6-182x^5-490x^4+5089x^3-7084x^2+2652x)/5040
    // r = 4
    {0, 4, 1, "1"},                                         // 1
    {1, 4, 1, "-1,1"},                                      // x-1
    {2, 4, 2, "-2,-1,1"},                                   // (x^2-x-2)/2
    {3, 4, 6, "0,-7,0,1"},                                  // (x^3-7x)/6
    {4, 4, 24, "24,-38,-13,2,1"},                           // (x^4+2x^3-13x^2-38x+24)/24
    {5, 4, 120, "120,194,-185,-15,5,1"},                    // (x^5+5x^4-15x^3-185x^2+194x+120)/120
    {6, 4, 720, "-720,1596,364,-525,-5,9,1"},               // (x^6+9x^5-5x^4-525x^3+364x^2+1596x-720)/720
    {7, 4, 5040, "0,-1968,8666,-581,-1120,28,14,1"},        // (x^7+14x^6+28x^5-1120x^4-581x^3+8666x^2-1968x)/5040
    // r = 5
    {0, 5, 1, "1"},                                         // 1
    {1, 5, 1, "-1,1"},                                      // x-1
    {2, 5, 2, "-2,-1,1"},                                   // (x^2-x-2)/2
    {3, 5, 6, "0,-7,0,1"},                                  // (x^3-7x)/6
    {4, 5, 24, "0,-14,-13,2,1"},                            // (x^4+2x^3-13x^2-14x)/24
    {5, 5, 120, "240,-166,-65,-15,5,1"},                    // (x^5+5x^4-15x^3-65x^2-166x+240)/120
    {6, 5, 720, "0,1956,-1076,-165,-5,9,1"},                // (x^6+9x^5-5x^4-165x^3-1076x^2+1956x)/720
    {7, 5, 5040, "0,8952,5306,-3941,-280,28,14,1"},         // (x^7+14x^6+28x^5-280x^4-3941x^3+5306x^2+8952x)/5040
    // r = 6
    {0, 6, 1, "1"},                                         // 1
    {1, 6, 1, "-1,1"},                                      // x-1
    {2, 6, 2, "-2,-1,1"},                                   // (x^2-x-2)/2
    {3, 6, 6, "0,-7,0,1"},                                  // (x^3-7x)/6
    {4, 6, 24, "0,-14,-13,2,1"},                            // (x^4+2x^3-13x^2-14x)/24
    {5, 6, 120, "120,-46,-65,-15,5,1"},                     // (x^5+5x^4-15x^3-65x^2-46x+120)/120
    {6, 6, 720, "720,-204,-356,-165,-5,9,1"},               // (x^6+9x^5-5x^4-165x^3-356x^2-204x+720)/720
    {7, 6, 5040, "5040,11472,-4774,-1421,-280,28,14,1"},    // (x^7+14x^6+28x^5-280x^4-1421x^3-4774x^2+11472x+5040)/5040
    // r = 7
    {5, 7, 120, "120,-46,-65,-15,5,1"},                     // (x^5+5x^4-15x^3-65x^2-46x+120)/120
    {6, 7, 720, "0,516,-356,-165,-5,9,1"},                  // (x^6+9x^5-5x^4-165x^3-356x^2+516x)/720
    {7, 7, 5040, "10080,-3648,266,-1421,-280,28,14,1"},     // (x^7+14x^6+28x^5-280x^4-1421x^3+266x^2-3648x+10080)/5040
    // r = 8
    {5, 8, 120, "120,-46,-65,-15,5,1"},                     // (x^5+5x^4-15x^3-65x^2-46x+120)/120
    {6, 8, 720, "0,516,-356,-165,-5,9,1"},                  // (x^6+9x^5-5x^4-165x^3-356x^2+516x)/720
    {7, 8, 5040, "5040,1392,266,-1421,-280,28,14,1"},       // (x^7+14x^6+28x^5-280x^4-1421x^3+266x^2+1392x+5040)/5040
    // r = 9
    {7, 9, 5040, "5040,1392,266,-1421,-280,28,14,1"},       // (x^7+14x^6+28x^5-280x^4-1421x^3+266x^2+1392x+5040)/5040
}};

inline RationalPoly parse_entry(const FkrEntry& e) {
  std::vector<Rational> coeffs;
  std::string nums(e.nums);
  std::size_t pos = 0;
  while (pos <= nums.size()) {
    auto comma = nums.find(',', pos);
    std::string tok =
        nums.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    coeffs.push_back(make_rational(Int(tok), Int(e.den)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return RationalPoly(std::move(coeffs));
}

}  // namespace springerstab::reference
