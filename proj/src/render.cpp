#include "qosc/render.hpp"

#include <cstdlib>
#include <numeric>

namespace qosc {

std::string render_q_power(int p_exponent) {
  if (p_exponent == 0) return "";
  if (p_exponent == 4) return "q";
  if (p_exponent % 4 == 0) return "q^" + std::to_string(p_exponent / 4);
  const int g = std::gcd(std::abs(p_exponent), 4);
  return "q^(" + std::to_string(p_exponent / g) + "/" + std::to_string(4 / g) + ")";
}

std::string render_var_power(const char* name, int exponent) {
  if (exponent == 0) return "";
  if (exponent == 1) return name;
  return std::string(name) + "^" + std::to_string(exponent);
}

}  // namespace qosc
