#pragma once

#include <string>

namespace qosc {

// q-power for an internal p-exponent: "" for 0, "q", "q^2", "q^-1", "q^(1/4)", "q^(-3/2)".
std::string render_q_power(int p_exponent);

// Variable power: "" for 0, "z", "z^3", "z^-2".
std::string render_var_power(const char* name, int exponent);

}  // namespace qosc
