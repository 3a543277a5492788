#pragma once

#include <string_view>
#include <vector>
#include <string>

#include "arith/multiplicative.hpp"

namespace arith::builtins {

MultiplicativeSpec mobius();            // mu: mu(p) = -1, mu(p^k) = 0 for k >= 2
MultiplicativeSpec one();               // 1(n) = 1
MultiplicativeSpec epsilon();           // convolution identity; rule == 0
MultiplicativeSpec identity();          // id(p^k) = p^k
MultiplicativeSpec reciprocal_identity();  // p^-k
MultiplicativeSpec liouville();         // (-1)^k
MultiplicativeSpec squarefree_indicator();  // 1 on k = 1, 0 for k >= 2

/// Lookup by name: mu, one, epsilon, id, recip_id, liouville, squarefree.
/// Also accepts the aliases "mobius", "1", "eps", "reciprocal_id".
MultiplicativeSpec by_name(std::string_view name);
std::vector<std::string> names();

}  // namespace arith::builtins
