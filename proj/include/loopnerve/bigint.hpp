#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace loopnerve {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace loopnerve
