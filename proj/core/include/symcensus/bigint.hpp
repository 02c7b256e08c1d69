#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace symcensus {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace symcensus
