#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ecm {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace ecm
