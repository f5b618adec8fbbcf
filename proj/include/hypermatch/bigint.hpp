#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hypermatch {

using BigInt = boost::multiprecision::cpp_int;

} // namespace hypermatch
