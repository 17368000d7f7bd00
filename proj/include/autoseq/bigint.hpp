#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace autoseq {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace autoseq
