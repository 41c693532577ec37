#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace revpal
{

/// Exact non-negative integer for census counts.
using BigCount = boost::multiprecision::cpp_int;

} // namespace revpal
