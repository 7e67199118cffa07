#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace gbcount {

using Rational = boost::rational<std::int64_t>;

}  // namespace gbcount
